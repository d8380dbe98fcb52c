#include "tiltcell/characters.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>

#include "tiltcell/errors.hpp"

namespace tiltcell {

bool is_wf_invariant(const RootSystem& rs, const Character& ch) {
  int n = rs.rank();
  for (const auto& [w, m] : ch) {
    for (int i = 0; i < n; ++i) {
      Vec r = w;
      long long wi = w[i];
      for (int k = 0; k < n; ++k) r[k] -= wi * rs.datum.at(k, i);
      auto it = ch.find(r);
      if (it == ch.end() || it->second != m) return false;
    }
  }
  return true;
}

const Character& CharTable::weight_multiplicities(const Vec& lambda) const {
  require(is_dominant(lambda), "weight_multiplicities needs a dominant weight");
  {
    std::shared_lock lk(mutex_);
    auto it = mults_.find(lambda);
    if (it != mults_.end()) return *it->second;
  }
  auto ch = std::make_unique<Character>(compute_mults(lambda));
  std::unique_lock lk(mutex_);
  auto [it, inserted] = mults_.emplace(lambda, std::move(ch));
  (void)inserted;
  return *it->second;
}

// Freudenthal recursion over the dominant weights mu <= lambda:
//   (|lambda+rho|^2 - |mu+rho|^2) m(mu) = 2 sum_{a>0} sum_{k>=1} (mu+ka, a) m(mu+ka)
// with every inner product expressed through coroot pairings, so the whole
// computation stays in integers.
Character CharTable::compute_mults(const Vec& lambda) const {
  const RootSystem& rs = rs_;
  int n = rs.rank();
  long long budget = 0;  // sum of root coordinates of lambda - mu is bounded by <lambda, rho^vee>
  for (size_t r = 0; r < rs.coroots.size(); ++r) budget += dot(lambda, rs.coroots[r]);

  // candidates: dominant mu = lambda - A c, coordinates of c summing to <= budget
  struct Cand {
    Vec mu;
    Vec c;  // root coordinates of lambda - mu
    long long depth;
  };
  std::vector<Cand> cands;
  {
    std::map<Vec, Vec> seen;  // mu -> c, over all vectors lambda - A c explored
    std::vector<std::pair<Vec, Vec>> frontier{{lambda, Vec(n, 0)}};
    seen.emplace(lambda, Vec(n, 0));
    while (!frontier.empty()) {
      std::vector<std::pair<Vec, Vec>> next;
      for (auto& [mu, c] : frontier) {
        long long depth = std::accumulate(c.begin(), c.end(), 0ll);
        if (depth >= budget) continue;
        for (int i = 0; i < n; ++i) {
          Vec m2 = mu;
          for (int k = 0; k < n; ++k) m2[k] -= rs.datum.at(k, i);
          Vec c2 = c;
          ++c2[i];
          if (seen.emplace(m2, c2).second) next.push_back({m2, c2});
        }
      }
      frontier = std::move(next);
    }
    for (auto& [mu, c] : seen)
      if (is_dominant(mu)) cands.push_back({mu, c, std::accumulate(c.begin(), c.end(), 0ll)});
  }
  std::sort(cands.begin(), cands.end(), [](const Cand& a, const Cand& b) {
    return a.depth != b.depth ? a.depth < b.depth : a.mu < b.mu;
  });

  std::unordered_map<Vec, long long, VecHash> dom_mult;  // dominant mu -> multiplicity
  Vec two_rho = 2 * rs.rho;
  for (const auto& cand : cands) {
    if (cand.depth == 0) {
      dom_mult[cand.mu] = 1;
      continue;
    }
    long long num = 0;
    for (size_t r = 0; r < rs.positive_roots.size(); ++r) {
      long long d_alpha = rs.root_norm2[r] / 2;
      Vec nu = cand.mu;
      Vec cc = cand.c;
      for (int k = 1;; ++k) {
        nu = nu + rs.positive_roots_wc[r];
        cc = cc - rs.positive_roots[r];
        if (!all_nonneg(cc)) break;  // nu above lambda in the root order
        auto it = dom_mult.find(dominant_rep_linear(rs, nu));
        if (it == dom_mult.end() || it->second == 0) continue;
        num += d_alpha * dot(nu, rs.coroots[r]) * it->second;
        (void)k;
      }
    }
    // denominator (lambda+mu+2rho, lambda-mu)
    Vec s = lambda + cand.mu + two_rho;
    long long den = 0;
    for (int i = 0; i < n; ++i) den += cand.c[i] * rs.symmetrizer[i] * s[i];
    require(den > 0, "Freudenthal denominator not positive");
    require((2 * num) % den == 0, "Freudenthal division not exact");
    long long m = 2 * num / den;
    require(m >= 0, "negative Freudenthal multiplicity");
    if (m > 0) dom_mult[cand.mu] = m;
  }

  Character full;
  for (const auto& [mu, m] : dom_mult)
    if (m > 0)
      for (const auto& w : weyl_orbit(rs, mu)) full[w] = m;
  return full;
}

long long CharTable::weyl_dim(const Vec& lambda) const {
  require(is_dominant(lambda), "weyl_dim needs a dominant weight");
  {
    std::shared_lock lk(mutex_);
    auto it = dims_.find(lambda);
    if (it != dims_.end()) return it->second;
  }
  const RootSystem& rs = rs_;
  Vec lr = lambda + rs.rho;
  // product of <lambda+rho, a^vee> / <rho, a^vee>, reduced at every step so
  // intermediates stay in range
  __int128 num = 1, den = 1;
  auto reduce = [&] {
    __int128 a = num < 0 ? -num : num, b = den;
    while (b != 0) {
      __int128 t = a % b;
      a = b;
      b = t;
    }
    if (a > 1) {
      num /= a;
      den /= a;
    }
  };
  for (size_t r = 0; r < rs.coroots.size(); ++r) {
    num *= dot(lr, rs.coroots[r]);
    den *= dot(rs.rho, rs.coroots[r]);
    reduce();
    require(num <= INT64_MAX && num >= INT64_MIN, "weyl_dim overflow");
  }
  require(den == 1, "weyl_dim division not exact");
  long long dim = static_cast<long long>(num);
  require(dim > 0, "weyl_dim not positive");
  std::unique_lock lk(mutex_);
  dims_.emplace(lambda, dim);
  return dim;
}

std::map<Vec, long long> tensor_weyl_factors(const CharTable& ct, const Vec& lambda,
                                             const Vec& mu) {
  const RootSystem& rs = ct.root_system();
  require(is_dominant(lambda) && is_dominant(mu), "tensor_weyl_factors needs dominant weights");
  std::map<Vec, long long> acc;
  for (const auto& [omega, c] : ct.weight_multiplicities(mu)) {
    SignedDom sd = dominant_rep_signed(rs, lambda + omega);
    if (sd.zero) continue;
    acc[sd.dom] += c * sd.sign;
  }
  for (auto it = acc.begin(); it != acc.end();) {
    require(it->second >= 0, "negative Weyl factor multiplicity in tensor product");
    it = it->second == 0 ? acc.erase(it) : std::next(it);
  }
  // dimension conservation, exact
  __int128 total = 0;
  for (const auto& [nu, m] : acc) total += static_cast<__int128>(m) * ct.weyl_dim(nu);
  require(total == static_cast<__int128>(ct.weyl_dim(lambda)) * ct.weyl_dim(mu),
          "dimension not conserved in tensor product");
  return acc;
}

}  // namespace tiltcell
