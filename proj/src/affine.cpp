#include "tiltcell/affine.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "tiltcell/errors.hpp"

namespace tiltcell {

AffineGroup::AffineGroup(const RootSystem& rs, long long level) : rs_(rs), l_(level) {
  if (l_ <= rs_.coxeter_number)
    throw ConfigError("level l = " + std::to_string(l_) + " must exceed the Coxeter number h = " +
                      std::to_string(rs_.coxeter_number));
  theta_ = rs_.highest_short_root;

  // the reflection by the highest short root as a W_f element
  {
    int n = rank();
    Mat m = mat_identity(n);
    const Vec& theta_wc = rs_.positive_roots_wc[theta_];
    const Vec& theta_cv = rs_.coroots[theta_];
    for (int k = 0; k < n; ++k)
      for (int j = 0; j < n; ++j) m[k * n + j] -= theta_wc[k] * theta_cv[j];
    int idx = -1;
    for (int w = 0; w < rs_.wf.size(); ++w)
      if (rs_.wf.matrix(w) == m) {
        idx = w;
        break;
      }
    require(idx >= 0, "reflection by the highest short root not found in W_f");
    s_theta_ = idx;
  }

  // u^{-1}(alpha_r) as a signed root index, for the length formula
  {
    std::map<Vec, int> root_index;
    for (size_t r = 0; r < rs_.positive_roots.size(); ++r)
      root_index[rs_.positive_roots[r]] = static_cast<int>(r);
    root_action_.assign(rs_.wf.size(), std::vector<int>(rs_.positive_roots.size(), 0));
    for (int u = 0; u < rs_.wf.size(); ++u) {
      int uinv = rs_.wf.inverse(u);
      for (size_t r = 0; r < rs_.positive_roots.size(); ++r) {
        Vec img = rs_.wf.apply_root(uinv, rs_.positive_roots[r]);
        auto it = root_index.find(img);
        if (it != root_index.end()) {
          root_action_[u][r] = it->second + 1;
        } else {
          Vec neg(img.size());
          for (size_t k = 0; k < img.size(); ++k) neg[k] = -img[k];
          auto jt = root_index.find(neg);
          require(jt != root_index.end(), "root image is not a root");
          root_action_[u][r] = -(jt->second + 1);
        }
      }
    }
  }

  // <alpha_j, alpha_r^vee> table: pairing of a root-lattice vector against a coroot
  coroot_on_lattice_.resize(rs_.positive_roots.size());
  for (size_t r = 0; r < rs_.positive_roots.size(); ++r) {
    Vec row(rank());
    for (int j = 0; j < rank(); ++j) {
      Vec e(rank(), 0);
      e[j] = 1;
      row[j] = tiltcell::dot(rs_.root_to_weight(e), rs_.coroots[r]);
    }
    coroot_on_lattice_[r] = row;
  }

  simple_root_idx_.assign(rank(), -1);
  for (size_t r = 0; r < rs_.positive_roots.size(); ++r) {
    const Vec& c = rs_.positive_roots[r];
    long long total = 0;
    int which = -1;
    for (int j = 0; j < rank(); ++j) {
      total += c[j];
      if (c[j] == 1) which = j;
    }
    if (total == 1) simple_root_idx_[which] = static_cast<int>(r);
  }
  for (int i = 0; i < rank(); ++i) require(simple_root_idx_[i] >= 0, "simple root missing");

  if (rank() <= 3) verify_braid_relations();
}

std::optional<std::string> AffineGroup::level_hypothesis_warning() const {
  std::string w;
  if (l_ % 2 == 0) w += "l is even; ";
  if (rs_.datum.family == Family::G && l_ % 3 == 0) w += "l is divisible by 3 in type G2; ";
  if (w.empty()) return std::nullopt;
  return w + "results are uniform in l > h but lie outside the usual standing hypotheses";
}

AffineElement AffineGroup::gen(int s) const {
  require(s >= 0 && s <= rank(), "generator index out of range");
  if (s == 0) return {s_theta_, rs_.positive_roots[theta_]};
  return {rs_.wf.simple(s - 1), Vec(rank(), 0)};
}

AffineElement AffineGroup::mul(const AffineElement& a, const AffineElement& b) const {
  return {rs_.wf.mult(a.u, b.u), a.t + rs_.wf.apply_root(a.u, b.t)};
}

AffineElement AffineGroup::inv(const AffineElement& a) const {
  int ui = rs_.wf.inverse(a.u);
  Vec t = rs_.wf.apply_root(ui, a.t);
  for (auto& x : t) x = -x;
  return {ui, t};
}

Vec AffineGroup::act(const AffineElement& a, const Vec& weight) const {
  return rs_.wf.apply(a.u, weight) + l_ * rs_.root_to_weight(a.t);
}

Vec AffineGroup::dot(const AffineElement& a, const Vec& weight) const {
  return act(a, weight + rs_.rho) - rs_.rho;
}

// Number of affine hyperplanes <x, alpha^vee> = m l separating the open
// fundamental alcove from its image:
//   sum over positive alpha of |k| if u^{-1}alpha > 0 else |k - 1|,
// where k = <t, alpha^vee>.
long long AffineGroup::length(const AffineElement& a) const {
  long long len = 0;
  for (size_t r = 0; r < rs_.positive_roots.size(); ++r) {
    long long k = pair_translation(a.t, static_cast<int>(r));
    if (root_action_[a.u][r] < 0) k -= 1;
    len += std::llabs(k);
  }
  return len;
}

bool AffineGroup::is_right_descent(const AffineElement& a, int s) const {
  return length(mul_gen(a, s)) < length(a);
}

std::vector<int> AffineGroup::right_descents(const AffineElement& a) const {
  std::vector<int> ds;
  for (int s = 0; s <= rank(); ++s)
    if (is_right_descent(a, s)) ds.push_back(s);
  return ds;
}

bool AffineGroup::is_left_descent(int s, const AffineElement& a) const {
  return length(mul(gen(s), a)) < length(a);
}

// (u,t) has a dominant alcove iff for every simple alpha_i:
// k_i >= 0 when u^{-1}alpha_i > 0 and k_i >= 1 when u^{-1}alpha_i < 0,
// where k_i = <t, alpha_i^vee>.
bool AffineGroup::is_min_rep(const AffineElement& a) const {
  for (int i = 0; i < rank(); ++i) {
    int r = simple_root_idx_[i];
    long long k = pair_translation(a.t, r);
    long long need = root_action_[a.u][r] < 0 ? 1 : 0;
    if (k < need) return false;
  }
  return true;
}

std::vector<int> AffineGroup::lexmin_word(AffineElement a) const {
  std::vector<int> word;
  long long len = length(a);
  while (len > 0) {
    int found = -1;
    for (int s = 0; s <= rank(); ++s) {
      if (length(mul(gen(s), a)) < len) {
        found = s;
        break;
      }
    }
    require(found >= 0, "element of positive length with no left descent");
    a = mul(gen(found), a);
    --len;
    word.push_back(found);
  }
  require(length(a) == 0 && a.u == 0 && is_zero(a.t), "word extraction did not reach identity");
  return word;
}

AffineElement AffineGroup::from_word(const std::vector<int>& word) const {
  AffineElement a = identity();
  for (int s : word) a = mul_gen(a, s);
  return a;
}

bool AffineGroup::in_fundamental_domain(const Vec& weight) const {
  Vec nu = weight + rs_.rho;
  for (int i = 0; i < rank(); ++i)
    if (nu[i] < 0) return false;
  return tiltcell::dot(nu, rs_.coroots[theta_]) <= l_;
}

std::pair<AffineElement, Vec> AffineGroup::walk_to_fundamental(const Vec& weight) const {
  Vec mu = weight;
  std::vector<int> applied;
  for (int guard = 0;; ++guard) {
    require(guard < 1000000, "alcove walk did not terminate");
    Vec nu = mu + rs_.rho;
    int wall = -1;
    for (int i = 0; i < rank(); ++i)
      if (nu[i] < 0) {
        wall = i + 1;
        break;
      }
    if (wall < 0 && tiltcell::dot(nu, rs_.coroots[theta_]) > l_) wall = 0;
    if (wall < 0) break;
    mu = dot(gen(wall), mu);
    applied.push_back(wall);
  }
  AffineElement x = identity();
  for (int s : applied) x = mul_gen(x, s);
  return {x, mu};
}

ResolvedWeight AffineGroup::resolve_dominant(const Vec& weight) const {
  require(is_dominant(weight), "resolve_dominant needs a dominant weight");
  auto [x, lambda0] = walk_to_fundamental(weight);
  // strip to the minimal representative of x Stab(lambda0)
  for (bool moved = true; moved;) {
    moved = false;
    for (int s = 0; s <= rank(); ++s) {
      if (dot(gen(s), lambda0) != lambda0) continue;
      AffineElement xs = mul_gen(x, s);
      if (length(xs) < length(x)) {
        x = xs;
        moved = true;
      }
    }
  }
  require(is_min_rep(x), "resolved representative is not minimal");
  require(dot(x, lambda0) == weight, "resolve_dominant round trip failed");
  return {rep(x), lambda0};
}

Stabilizer AffineGroup::stabilizer(const Vec& lambda0) const {
  require(in_fundamental_domain(lambda0), "stabilizer needs a point of the fundamental domain");
  Stabilizer st;
  for (int s = 0; s <= rank(); ++s)
    if (dot(gen(s), lambda0) == lambda0) st.gens.push_back(s);
  std::vector<AffineElement> elems{identity()};
  std::unordered_map<AffineElement, bool, AEHash> seen{{identity(), true}};
  for (size_t head = 0; head < elems.size(); ++head) {
    AffineElement cur = elems[head];
    require(elems.size() <= 1u << 20, "stabilizer unexpectedly large");
    for (int s : st.gens) {
      AffineElement nx = mul_gen(cur, s);
      if (seen.emplace(nx, true).second) elems.push_back(nx);
    }
  }
  for (const auto& e : elems) {
    require(dot(e, lambda0) == lambda0, "stabilizer element does not fix the point");
    st.elems.push_back(rep(e));
  }
  std::sort(st.elems.begin(), st.elems.end(), [](const WfRep& a, const WfRep& b) {
    return a.length() != b.length() ? a.length() < b.length() : a.word < b.word;
  });
  return st;
}

CosetExtremes AffineGroup::coset_extremes(const WfRep& w, const Stabilizer& stab) const {
  require(is_min_rep(w.elem), "coset_extremes needs a minimal representative");
  std::vector<WfRep> in_wf;
  long long max_len = -1;
  AffineElement full_max;
  for (const auto& x : stab.elems) {
    AffineElement wx = mul(w.elem, x.elem);
    long long len = length(wx);
    require(len == w.length() + x.length(), "length not additive on the stabilizer coset");
    if (len > max_len) {
      max_len = len;
      full_max = wx;
    }
    if (is_min_rep(wx)) in_wf.push_back(rep(wx));
  }
  require(!in_wf.empty(), "coset contains no minimal representative");
  auto cmp = [](const WfRep& a, const WfRep& b) { return a.length() < b.length(); };
  auto mn = std::min_element(in_wf.begin(), in_wf.end(), cmp);
  auto mx = std::max_element(in_wf.begin(), in_wf.end(), cmp);
  long long nmin = std::count_if(in_wf.begin(), in_wf.end(),
                                 [&](const WfRep& a) { return a.length() == mn->length(); });
  long long nmax = std::count_if(in_wf.begin(), in_wf.end(),
                                 [&](const WfRep& a) { return a.length() == mx->length(); });
  require(nmin == 1 && nmax == 1, "coset extremes are not unique");
  return {*mn, *mx, is_min_rep(full_max)};
}

std::vector<WfRep> AffineGroup::ball(int max_length) const {
  require(max_length >= 0, "ball needs a nonnegative length bound");
  std::vector<WfRep> out{rep(identity())};
  std::unordered_map<AffineElement, bool, AEHash> seen{{identity(), true}};
  std::vector<AffineElement> shell{identity()};
  for (int len = 0; len < max_length; ++len) {
    std::vector<AffineElement> next;
    for (const auto& w : shell) {
      for (int s = 0; s <= rank(); ++s) {
        AffineElement ws = mul_gen(w, s);
        if (length(ws) != len + 1 || !is_min_rep(ws)) continue;
        if (seen.emplace(ws, true).second) next.push_back(ws);
      }
    }
    for (const auto& w : next) out.push_back(rep(w));
    shell = std::move(next);
  }
  std::sort(out.begin(), out.end(), [](const WfRep& a, const WfRep& b) {
    return a.length() != b.length() ? a.length() < b.length() : a.word < b.word;
  });
  return out;
}

std::vector<Vec> AffineGroup::enumerate_dominant_in_region(const std::vector<WfRep>& alcoves) const {
  std::vector<Vec> out;
  if (alcoves.empty()) return out;
  long long max_len = 0;
  for (const auto& w : alcoves) max_len = std::max(max_len, w.length());
  long long bound = (max_len + 1) * l_;
  std::vector<AffineElement> inverses;
  inverses.reserve(alcoves.size());
  for (const auto& w : alcoves) inverses.push_back(inv(w.elem));

  const Vec& theta_cv = rs_.coroots[theta_];
  Vec lambda(rank(), 0);
  // enumerate dominant weights with <lambda + rho, theta^vee> <= bound
  auto member = [&](const Vec& lam) {
    for (const auto& xi : inverses)
      if (in_fundamental_domain(dot(xi, lam))) return true;
    return false;
  };
  std::function<void(int, long long)> rec = [&](int i, long long used) {
    if (i == rank()) {
      if (member(lambda)) out.push_back(lambda);
      return;
    }
    for (long long v = 0;; ++v) {
      long long used2 = used + (v + 1) * theta_cv[i];
      if (used2 > bound) break;
      lambda[i] = v;
      rec(i + 1, used2);
    }
    lambda[i] = 0;
  };
  rec(0, 0);
  std::sort(out.begin(), out.end());
  return out;
}

std::pair<int, AffineElement> AffineGroup::split_finite(AffineElement x) const {
  int parity = 0;
  for (bool moved = true; moved;) {
    moved = false;
    for (int s = 1; s <= rank(); ++s) {
      if (is_left_descent(s, x)) {
        x = mul(gen(s), x);
        ++parity;
        moved = true;
        break;
      }
    }
  }
  require(is_min_rep(x), "finite split did not reach a minimal representative");
  return {parity % 2 == 0 ? 1 : -1, x};
}

// The expected pairwise orders follow from the Cartan pairings of the walls:
// product 0 -> order 2, 1 -> 3, 2 -> 4, 3 -> 6 and 4 -> infinity.
void AffineGroup::verify_braid_relations() const {
  int ngen = rank() + 1;
  auto pair_prod = [&](int a, int b) -> long long {
    // <alpha_a, alpha_b^vee><alpha_b, alpha_a^vee> for wall roots (0 = theta)
    Vec ra = a == 0 ? rs_.positive_roots[theta_] : Vec{},
        rb = b == 0 ? rs_.positive_roots[theta_] : Vec{};
    int ia = a == 0 ? theta_ : -1, ib = b == 0 ? theta_ : -1;
    if (a > 0) {
      Vec e(rank(), 0);
      e[a - 1] = 1;
      ra = e;
      for (size_t r = 0; r < rs_.positive_roots.size(); ++r)
        if (rs_.positive_roots[r] == e) ia = static_cast<int>(r);
    }
    if (b > 0) {
      Vec e(rank(), 0);
      e[b - 1] = 1;
      rb = e;
      for (size_t r = 0; r < rs_.positive_roots.size(); ++r)
        if (rs_.positive_roots[r] == e) ib = static_cast<int>(r);
    }
    return tiltcell::dot(ra, coroot_on_lattice_[ib]) * tiltcell::dot(rb, coroot_on_lattice_[ia]);
  };
  for (int a = 0; a < ngen; ++a) {
    AffineElement sq = mul(gen(a), gen(a));
    require(sq == identity(), "generator is not an involution");
    for (int b = a + 1; b < ngen; ++b) {
      long long p = pair_prod(a, b);
      long long expect = p == 0 ? 2 : p == 1 ? 3 : p == 2 ? 4 : p == 3 ? 6 : -1;
      AffineElement ab = mul(gen(a), gen(b));
      AffineElement cur = identity();
      int first_id = -1;
      for (int k = 1; k <= 12; ++k) {
        cur = mul(cur, ab);
        if (cur == identity()) {
          first_id = k;
          break;
        }
      }
      if (expect < 0)
        require(first_id < 0, "expected infinite braid order");
      else
        require(first_id == expect, "braid relation violated");
    }
  }
}

}  // namespace tiltcell
