#include "tiltcell/rootdata.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>

#include "tiltcell/errors.hpp"

namespace tiltcell {

namespace {

// Leading principal minors by Bareiss elimination; exact for the small
// integer matrices seen here.
std::vector<long long> leading_minors(const Mat& m, int n) {
  std::vector<std::vector<long long>> a(n, std::vector<long long>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a[i][j] = m[i * n + j];
  std::vector<long long> minors(n);
  long long prev = 1;
  for (int k = 0; k < n; ++k) {
    if (k > 0) {
      for (int i = k; i < n; ++i)
        for (int j = k; j < n; ++j) {
          __int128 num = (__int128)a[i][j] * a[k - 1][k - 1] - (__int128)a[i][k - 1] * a[k - 1][j];
          a[i][j] = static_cast<long long>(num / prev);
        }
      prev = a[k - 1][k - 1];
    }
    minors[k] = a[k][k];
  }
  return minors;  // minors[k] = det of leading (k+1)x(k+1) block
}

}  // namespace

CartanDatum CartanDatum::standard(Family f, int rank) {
  auto bad = [&](const char* why) {
    throw ConfigError(std::string("unsupported Cartan type ") + static_cast<char>(f) +
                      std::to_string(rank) + ": " + why);
  };
  CartanDatum d{f, rank, Mat(static_cast<size_t>(rank) * rank, 0)};
  auto set = [&](int i, int j, long long v) { d.cartan[i * rank + j] = v; };
  for (int i = 0; i < rank; ++i) set(i, i, 2);
  auto chain = [&](int i, int j) {  // simply-laced bond
    set(i, j, -1);
    set(j, i, -1);
  };
  switch (f) {
    case Family::A:
      if (rank < 1) bad("rank must be >= 1");
      for (int i = 0; i + 1 < rank; ++i) chain(i, i + 1);
      break;
    case Family::B:
      // alpha_rank short: <alpha_{n-1}, alpha_n^vee> = -2
      if (rank < 2) bad("rank must be >= 2");
      for (int i = 0; i + 2 < rank; ++i) chain(i, i + 1);
      set(rank - 2, rank - 1, -1);
      set(rank - 1, rank - 2, -2);
      break;
    case Family::C:
      if (rank < 2) bad("rank must be >= 2");
      for (int i = 0; i + 2 < rank; ++i) chain(i, i + 1);
      set(rank - 2, rank - 1, -2);
      set(rank - 1, rank - 2, -1);
      break;
    case Family::D:
      if (rank < 4) bad("rank must be >= 4");
      for (int i = 0; i + 2 < rank; ++i) chain(i, i + 1);
      chain(rank - 3, rank - 1);
      break;
    case Family::E: {
      if (rank < 6 || rank > 8) bad("rank must be 6, 7 or 8");
      // Bourbaki numbering: chain 1-3-4-5-...-n, node 2 attached to node 4.
      chain(0, 2);
      for (int i = 2; i + 1 < rank; ++i) chain(i, i + 1);
      chain(1, 3);
      break;
    }
    case Family::F:
      if (rank != 4) bad("rank must be 4");
      chain(0, 1);
      set(1, 2, -1);
      set(2, 1, -2);
      chain(2, 3);
      break;
    case Family::G:
      if (rank != 2) bad("rank must be 2");
      set(0, 1, -3);
      set(1, 0, -1);
      break;
  }
  d.validate();
  return d;
}

CartanDatum CartanDatum::parse(const std::string& name) {
  if (name.size() < 2 || name[0] < 'A' || name[0] > 'G')
    throw ConfigError("cannot parse Cartan type '" + name + "' (expected e.g. A1, B2, G2)");
  int rank = 0;
  for (size_t i = 1; i < name.size(); ++i) {
    if (name[i] < '0' || name[i] > '9')
      throw ConfigError("cannot parse Cartan type '" + name + "'");
    rank = rank * 10 + (name[i] - '0');
  }
  return standard(static_cast<Family>(name[0]), rank);
}

std::string CartanDatum::name() const {
  return std::string(1, static_cast<char>(family)) + std::to_string(rank);
}

void CartanDatum::validate() const {
  require(rank >= 1 && cartan.size() == static_cast<size_t>(rank) * rank,
          "Cartan matrix has wrong shape");
  for (int i = 0; i < rank; ++i) {
    if (at(i, i) != 2) throw ConfigError("Cartan diagonal entry " + std::to_string(i) + " is not 2");
    for (int j = 0; j < rank; ++j) {
      if (i == j) continue;
      if (at(i, j) > 0) throw ConfigError("positive off-diagonal Cartan entry");
      if ((at(i, j) == 0) != (at(j, i) == 0))
        throw ConfigError("Cartan zero pattern is not symmetric");
    }
  }
  auto minors = leading_minors(cartan, rank);
  for (int k = 0; k < rank; ++k)
    if (minors[k] <= 0)
      throw ConfigError("not of finite type: leading principal minor " + std::to_string(k + 1) +
                        " equals " + std::to_string(minors[k]));
}

WeylGroup::WeylGroup(const CartanDatum& d) : rank_(d.rank) {
  int n = rank_;
  // generator matrices
  std::vector<Mat> gen_w(n), gen_r(n);
  for (int i = 0; i < n; ++i) {
    Mat mw = mat_identity(n);  // s_i(lambda)_k = lambda_k - lambda_i a_{ki}
    for (int k = 0; k < n; ++k) mw[k * n + i] -= d.at(k, i);
    gen_w[i] = mw;
    Mat mr = mat_identity(n);  // on root coords: c -> c - (row_i . c) e_i
    for (int j = 0; j < n; ++j) mr[i * n + j] -= d.at(i, j);
    gen_r[i] = mr;
  }
  wmat_.push_back(mat_identity(n));
  rmat_.push_back(mat_identity(n));
  length_.push_back(0);
  word_.push_back({});
  index_[wmat_[0]] = 0;
  simple_.assign(n, -1);
  constexpr int kMaxElements = 2000000;
  for (size_t head = 0; head < wmat_.size(); ++head) {
    Mat base = wmat_[head];  // copy: vectors may reallocate below
    Mat base_r = rmat_[head];
    for (int i = 0; i < n; ++i) {
      Mat m = mat_mul(base, gen_w[i], n);
      if (index_.count(m)) continue;
      int idx = static_cast<int>(wmat_.size());
      require(idx < kMaxElements, "Weyl group too large to materialize");
      index_[m] = idx;
      wmat_.push_back(std::move(m));
      rmat_.push_back(mat_mul(base_r, gen_r[i], n));
      length_.push_back(length_[head] + 1);
      auto w = word_[head];
      w.push_back(i);
      word_.push_back(std::move(w));
      if (length_.back() == 1) simple_[i] = idx;
    }
  }
  inv_.assign(wmat_.size(), -1);
  for (int w = 0; w < size(); ++w) {
    Mat m = mat_identity(n);
    const auto& word = word_[w];
    for (auto it = word.rbegin(); it != word.rend(); ++it) m = mat_mul(m, gen_w[*it], n);
    auto f = index_.find(m);
    require(f != index_.end(), "Weyl group inverse not found");
    inv_[w] = f->second;
  }
}

int WeylGroup::mult(int a, int b) const {
  Mat m = mat_mul(wmat_[a], wmat_[b], static_cast<size_t>(rank_));
  auto f = index_.find(m);
  require(f != index_.end(), "Weyl group product not found");
  return f->second;
}

Vec RootSystem::root_to_weight(const Vec& root_coords) const {
  int n = rank();
  Vec w(n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) w[i] += datum.at(i, j) * root_coords[j];
  return w;
}

bool RootSystem::weight_to_root(const Vec& weight, Vec& out) const {
  int n = rank();
  out.assign(n, 0);
  for (int i = 0; i < n; ++i) {
    long long s = 0;
    for (int j = 0; j < n; ++j) s += cartan_adjugate[i * n + j] * weight[j];
    if (s % cartan_det != 0) return false;
    out[i] = s / cartan_det;
  }
  return true;
}

bool RootSystem::dominance_leq(const Vec& mu, const Vec& lambda) const {
  Vec c;
  if (!weight_to_root(lambda - mu, c)) return false;
  return all_nonneg(c);
}

long long RootSystem::height2(const Vec& weight) const {
  long long h = 0;
  for (const auto& cv : coroots) h += dot(weight, cv);
  return h;
}

RootSystem build_root_system(const CartanDatum& datum) {
  datum.validate();
  int n = datum.rank;
  RootSystem rs{datum,
                {},
                {},
                {},
                {},
                {},
                Vec(n, 1),
                0,
                -1,
                WeylGroup(datum),
                Mat(static_cast<size_t>(n) * n, 0),
                0};

  // symmetrizers d_i: smallest positive integers with d_i a_ij = d_j a_ji,
  // propagated along the Dynkin graph componentwise
  {
    std::vector<std::pair<long long, long long>> ratio(n, {0, 1});  // d_i as fraction
    std::vector<long long> d(n, 0);
    for (int start = 0; start < n; ++start) {
      if (d[start] != 0) continue;
      ratio[start] = {1, 1};
      std::deque<int> q{start};
      std::vector<int> comp{start};
      d[start] = -1;  // visited marker
      while (!q.empty()) {
        int i = q.front();
        q.pop_front();
        for (int j = 0; j < n; ++j) {
          if (j == i || datum.at(i, j) == 0 || d[j] != 0) continue;
          // d_j = d_i * a_ij / a_ji
          ratio[j] = {ratio[i].first * datum.at(i, j), ratio[i].second * datum.at(j, i)};
          long long g = std::gcd(std::abs(ratio[j].first), std::abs(ratio[j].second));
          ratio[j] = {std::abs(ratio[j].first) / g, std::abs(ratio[j].second) / g};
          d[j] = -1;
          q.push_back(j);
          comp.push_back(j);
        }
      }
      long long lcm_den = 1;
      for (int i : comp) lcm_den = std::lcm(lcm_den, ratio[i].second);
      long long g = 0;
      for (int i : comp) g = std::gcd(g, ratio[i].first * (lcm_den / ratio[i].second));
      for (int i : comp) d[i] = ratio[i].first * (lcm_den / ratio[i].second) / g;
    }
    rs.symmetrizer = d;
  }

  // positive roots: reflection closure of the simple roots in root coordinates
  {
    std::set<Vec> seen;
    std::deque<Vec> q;
    for (int i = 0; i < n; ++i) {
      Vec e(n, 0);
      e[i] = 1;
      seen.insert(e);
      q.push_back(e);
    }
    while (!q.empty()) {
      Vec c = q.front();
      q.pop_front();
      for (int i = 0; i < n; ++i) {
        long long p = 0;  // <alpha, alpha_i^vee> = row i of cartan . c
        for (int j = 0; j < n; ++j) p += datum.at(i, j) * c[j];
        Vec r = c;
        r[i] -= p;
        if (seen.insert(r).second) q.push_back(r);
      }
    }
    for (const auto& c : seen)
      if (all_nonneg(c) && !is_zero(c)) rs.positive_roots.push_back(c);
    std::sort(rs.positive_roots.begin(), rs.positive_roots.end());
  }

  for (const auto& c : rs.positive_roots) {
    rs.positive_roots_wc.push_back(rs.root_to_weight(c));
    // (alpha,alpha) with the form (alpha_i,alpha_j) = d_i a_ij
    long long norm2 = 0;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) norm2 += c[i] * c[j] * rs.symmetrizer[i] * datum.at(i, j);
    require(norm2 > 0, "nonpositive root norm");
    rs.root_norm2.push_back(norm2);
    Vec cv(n);
    for (int i = 0; i < n; ++i) {
      long long num = 2 * c[i] * rs.symmetrizer[i];
      require(num % norm2 == 0, "coroot coordinates are not integral");
      cv[i] = num / norm2;
    }
    rs.coroots.push_back(cv);
  }

  require(2 * rs.positive_roots.size() % n == 0, "|R| not divisible by rank");
  rs.coxeter_number = 2 * static_cast<long long>(rs.positive_roots.size()) / n;

  // the highest coroot is the unique coroot of maximal height; it is the
  // coroot of the highest short root
  {
    long long best = -1;
    int best_idx = -1, ties = 0;
    for (size_t r = 0; r < rs.coroots.size(); ++r) {
      long long h = 0;
      for (long long e : rs.coroots[r]) h += e;
      if (h > best) {
        best = h;
        best_idx = static_cast<int>(r);
        ties = 1;
      } else if (h == best) {
        ++ties;
      }
    }
    require(ties == 1, "highest coroot is not unique");
    rs.highest_short_root = best_idx;
    require(dot(rs.rho, rs.coroots[best_idx]) == rs.coxeter_number - 1,
            "<rho, highest coroot> != h - 1");
  }

  // adjugate of the Cartan matrix by cofactors (rank <= 8)
  {
    auto minor_det = [&](int skip_r, int skip_c) {
      std::vector<long long> sub;
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          if (i != skip_r && j != skip_c) sub.push_back(datum.at(i, j));
      int m = n - 1;
      if (m == 0) return 1ll;
      auto minors = leading_minors(sub, m);
      return minors[m - 1];
    };
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        long long c = minor_det(j, i);
        rs.cartan_adjugate[i * n + j] = ((i + j) % 2 == 0) ? c : -c;
      }
    auto minors = leading_minors(datum.cartan, n);
    rs.cartan_det = minors[n - 1];
  }

  return rs;
}

std::vector<Vec> weyl_orbit(const RootSystem& rs, const Vec& weight) {
  std::set<Vec> seen{weight};
  std::deque<Vec> q{weight};
  int n = rs.rank();
  while (!q.empty()) {
    Vec v = q.front();
    q.pop_front();
    for (int i = 0; i < n; ++i) {
      Vec r = v;
      long long vi = v[i];
      for (int k = 0; k < n; ++k) r[k] -= vi * rs.datum.at(k, i);
      if (seen.insert(r).second) q.push_back(r);
    }
  }
  return {seen.begin(), seen.end()};
}

SignedDom dominant_rep_signed(const RootSystem& rs, const Vec& lambda) {
  int n = rs.rank();
  Vec nu = lambda + rs.rho;
  int sign = 1;
  for (int guard = 0;; ++guard) {
    require(guard < 100000, "dominant reduction did not terminate");
    int neg = -1;
    for (int i = 0; i < n; ++i)
      if (nu[i] < 0) {
        neg = i;
        break;
      }
    if (neg < 0) break;
    long long vi = nu[neg];
    for (int k = 0; k < n; ++k) nu[k] -= vi * rs.datum.at(k, neg);
    sign = -sign;
  }
  for (int i = 0; i < n; ++i)
    if (nu[i] == 0) return {true, 0, {}};
  return {false, sign, nu - rs.rho};
}

Vec dominant_rep_linear(const RootSystem& rs, const Vec& weight) {
  int n = rs.rank();
  Vec v = weight;
  for (int guard = 0;; ++guard) {
    require(guard < 100000, "dominant reduction did not terminate");
    int neg = -1;
    for (int i = 0; i < n; ++i)
      if (v[i] < 0) {
        neg = i;
        break;
      }
    if (neg < 0) return v;
    long long vi = v[neg];
    for (int k = 0; k < n; ++k) v[k] -= vi * rs.datum.at(k, neg);
  }
}

}  // namespace tiltcell
