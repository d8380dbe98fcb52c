#include "tiltcell/tilting.hpp"

#include <algorithm>
#include <random>

#include "tiltcell/errors.hpp"

namespace tiltcell {

TiltingChar TiltingContext::tilting_regular(const AffineElement& x) {
  TiltingChar t;
  t.block = Vec(g_.rank(), 0);
  for (const auto& [y, m] : specialize_v1(kl_.kl_element(x))) {
    require(m > 0, "canonical basis coefficient not positive at v = 1");
    Vec nu = g_.dot(y, t.block);
    require(is_dominant(nu), "regular factor is not dominant");
    t.factors[nu] += m;
  }
  return t;
}

TiltingChar TiltingContext::translate_regular_to_wall(const TiltingChar& t, const Vec& lambda0) {
  require(is_zero(t.block), "translation source must be the regular block");
  require(g_.in_fundamental_domain(lambda0), "translation target outside the fundamental domain");
  TiltingChar out;
  out.block = lambda0;
  for (const auto& [nu, m] : t.factors) {
    ResolvedWeight r = g_.resolve_dominant(nu);
    require(is_zero(r.lambda0), "regular factor resolved outside the regular block");
    Vec image = g_.dot(r.w.elem, lambda0);
    if (is_dominant(image)) out.factors[image] += m;
  }
  return out;
}

TiltingChar TiltingContext::translate_wall_to_regular(const TiltingChar& t) {
  TiltingChar out;
  out.block = Vec(g_.rank(), 0);
  Stabilizer stab = g_.stabilizer(t.block);
  for (const auto& [xi, m] : t.factors) {
    ResolvedWeight r = g_.resolve_dominant(xi);
    require(r.lambda0 == t.block, "factor outside the stated block");
    for (const auto& x : stab.elems) {
      AffineElement wx = g_.mul(r.w.elem, x.elem);
      if (!g_.is_min_rep(wx)) continue;
      Vec nu = g_.dot(wx, out.block);
      out.factors[nu] += m;
    }
  }
  return out;
}

const TiltingChar& TiltingContext::tilting_indecomposable(const Vec& mu) {
  require(is_dominant(mu), "tilting_indecomposable needs a dominant weight");
  {
    std::lock_guard lk(memo_mutex_);
    auto it = indec_memo_.find(mu);
    if (it != indec_memo_.end()) return it->second;
  }
  TiltingChar t = indec_compute(mu);
  std::lock_guard lk(memo_mutex_);
  auto [it, inserted] = indec_memo_.emplace(mu, std::move(t));
  (void)inserted;
  return it->second;
}

// Singular highest weights: translate the regular indecomposable at the
// longest coset representative onto the wall. The result is isotypic; its
// top multiplicity k divides every factor and the character of Q(mu) is the
// quotient by k. Both facts are enforced, and the consistency of the
// resulting character under re-decomposition is re-checked.
TiltingChar TiltingContext::indec_compute(const Vec& mu) {
  ResolvedWeight r = g_.resolve_dominant(mu);
  Stabilizer stab = g_.stabilizer(r.lambda0);
  if (stab.elems.size() == 1) {
    TiltingChar reg = tilting_regular(r.w.elem);
    TiltingChar out = translate_regular_to_wall(reg, r.lambda0);
    auto top = out.factors.find(mu);
    require(top != out.factors.end() && top->second == 1, "regular top factor not single");
    return out;
  }
  CosetExtremes ce = g_.coset_extremes(r.w, stab);
  if (!ce.full_coset_max_in_wf)
    throw InvariantError("longest coset element leaves the minimal representatives; " +
                         std::string("singular character rule not applicable"));
  TiltingChar c = translate_regular_to_wall(tilting_regular(ce.wlong.elem), r.lambda0);
  auto top = c.factors.find(mu);
  if (top == c.factors.end())
    throw InvariantError("singular-character inconsistency: top factor missing");
  long long k = top->second;
  TiltingChar out;
  out.block = r.lambda0;
  for (const auto& [nu, m] : c.factors) {
    if (m % k != 0 || !g_.root_system().dominance_leq(nu, mu))
      throw InvariantError("singular-character inconsistency: factor " + vec_str(nu));
    out.factors[nu] = m / k;
  }
  {
    std::lock_guard lk(memo_mutex_);
    indec_memo_.emplace(mu, out);
  }
  try {
    auto recheck = peel_decompose(c);
    auto self = recheck.find(mu);
    if (self == recheck.end() || self->second < 1)
      throw InvariantError("singular-character inconsistency: re-decomposition lost the summand");
  } catch (...) {
    std::lock_guard lk(memo_mutex_);
    indec_memo_.erase(mu);
    throw;
  }
  return out;
}

std::map<Vec, long long> TiltingContext::peel_decompose(TiltingChar t) {
  const RootSystem& rs = g_.root_system();
  std::map<Vec, long long> out;
  while (!t.factors.empty()) {
    // dominance-maximal factor: maximal height, lexicographically largest on ties
    Vec best;
    long long best_h = -1;
    for (const auto& [nu, m] : t.factors) {
      long long h = rs.height2(nu);
      if (h > best_h || (h == best_h && nu > best)) {
        best_h = h;
        best = nu;
      }
      (void)m;
    }
    long long k = t.factors[best];
    if (k < 0) throw InvariantError("not a tilting character: negative multiplicity at top");
    const TiltingChar& q = tilting_indecomposable(best);
    require(q.block == t.block, "decomposition crossed blocks");
    for (const auto& [nu, m] : q.factors) {
      t.factors[nu] -= k * m;
      if (t.factors[nu] == 0) t.factors.erase(nu);
    }
    for (const auto& [nu, m] : t.factors)
      if (m < 0)
        throw InvariantError("not a tilting character: negative multiplicity at " + vec_str(nu));
    out[best] += k;
  }
  return out;
}

std::vector<TiltingChar> TiltingContext::tensor_product(const TiltingChar& a,
                                                        const TiltingChar& b) {
  std::map<Vec, long long> total;
  for (const auto& [nu1, m1] : a.factors)
    for (const auto& [nu2, m2] : b.factors)
      for (const auto& [nu, m] : tensor_weyl_factors(chars_, nu1, nu2))
        total[nu] += m1 * m2 * m;
  std::map<Vec, TiltingChar> by_block;
  for (const auto& [nu, m] : total) {
    require(m > 0, "tensor factor multiplicity not positive");
    Vec block = g_.resolve_dominant(nu).lambda0;
    auto& t = by_block[block];
    t.block = block;
    t.factors[nu] = m;
  }
  std::vector<TiltingChar> out;
  out.reserve(by_block.size());
  for (auto& [block, t] : by_block) out.push_back(std::move(t));
  return out;
}

N1Vector TiltingContext::alpha_map(const TiltingChar& t) {
  N1Vector out;
  Stabilizer stab = g_.stabilizer(t.block);
  for (const auto& [nu, m] : t.factors) {
    ResolvedWeight r = g_.resolve_dominant(nu);
    require(r.lambda0 == t.block, "alpha_map needs a single-block character");
    for (const auto& x : stab.elems) {
      AffineElement wx = g_.mul(r.w.elem, x.elem);
      auto [sign, minrep] = g_.split_finite(wx);
      out[minrep] += m * sign;
    }
  }
  for (auto it = out.begin(); it != out.end();)
    it = it->second == 0 ? out.erase(it) : std::next(it);
  return out;
}

std::vector<std::pair<WfRep, long long>> TiltingContext::c_element(const Character& weights,
                                                                   const Vec& lambda0,
                                                                   const Vec& mu0) {
  require(g_.in_fundamental_domain(lambda0) && g_.in_fundamental_domain(mu0),
          "c_element blocks must lie in the fundamental domain");
  Stabilizer stab_l = g_.stabilizer(lambda0);
  Stabilizer stab_m = g_.stabilizer(mu0);
  // solutions x . mu0 = lambda0 + omega over the weight multiset
  std::unordered_map<AffineElement, long long, AEHash> raw;
  for (const auto& [omega, c] : weights) {
    auto [x0, base] = g_.walk_to_fundamental(lambda0 + omega);
    if (base != mu0) continue;
    for (const auto& s : stab_m.elems) raw[g_.mul(x0, s.elem)] += c;
  }
  // group into cosets Stab(lambda0) x; the multiset is constant on each coset
  std::vector<std::pair<WfRep, long long>> out;
  ElemSet done;
  std::vector<AffineElement> keys;
  keys.reserve(raw.size());
  for (const auto& [x, c] : raw) {
    keys.push_back(x);
    (void)c;
  }
  std::sort(keys.begin(), keys.end());
  for (const auto& x : keys) {
    if (done.count(x)) continue;
    AffineElement rep = x;
    long long rep_len = g_.length(x);
    long long count = raw[x];
    std::vector<AffineElement> coset;
    for (const auto& y : stab_l.elems) {
      AffineElement yx = g_.mul(y.elem, x);
      coset.push_back(yx);
      auto it = raw.find(yx);
      require(it != raw.end() && it->second == count,
              "solution multiset is not constant on stabilizer cosets");
      long long len = g_.length(yx);
      if (len < rep_len || (len == rep_len && yx < rep)) {
        rep = yx;
        rep_len = len;
      }
    }
    for (const auto& y : coset) done.insert(y);
    out.push_back({g_.rep(rep), count});
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return a.first.length() != b.first.length() ? a.first.length() < b.first.length()
                                                : a.first.word < b.first.word;
  });
  return out;
}

WfRep TiltingContext::longest_rep(const Vec& mu) {
  ResolvedWeight r = g_.resolve_dominant(mu);
  Stabilizer stab = g_.stabilizer(r.lambda0);
  if (stab.elems.size() == 1) return r.w;
  return g_.coset_extremes(r.w, stab).wlong;
}

IdealSpec make_ideal_spec(const CellPartition& p, const std::string& name, int cell,
                          bool strict) {
  IdealSpec spec;
  spec.name = name;
  spec.L = p.L;
  spec.cell = cell;
  spec.strict = strict;
  ElemSet members = ideal_members(p, cell, strict);
  long long max_surv_len = 0;
  for (const auto& w : p.ball) {
    if (members.count(w.elem)) continue;
    spec.survivor_elems.push_back(w);
    spec.survivor_set.insert(w.elem);
    max_surv_len = std::max(max_surv_len, w.length());
  }
  if (max_surv_len > p.L - 4)
    throw TruncationError("ideal complement reaches the ball boundary (survivor length " +
                          std::to_string(max_surv_len) + " at L = " + std::to_string(p.L) +
                          "); enlarge L");
  return spec;
}

bool ideal_membership(TiltingContext& tc, const Vec& mu, const IdealSpec& ideal) {
  return !ideal.survivor_set.count(tc.longest_rep(mu).elem);
}

bool ideal_membership_at(TiltingContext& tc, const Vec& mu, const CellPartition& p, int cell,
                         bool strict) {
  WfRep wlong = tc.longest_rep(mu);
  int idx = p.find(wlong.elem);
  if (idx < 0)
    throw TruncationError("longest representative of " + vec_str(mu) + " leaves ball(" +
                          std::to_string(p.L) + ")");
  int c = p.cell_of[idx];
  return p.reach[cell][c] && !(strict && c == cell);
}

QuotientRing quotient_ring(TiltingContext& tc, const IdealSpec& ideal) {
  const AffineGroup& g = tc.group();
  const RootSystem& rs = g.root_system();
  QuotientRing ring;
  for (const Vec& mu : g.enumerate_dominant_in_region(ideal.survivor_elems))
    if (ideal.survivor_set.count(tc.longest_rep(mu).elem)) ring.basis.push_back(mu);
  std::sort(ring.basis.begin(), ring.basis.end(), [&](const Vec& a, const Vec& b) {
    long long ha = rs.height2(a), hb = rs.height2(b);
    return ha != hb ? ha < hb : a < b;
  });
  int n = ring.dim();
  require(n > 0, "empty quotient basis");
  std::map<Vec, int> index;
  for (int i = 0; i < n; ++i) index[ring.basis[i]] = i;
  auto unit_it = index.find(Vec(g.rank(), 0));
  require(unit_it != index.end(), "unit object missing from the quotient basis");
  ring.unit = unit_it->second;

  ring.c.assign(static_cast<size_t>(n) * n * n, 0);
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      const TiltingChar qi = tc.tilting_indecomposable(ring.basis[i]);
      const TiltingChar qj = tc.tilting_indecomposable(ring.basis[j]);
      for (const auto& block_char : tc.tensor_product(qi, qj)) {
        for (const auto& [nu, k] : tc.peel_decompose(block_char)) {
          if (!ideal.survivor_set.count(tc.longest_rep(nu).elem)) continue;  // ideal member
          auto it = index.find(nu);
          require(it != index.end(), "surviving summand missing from the basis");
          ring.c[(static_cast<size_t>(i) * n + j) * n + it->second] = k;
        }
      }
      for (int k = 0; k < n; ++k)
        ring.c[(static_cast<size_t>(j) * n + i) * n + k] = ring.cval(i, j, k);
    }
  }

  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k)
      require(ring.cval(ring.unit, j, k) == (j == k ? 1 : 0), "unit law fails in the quotient");

  // associativity spot-check on deterministic pseudo-random triples
  std::mt19937 rng(20240917u);
  auto mul_vec = [&](const std::vector<long long>& x, const std::vector<long long>& y) {
    std::vector<long long> z(n, 0);
    for (int i = 0; i < n; ++i) {
      if (x[i] == 0) continue;
      for (int j = 0; j < n; ++j) {
        if (y[j] == 0) continue;
        for (int k = 0; k < n; ++k) z[k] += x[i] * y[j] * ring.cval(i, j, k);
      }
    }
    return z;
  };
  for (int trial = 0; trial < 50; ++trial) {
    int a = static_cast<int>(rng() % n), b = static_cast<int>(rng() % n),
        c = static_cast<int>(rng() % n);
    std::vector<long long> ea(n, 0), eb(n, 0), ec(n, 0);
    ea[a] = 1;
    eb[b] = 1;
    ec[c] = 1;
    require(mul_vec(mul_vec(ea, eb), ec) == mul_vec(ea, mul_vec(eb, ec)),
            "associativity fails in the quotient");
  }
  return ring;
}

namespace {

// fraction-free Gaussian elimination (Bareiss); returns rank, leaves an
// echelon form in m, and records the pivot columns
int bareiss_rank(std::vector<std::vector<BigInt>>& m, std::vector<int>& pivot_cols) {
  int rows = static_cast<int>(m.size());
  int cols = rows == 0 ? 0 : static_cast<int>(m[0].size());
  BigInt prev(1);
  int rank = 0;
  for (int col = 0; col < cols && rank < rows; ++col) {
    int pivot = -1;
    for (int r = rank; r < rows; ++r)
      if (!m[r][col].is_zero()) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    std::swap(m[rank], m[pivot]);
    for (int r = rank + 1; r < rows; ++r) {
      for (int c2 = col + 1; c2 < cols; ++c2)
        m[r][c2] = div_exact(m[rank][col] * m[r][c2] - m[r][col] * m[rank][c2], prev);
      m[r][col] = BigInt(0);
    }
    prev = m[rank][col];
    pivot_cols.push_back(col);
    ++rank;
  }
  return rank;
}

}  // namespace

RadicalInfo radical(const QuotientRing& ring) {
  int n = ring.dim();
  // trace of left multiplication by each basis element
  std::vector<BigInt> tr(n, BigInt(0));
  for (int k = 0; k < n; ++k) {
    long long t = 0;
    for (int m = 0; m < n; ++m) t += ring.cval(k, m, m);
    tr[k] = BigInt(t);
  }
  // Gram matrix of the trace form: G_ij = trace(L_{b_i b_j})
  std::vector<std::vector<BigInt>> gram(n, std::vector<BigInt>(n, BigInt(0)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      BigInt s(0);
      for (int k = 0; k < n; ++k) s = s + BigInt(ring.cval(i, j, k)) * tr[k];
      gram[i][j] = s;
    }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      require(gram[i][j] == gram[j][i], "trace form is not symmetric");

  auto echelon = gram;
  std::vector<int> pivot_cols;
  int rank = bareiss_rank(echelon, pivot_cols);

  RadicalInfo info;
  info.dim = n - rank;
  if (info.dim == 0) return info;

  // kernel basis: one vector per free column, back-substituted over Q
  std::vector<char> is_pivot(n, 0);
  for (int c : pivot_cols) is_pivot[c] = 1;
  for (int free_col = 0; free_col < n; ++free_col) {
    if (is_pivot[free_col]) continue;
    std::vector<Rational> v(n, Rational(0));
    v[free_col] = Rational(1);
    for (int r = rank - 1; r >= 0; --r) {
      int pc = pivot_cols[r];
      Rational s(0);
      for (int c2 = pc + 1; c2 < n; ++c2)
        if (!v[c2].is_zero()) s += Rational(echelon[r][c2], BigInt(1)) * v[c2];
      v[pc] = (Rational(0) - s) / Rational(echelon[r][pc], BigInt(1));
    }
    info.basis.push_back(std::move(v));
  }

  // verify each kernel vector is nilpotent by explicit squaring
  auto ring_mul = [&](const std::vector<Rational>& x, const std::vector<Rational>& y) {
    std::vector<Rational> z(n, Rational(0));
    for (int i = 0; i < n; ++i) {
      if (x[i].is_zero()) continue;
      for (int j = 0; j < n; ++j) {
        if (y[j].is_zero()) continue;
        Rational p = x[i] * y[j];
        for (int k = 0; k < n; ++k)
          if (ring.cval(i, j, k) != 0) z[k] += p * Rational(ring.cval(i, j, k));
      }
    }
    return z;
  };
  for (const auto& v : info.basis) {
    std::vector<Rational> p = v;
    bool nil = false;
    for (int step = 0; step < 8; ++step) {
      bool zero = true;
      for (const auto& x : p)
        if (!x.is_zero()) {
          zero = false;
          break;
        }
      if (zero) {
        nil = true;
        break;
      }
      p = ring_mul(p, p);
    }
    require(nil, "radical vector failed the nilpotency check");
  }
  return info;
}

}  // namespace tiltcell
