#ifndef TILTCELL_AFFINE_HPP
#define TILTCELL_AFFINE_HPP

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "tiltcell/rootdata.hpp"

namespace tiltcell {

// Element of the affine Weyl group W_f x l Q acting on X by
// lambda -> u(lambda) + l * t, with u in W_f (stored as its index) and t in
// the root lattice (simple-root coordinates). The pair is the canonical form.
struct AffineElement {
  int u = 0;
  Vec t;

  bool operator==(const AffineElement& o) const { return u == o.u && t == o.t; }
  bool operator!=(const AffineElement& o) const { return !(*this == o); }
  bool operator<(const AffineElement& o) const { return u != o.u ? u < o.u : t < o.t; }
};

struct AEHash {
  size_t operator()(const AffineElement& a) const noexcept {
    return VecHash{}(a.t) * 31 + static_cast<size_t>(a.u);
  }
};

// Minimal right-coset representative (dominant alcove) with its canonical
// lexicographically smallest reduced word over the generators, 0 = affine.
struct WfRep {
  AffineElement elem;
  std::vector<int> word;

  long long length() const { return static_cast<long long>(word.size()); }
};

struct ResolvedWeight {
  WfRep w;     // minimal representative with w . lambda0 = lambda
  Vec lambda0;  // the fundamental-domain point of the block
};

struct Stabilizer {
  std::vector<int> gens;      // generator indices fixing lambda0
  std::vector<WfRep> elems;   // whole parabolic subgroup, sorted by (length, word)
};

struct CosetExtremes {
  WfRep wmin, wlong;            // extremes of w Stab(lambda0) intersected with W^f
  bool full_coset_max_in_wf;    // whether the full-coset longest element is minimal
};

class AffineGroup {
 public:
  AffineGroup(const RootSystem& rs, long long level);

  const RootSystem& root_system() const { return rs_; }
  long long level() const { return l_; }
  int rank() const { return rs_.datum.rank; }
  int num_gens() const { return rank() + 1; }

  // Standing hypotheses on l that the combinatorics does not consume; the
  // CLI surfaces this as a warning.
  std::optional<std::string> level_hypothesis_warning() const;

  AffineElement identity() const { return {0, Vec(rank(), 0)}; }
  // generator 0 is the affine reflection in <lambda+rho, theta_s^vee> = l;
  // generators 1..rank are the finite simple reflections
  AffineElement gen(int s) const;

  AffineElement mul(const AffineElement& a, const AffineElement& b) const;
  AffineElement inv(const AffineElement& a) const;
  AffineElement mul_gen(const AffineElement& a, int s) const { return mul(a, gen(s)); }

  Vec act(const AffineElement& a, const Vec& weight) const;
  Vec dot(const AffineElement& a, const Vec& weight) const;
  int finite_part(const AffineElement& a) const { return a.u; }

  long long length(const AffineElement& a) const;
  std::vector<int> right_descents(const AffineElement& a) const;
  bool is_right_descent(const AffineElement& a, int s) const;
  bool is_left_descent(int s, const AffineElement& a) const;
  // member of W^f, i.e. no finite left descent (dominant alcove)
  bool is_min_rep(const AffineElement& a) const;
  std::vector<int> lexmin_word(AffineElement a) const;
  WfRep rep(const AffineElement& a) const { return {a, lexmin_word(a)}; }
  AffineElement from_word(const std::vector<int>& word) const;

  bool in_fundamental_domain(const Vec& weight) const;  // weight in closed C
  // walk any weight into the fundamental domain; x . result = weight
  std::pair<AffineElement, Vec> walk_to_fundamental(const Vec& weight) const;

  ResolvedWeight resolve_dominant(const Vec& weight) const;
  Stabilizer stabilizer(const Vec& lambda0) const;
  CosetExtremes coset_extremes(const WfRep& w, const Stabilizer& stab) const;

  std::vector<WfRep> ball(int max_length) const;  // W^f up to length, sorted
  std::vector<Vec> enumerate_dominant_in_region(const std::vector<WfRep>& alcoves) const;

  // x = u * xmin with u in W_f, xmin in W^f; returns (sign (-1)^{l(u)}, xmin)
  std::pair<int, AffineElement> split_finite(AffineElement x) const;

 private:
  const RootSystem& rs_;
  long long l_;
  int theta_;                             // index of the highest short root
  int s_theta_;                           // W_f index of the reflection by it
  std::vector<std::vector<int>> root_action_;  // [u][r] = signed image index of u^{-1}(alpha_r)
  std::vector<Vec> coroot_on_lattice_;    // [r][j] = <alpha_j, alpha_r^vee>
  std::vector<int> simple_root_idx_;      // positive-root index of each simple root

  long long pair_translation(const Vec& t, int r) const {
    return tiltcell::dot(t, coroot_on_lattice_[r]);
  }
  void verify_braid_relations() const;
};

}  // namespace tiltcell

#endif
