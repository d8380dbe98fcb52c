#ifndef TILTCELL_ROOTDATA_HPP
#define TILTCELL_ROOTDATA_HPP

#include <string>
#include <unordered_map>
#include <vector>

#include "tiltcell/intvec.hpp"

namespace tiltcell {

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

// Integer Cartan matrix with the convention cartan[i][j] = <alpha_j, alpha_i^vee>.
// Simple root j in fundamental-weight coordinates is column j of the matrix.
// For G2 the simple roots are ordered (alpha_1 short, alpha_2 long).
struct CartanDatum {
  Family family;
  int rank;
  Mat cartan;  // rank x rank, row-major

  long long at(int i, int j) const { return cartan[i * rank + j]; }

  static CartanDatum standard(Family f, int rank);
  static CartanDatum parse(const std::string& name);  // "G2", "A1", ...
  std::string name() const;

  // Throws ConfigError naming the failing condition (including the index of
  // a nonpositive leading principal minor for non-finite type).
  void validate() const;
};

// The finite Weyl group, fully materialized. Each element is stored as its
// matrix action on X in fundamental-weight coordinates and on the root
// lattice in simple-root coordinates.
class WeylGroup {
 public:
  explicit WeylGroup(const CartanDatum& d);

  int size() const { return static_cast<int>(wmat_.size()); }
  int rank() const { return rank_; }
  int length(int w) const { return length_[w]; }
  int sign(int w) const { return length_[w] % 2 == 0 ? 1 : -1; }
  int identity() const { return 0; }
  int simple(int i) const { return simple_[i]; }  // i in [0, rank)
  int mult(int a, int b) const;                   // group product a*b
  int inverse(int w) const { return inv_[w]; }

  Vec apply(int w, const Vec& weight) const { return mat_apply(wmat_[w], weight); }
  Vec apply_root(int w, const Vec& root_coords) const { return mat_apply(rmat_[w], root_coords); }
  const Mat& matrix(int w) const { return wmat_[w]; }
  const std::vector<int>& word(int w) const { return word_[w]; }

 private:
  int rank_;
  std::vector<Mat> wmat_, rmat_;
  std::vector<int> length_, inv_;
  std::vector<int> simple_;
  std::vector<std::vector<int>> word_;
  std::unordered_map<Mat, int, VecHash> index_;
};

struct RootSystem {
  CartanDatum datum;
  std::vector<Vec> positive_roots;     // simple-root coordinates
  std::vector<Vec> positive_roots_wc;  // fundamental-weight coordinates
  // Coroot of positive_roots[r] in simple-coroot coordinates; pairing a
  // weight against it is a plain dot product.
  std::vector<Vec> coroots;
  std::vector<long long> root_norm2;  // (alpha,alpha) with short roots = 2
  std::vector<long long> symmetrizer;  // d_i = (alpha_i,alpha_i)/2
  Vec rho;
  long long coxeter_number;
  int highest_short_root;  // index into positive_roots; its coroot is the highest coroot
  WeylGroup wf;

  // adjugate and determinant of the Cartan matrix, for exact solves of
  // weight = cartan * rootcoords
  Mat cartan_adjugate;
  long long cartan_det;

  int rank() const { return datum.rank; }
  long long pairing(const Vec& weight, int coroot_index) const {
    return dot(weight, coroots[coroot_index]);
  }
  Vec root_to_weight(const Vec& root_coords) const;
  // weight-lattice vector -> simple-root coordinates; false if not in the
  // root lattice
  bool weight_to_root(const Vec& weight, Vec& out) const;
  // mu <= lambda in the root order: lambda - mu a nonnegative sum of simple roots
  bool dominance_leq(const Vec& mu, const Vec& lambda) const;
  long long height2(const Vec& weight) const;  // <weight, 2 rho^vee>
};

RootSystem build_root_system(const CartanDatum& datum);

inline bool is_dominant(const Vec& weight) { return all_nonneg(weight); }

std::vector<Vec> weyl_orbit(const RootSystem& rs, const Vec& weight);  // sorted

// Signed reduction of a weight to a dominant representative.
struct SignedDom {
  bool zero;  // lambda + rho fixed by a finite reflection
  int sign;   // (-1)^{l(w)} otherwise
  Vec dom;    // the dominant representative under the dot action
};

// Dot action of the finite Weyl group: w . lambda = w(lambda + rho) - rho.
SignedDom dominant_rep_signed(const RootSystem& rs, const Vec& lambda);

// Plain (linear) dominant representative.
Vec dominant_rep_linear(const RootSystem& rs, const Vec& weight);

}  // namespace tiltcell

#endif
