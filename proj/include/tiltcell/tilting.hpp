#ifndef TILTCELL_TILTING_HPP
#define TILTCELL_TILTING_HPP

#include <map>
#include <mutex>
#include <string>
#include <vector>

#include "tiltcell/cells.hpp"
#include "tiltcell/characters.hpp"
#include "tiltcell/rational.hpp"

namespace tiltcell {

// Character of a tilting module in one linkage block, as its multiset of
// Weyl-filtration factors. The block tag is the fundamental-domain point of
// the dot orbit of every factor.
struct TiltingChar {
  Vec block;
  std::map<Vec, long long> factors;  // dominant weight -> multiplicity > 0

  bool empty() const { return factors.empty(); }
  bool operator==(const TiltingChar& o) const { return block == o.block && factors == o.factors; }
};

class TiltingContext {
 public:
  TiltingContext(const AffineGroup& group, KLContext& kl, const CharTable& chars)
      : g_(group), kl_(kl), chars_(chars) {}
  TiltingContext(const TiltingContext&) = delete;
  TiltingContext& operator=(const TiltingContext&) = delete;

  const AffineGroup& group() const { return g_; }
  KLContext& kl() { return kl_; }
  const CharTable& chars() const { return chars_; }

  // regular-block indecomposable: factors (y.0, n_y(1)) over the canonical
  // basis support of x
  TiltingChar tilting_regular(const AffineElement& x);

  // factorwise image under translation from the regular block; images
  // outside the dominant weights drop out, equal images accumulate
  TiltingChar translate_regular_to_wall(const TiltingChar& t, const Vec& lambda0);

  // factorwise preimage sum back into the regular block (each factor
  // spreads over its stabilizer coset's minimal representatives)
  TiltingChar translate_wall_to_regular(const TiltingChar& t);

  // character of the indecomposable tilting with highest weight mu
  const TiltingChar& tilting_indecomposable(const Vec& mu);

  // greedy unitriangular decomposition into indecomposables
  std::map<Vec, long long> peel_decompose(TiltingChar t);

  // blockwise Weyl factors of the tensor product, sorted by block
  std::vector<TiltingChar> tensor_product(const TiltingChar& a, const TiltingChar& b);

  // image in the specialized antispherical module; T must be a single block
  N1Vector alpha_map(const TiltingChar& t);

  // the multiplier element for tensoring a block-lambda0 object with a
  // module of the given character and projecting to block mu0; pairs
  // (coset representative, integer coefficient), sorted
  std::vector<std::pair<WfRep, long long>> c_element(const Character& weights, const Vec& lambda0,
                                                     const Vec& mu0);

  // longest element of w Stab(lambda0) among minimal representatives
  WfRep longest_rep(const Vec& mu);

 private:
  const AffineGroup& g_;
  KLContext& kl_;
  const CharTable& chars_;
  std::mutex memo_mutex_;
  std::map<Vec, TiltingChar> indec_memo_;

  TiltingChar indec_compute(const Vec& mu);
};

// Frozen classification data for one tensor-ideal quotient: the finitely
// many non-members of the ideal, harvested from a stability-checked cell
// partition. An indecomposable Q(mu) survives iff its longest coset
// representative is one of these elements.
struct IdealSpec {
  std::string name;     // "andersen", "subregular" or "cell:<k>"
  int L = 0;            // truncation the classification was computed at
  int cell = -1;        // the defining cell
  bool strict = false;  // quotient by the strict downward closure
  std::vector<WfRep> survivor_elems;  // sorted by (length, word)
  ElemSet survivor_set;
};

// Builds the frozen classification; requires the complement to sit well
// inside the ball (evidence of finiteness), else TruncationError.
IdealSpec make_ideal_spec(const CellPartition& p, const std::string& name, int cell, bool strict);

bool ideal_membership(TiltingContext& tc, const Vec& mu, const IdealSpec& ideal);

// Honest membership at an explicit truncation: TruncationError when the
// longest representative leaves the ball.
bool ideal_membership_at(TiltingContext& tc, const Vec& mu, const CellPartition& p, int cell,
                         bool strict);

struct QuotientRing {
  std::vector<Vec> basis;  // surviving dominant weights, sorted by (height, lex)
  int unit = -1;           // index of the zero weight
  std::vector<long long> c;  // structure constants, c[(i*n+j)*n+k]

  int dim() const { return static_cast<int>(basis.size()); }
  long long cval(int i, int j, int k) const {
    return c[(static_cast<size_t>(i) * basis.size() + j) * basis.size() + k];
  }
};

QuotientRing quotient_ring(TiltingContext& tc, const IdealSpec& ideal);

struct RadicalInfo {
  int dim = 0;
  std::vector<std::vector<Rational>> basis;  // coordinates in the ring basis
};

// trace-form radical over the rationals; every reported basis vector is
// verified nilpotent by explicit powering
RadicalInfo radical(const QuotientRing& ring);

}  // namespace tiltcell

#endif
