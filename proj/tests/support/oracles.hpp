#ifndef TILTCELL_TEST_ORACLES_HPP
#define TILTCELL_TEST_ORACLES_HPP

#include <map>
#include <vector>

#include "tiltcell/affine.hpp"
#include "tiltcell/hecke.hpp"
#include "tiltcell/laurent.hpp"
#include "tiltcell/rootdata.hpp"

namespace tiltcell::oracle {

// Weight multiplicity by the alternating Kostant partition sum
//   m(mu) = sum_w (-1)^{l(w)} K(w(lambda+rho) - (mu+rho)),
// independent of the Freudenthal path.
long long kostant_multiplicity(const RootSystem& rs, const Vec& lambda, const Vec& mu);

// Kazhdan-Lusztig elements computed in the full Hecke algebra of the affine
// group, truncated to a length ball, with an explicit bar involution check.
// Projection to the antispherical module gives an independent oracle for the
// canonical basis there.
class FullHecke {
 public:
  FullHecke(const AffineGroup& g, int max_length);

  using HVec = std::map<AffineElement, Laurent>;

  const HVec& kl(const AffineElement& x);  // canonical element, selfduality verified
  HVec bar(const HVec& h);
  NVector project_antispherical(const HVec& h) const;  // 1 (x) -, sign-twisted

  // product h * H_s
  HVec mul_gen(const HVec& h, int s) const;

 private:
  const AffineGroup& g_;
  int max_length_;
  std::map<AffineElement, HVec> memo_;
  std::map<AffineElement, HVec> bar_memo_;

  const HVec& bar_basis(const AffineElement& x);
};

// sl2 level-k fusion coefficients N_{ab}^c for a,b,c in [0,k]
long long verlinde_sl2(int k, int a, int b, int c);

}  // namespace tiltcell::oracle

#endif
