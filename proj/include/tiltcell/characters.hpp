#ifndef TILTCELL_CHARACTERS_HPP
#define TILTCELL_CHARACTERS_HPP

#include <map>
#include <memory>
#include <shared_mutex>
#include <unordered_map>

#include "tiltcell/rootdata.hpp"

namespace tiltcell {

// Formal character: finitely supported weight -> multiplicity map with no
// stored zeros.
using Character = std::unordered_map<Vec, long long, VecHash>;

bool is_wf_invariant(const RootSystem& rs, const Character& ch);

// Weight multiplicity and dimension tables for one root system, filled on
// demand. Concurrent readers are fine; insertion is serialized. Returned
// references stay valid for the table's lifetime.
class CharTable {
 public:
  explicit CharTable(const RootSystem& rs) : rs_(rs) {}
  CharTable(const CharTable&) = delete;
  CharTable& operator=(const CharTable&) = delete;

  const RootSystem& root_system() const { return rs_; }

  // Character of the Weyl module V(lambda), lambda dominant (Freudenthal).
  const Character& weight_multiplicities(const Vec& lambda) const;

  // Weyl dimension formula, exact.
  long long weyl_dim(const Vec& lambda) const;

 private:
  const RootSystem& rs_;
  mutable std::shared_mutex mutex_;
  mutable std::unordered_map<Vec, std::unique_ptr<Character>, VecHash> mults_;
  mutable std::unordered_map<Vec, long long, VecHash> dims_;

  Character compute_mults(const Vec& lambda) const;
};

// ch(lambda) for arbitrary lambda: zero, or a signed dominant Weyl character.
inline SignedDom ch_point(const RootSystem& rs, const Vec& lambda) {
  return dominant_rep_signed(rs, lambda);
}

// Weyl-filtration factors of V(lambda) (x) V(mu); keys dominant, values > 0.
// Checks dimension conservation on every call.
std::map<Vec, long long> tensor_weyl_factors(const CharTable& ct, const Vec& lambda,
                                             const Vec& mu);

}  // namespace tiltcell

#endif
