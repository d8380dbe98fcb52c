#ifndef TILTCELL_HECKE_HPP
#define TILTCELL_HECKE_HPP

#include <memory>
#include <shared_mutex>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "tiltcell/affine.hpp"
#include "tiltcell/laurent.hpp"

namespace tiltcell {

// Vector in the antispherical module over Laurent polynomials, expressed in
// the standard basis N_x, x in W^f. No stored zeros.
using NVector = std::unordered_map<AffineElement, Laurent, AEHash>;

// Specialization at v = 1.
using N1Vector = std::unordered_map<AffineElement, long long, AEHash>;

// Kazhdan-Lusztig combinatorics of the antispherical module: the canonical
// basis elements, their mu-coefficients and the generator action. Results
// are memoized in memory and optionally on disk (the data depends only on
// the Coxeter type, not on the level).
class KLContext {
 public:
  explicit KLContext(const AffineGroup& group, std::string cache_dir = "");
  KLContext(const KLContext&) = delete;
  KLContext& operator=(const KLContext&) = delete;

  const AffineGroup& group() const { return group_; }
  const std::string& cache_dir() const { return cache_dir_; }

  // right action by H_s + v on the standard basis:
  //   N_x -> N_{xs} + v N_x        if xs minimal, longer
  //   N_x -> N_{xs} + v^{-1} N_x   if xs minimal, shorter
  //   N_x -> 0                     otherwise
  NVector act_kl_gen(const NVector& n, int s) const;

  // canonical basis element: unitriangular, off-diagonal coefficients in vZ[v]
  const NVector& kl_element(const AffineElement& x);

  // expansion of a vector in the canonical basis, sorted by decreasing
  // length then word
  std::vector<std::pair<WfRep, Laurent>> kl_expand(NVector p);

  // coefficient of v in the N_y-coordinate of the canonical element at x
  long long mu(const AffineElement& y, const AffineElement& x);

  // stable text form: N[word] = N[word'] * (poly) + ...
  std::string format_element(const AffineElement& x);

  // cache administration
  std::vector<std::string> cache_list() const;
  int cache_clear() const;
  struct VerifyReport {
    int checked = 0;
    std::vector<std::string> evicted;
  };
  VerifyReport cache_verify();

 private:
  const AffineGroup& group_;
  std::string cache_dir_;
  mutable std::shared_mutex mutex_;
  std::unordered_map<AffineElement, std::unique_ptr<NVector>, AEHash> memo_;

  const NVector* memo_lookup(const AffineElement& x) const;
  const NVector& memo_store(const AffineElement& x, NVector v);
  NVector compute(const AffineElement& x);

  std::string file_key(const AffineElement& x) const;
  std::string file_path(const std::string& key) const;
  std::string serialize(const NVector& v);
  bool deserialize(const std::string& text, NVector& out) const;
  bool load_from_disk(const AffineElement& x, NVector& out) const;
  void store_to_disk(const AffineElement& x, NVector& v);
};

N1Vector specialize_v1(const NVector& n);

// right action of a generator on the specialized module:
// N1_x s = N1_{xs} if xs stays minimal, otherwise -N1_x
N1Vector n1_act_gen(const AffineGroup& g, const N1Vector& n, int s);
N1Vector n1_act(const AffineGroup& g, const N1Vector& n, const AffineElement& w);

inline bool n1_equal(const N1Vector& a, const N1Vector& b) {
  if (a.size() != b.size()) return false;
  for (const auto& [k, v] : a) {
    auto it = b.find(k);
    if (it == b.end() || it->second != v) return false;
  }
  return true;
}

std::string word_str(const std::vector<int>& word);  // "e" or "0.1.0"

}  // namespace tiltcell

#endif
