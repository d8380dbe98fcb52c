#ifndef TILTCELL_INTVEC_HPP
#define TILTCELL_INTVEC_HPP

#include <cstdint>
#include <cstdlib>
#include <string>
#include <vector>

#include "tiltcell/errors.hpp"

namespace tiltcell {

// Weights (fundamental-weight coordinates), root-lattice vectors and the
// rows of Weyl group matrices are all small integer vectors.
using Vec = std::vector<long long>;
using Mat = std::vector<long long>;  // row-major square matrix

struct VecHash {
  size_t operator()(const Vec& v) const noexcept {
    size_t h = 1469598103934665603ull;
    for (long long x : v) {
      h ^= static_cast<size_t>(x);
      h *= 1099511628211ull;
    }
    return h;
  }
};

inline Vec operator+(const Vec& a, const Vec& b) {
  Vec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

inline Vec operator-(const Vec& a, const Vec& b) {
  Vec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

inline Vec operator*(long long c, const Vec& a) {
  Vec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
  return r;
}

inline long long dot(const Vec& a, const Vec& b) {
  long long s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline bool is_zero(const Vec& a) {
  for (long long x : a)
    if (x != 0) return false;
  return true;
}

inline bool all_nonneg(const Vec& a) {
  for (long long x : a)
    if (x < 0) return false;
  return true;
}

// y = M x for a row-major n x n matrix.
inline Vec mat_apply(const Mat& m, const Vec& x) {
  size_t n = x.size();
  Vec y(n, 0);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) y[i] += m[i * n + j] * x[j];
  return y;
}

inline Mat mat_mul(const Mat& a, const Mat& b, size_t n) {
  Mat c(n * n, 0);
  for (size_t i = 0; i < n; ++i)
    for (size_t k = 0; k < n; ++k) {
      long long aik = a[i * n + k];
      if (aik == 0) continue;
      for (size_t j = 0; j < n; ++j) c[i * n + j] += aik * b[k * n + j];
    }
  return c;
}

inline Mat mat_identity(size_t n) {
  Mat m(n * n, 0);
  for (size_t i = 0; i < n; ++i) m[i * n + i] = 1;
  return m;
}

inline long long checked_mul(long long a, long long b) {
  __int128 p = static_cast<__int128>(a) * b;
  require(p >= INT64_MIN && p <= INT64_MAX, "64-bit overflow in exact product");
  return static_cast<long long>(p);
}

inline std::string vec_str(const Vec& v) {
  std::string s = "(";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(v[i]);
  }
  return s + ")";
}

}  // namespace tiltcell

#endif
