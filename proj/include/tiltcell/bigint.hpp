#ifndef TILTCELL_BIGINT_HPP
#define TILTCELL_BIGINT_HPP

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <string>
#include <vector>

#include "tiltcell/errors.hpp"

namespace tiltcell {

// Arbitrary-precision signed integer, base 2^32 schoolbook arithmetic.
// Only the operations needed by fraction-free elimination and rational
// arithmetic are provided.
class BigInt {
 public:
  BigInt() = default;
  BigInt(long long v) {  // NOLINT: implicit by design
    neg_ = v < 0;
    unsigned long long a = neg_ ? -(unsigned long long)v : (unsigned long long)v;
    while (a) {
      limbs_.push_back(static_cast<uint32_t>(a & 0xffffffffu));
      a >>= 32;
    }
  }

  bool is_zero() const { return limbs_.empty(); }
  bool is_negative() const { return neg_; }
  int signum() const { return is_zero() ? 0 : (neg_ ? -1 : 1); }

  friend bool operator==(const BigInt& a, const BigInt& b) {
    return a.neg_ == b.neg_ && a.limbs_ == b.limbs_;
  }
  friend bool operator!=(const BigInt& a, const BigInt& b) { return !(a == b); }

  friend bool operator<(const BigInt& a, const BigInt& b) {
    if (a.neg_ != b.neg_) return a.neg_;
    int c = cmp_mag(a.limbs_, b.limbs_);
    return a.neg_ ? c > 0 : c < 0;
  }

  BigInt operator-() const {
    BigInt r = *this;
    if (!r.is_zero()) r.neg_ = !r.neg_;
    return r;
  }

  friend BigInt operator+(const BigInt& a, const BigInt& b) {
    if (a.neg_ == b.neg_) {
      BigInt r;
      r.limbs_ = add_mag(a.limbs_, b.limbs_);
      r.neg_ = a.neg_;
      r.trim();
      return r;
    }
    int c = cmp_mag(a.limbs_, b.limbs_);
    BigInt r;
    if (c == 0) return r;
    if (c > 0) {
      r.limbs_ = sub_mag(a.limbs_, b.limbs_);
      r.neg_ = a.neg_;
    } else {
      r.limbs_ = sub_mag(b.limbs_, a.limbs_);
      r.neg_ = b.neg_;
    }
    r.trim();
    return r;
  }

  friend BigInt operator-(const BigInt& a, const BigInt& b) { return a + (-b); }

  friend BigInt operator*(const BigInt& a, const BigInt& b) {
    BigInt r;
    if (a.is_zero() || b.is_zero()) return r;
    r.limbs_.assign(a.limbs_.size() + b.limbs_.size(), 0);
    for (size_t i = 0; i < a.limbs_.size(); ++i) {
      uint64_t carry = 0;
      for (size_t j = 0; j < b.limbs_.size(); ++j) {
        uint64_t cur = r.limbs_[i + j] + (uint64_t)a.limbs_[i] * b.limbs_[j] + carry;
        r.limbs_[i + j] = static_cast<uint32_t>(cur);
        carry = cur >> 32;
      }
      size_t k = i + b.limbs_.size();
      while (carry) {
        uint64_t cur = r.limbs_[k] + carry;
        r.limbs_[k] = static_cast<uint32_t>(cur);
        carry = cur >> 32;
        ++k;
      }
    }
    r.neg_ = a.neg_ != b.neg_;
    r.trim();
    return r;
  }

  // Truncated division (quotient toward zero) with remainder.
  static void divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r) {
    require(!b.is_zero(), "BigInt division by zero");
    q = BigInt();
    r = BigInt();
    if (cmp_mag(a.limbs_, b.limbs_) < 0) {
      r = a;
      return;
    }
    // long division bit by bit over the magnitude
    std::vector<uint32_t> rem;
    std::vector<uint32_t> quo(a.limbs_.size(), 0);
    for (size_t i = a.limbs_.size(); i-- > 0;) {
      for (int bit = 31; bit >= 0; --bit) {
        shift_left1(rem);
        if ((a.limbs_[i] >> bit) & 1u) {
          if (rem.empty()) rem.push_back(0);
          rem[0] |= 1u;
        }
        if (cmp_mag(rem, b.limbs_) >= 0) {
          rem = sub_mag(rem, b.limbs_);
          quo[i] |= (1u << bit);
        }
      }
    }
    q.limbs_ = std::move(quo);
    q.neg_ = a.neg_ != b.neg_;
    q.trim();
    r.limbs_ = std::move(rem);
    r.neg_ = a.neg_;
    r.trim();
  }

  // Exact division; aborts if the remainder is nonzero.
  friend BigInt div_exact(const BigInt& a, const BigInt& b) {
    BigInt q, r;
    divmod(a, b, q, r);
    require(r.is_zero(), "BigInt division expected to be exact");
    return q;
  }

  friend BigInt gcd(BigInt a, BigInt b) {
    a.neg_ = false;
    b.neg_ = false;
    while (!b.is_zero()) {
      BigInt q, r;
      divmod(a, b, q, r);
      r.neg_ = false;
      a = b;
      b = r;
    }
    return a;
  }

  std::string str() const {
    if (is_zero()) return "0";
    std::string digits;
    std::vector<uint32_t> m = limbs_;
    while (!m.empty()) {
      uint64_t rem = 0;
      for (size_t i = m.size(); i-- > 0;) {
        uint64_t cur = (rem << 32) | m[i];
        m[i] = static_cast<uint32_t>(cur / 1000000000u);
        rem = cur % 1000000000u;
      }
      while (!m.empty() && m.back() == 0) m.pop_back();
      for (int k = 0; k < 9; ++k) {
        digits.push_back(static_cast<char>('0' + rem % 10));
        rem /= 10;
      }
    }
    while (digits.size() > 1 && digits.back() == '0') digits.pop_back();
    if (neg_) digits.push_back('-');
    std::reverse(digits.begin(), digits.end());
    return digits;
  }

  long long to_ll() const {
    unsigned long long a = 0;
    require(limbs_.size() <= 2, "BigInt does not fit in 64 bits");
    for (size_t i = limbs_.size(); i-- > 0;) a = (a << 32) | limbs_[i];
    require(a <= (neg_ ? (unsigned long long)INT64_MAX + 1 : (unsigned long long)INT64_MAX),
            "BigInt does not fit in 64 bits");
    return neg_ ? -(long long)a : (long long)a;
  }

 private:
  std::vector<uint32_t> limbs_;  // little-endian magnitude
  bool neg_ = false;

  void trim() {
    while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
    if (limbs_.empty()) neg_ = false;
  }

  static int cmp_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    for (size_t i = a.size(); i-- > 0;)
      if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    return 0;
  }

  static std::vector<uint32_t> add_mag(const std::vector<uint32_t>& a,
                                       const std::vector<uint32_t>& b) {
    const auto& big = a.size() >= b.size() ? a : b;
    const auto& small = a.size() >= b.size() ? b : a;
    std::vector<uint32_t> r = big;
    uint64_t carry = 0;
    for (size_t i = 0; i < r.size(); ++i) {
      uint64_t cur = (uint64_t)r[i] + (i < small.size() ? small[i] : 0) + carry;
      r[i] = static_cast<uint32_t>(cur);
      carry = cur >> 32;
      if (carry == 0 && i >= small.size()) break;
    }
    if (carry) r.push_back(static_cast<uint32_t>(carry));
    return r;
  }

  // requires |a| >= |b|
  static std::vector<uint32_t> sub_mag(const std::vector<uint32_t>& a,
                                       const std::vector<uint32_t>& b) {
    std::vector<uint32_t> r = a;
    int64_t borrow = 0;
    for (size_t i = 0; i < r.size(); ++i) {
      int64_t cur = (int64_t)r[i] - (i < b.size() ? b[i] : 0) - borrow;
      borrow = cur < 0;
      if (cur < 0) cur += ((int64_t)1 << 32);
      r[i] = static_cast<uint32_t>(cur);
    }
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
  }

  static void shift_left1(std::vector<uint32_t>& m) {
    uint32_t carry = 0;
    for (auto& limb : m) {
      uint32_t next = limb >> 31;
      limb = (limb << 1) | carry;
      carry = next;
    }
    if (carry) m.push_back(carry);
  }
};

}  // namespace tiltcell

#endif
