#ifndef TILTCELL_RATIONAL_HPP
#define TILTCELL_RATIONAL_HPP

#include <string>
#include <utility>

#include "tiltcell/bigint.hpp"

namespace tiltcell {

// Exact rational with BigInt numerator/denominator, always reduced,
// denominator positive.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(long long v) : num_(v), den_(1) {}  // NOLINT
  Rational(BigInt n, BigInt d) : num_(std::move(n)), den_(std::move(d)) {
    require(!den_.is_zero(), "Rational with zero denominator");
    reduce();
  }

  bool is_zero() const { return num_.is_zero(); }
  const BigInt& num() const { return num_; }
  const BigInt& den() const { return den_; }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    require(!b.is_zero(), "Rational division by zero");
    return Rational(a.num_ * b.den_, a.den_ * b.num_);
  }
  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }

  std::string str() const {
    if (den_ == BigInt(1)) return num_.str();
    return num_.str() + "/" + den_.str();
  }

 private:
  BigInt num_, den_;

  void reduce() {
    if (num_.is_zero()) {
      den_ = BigInt(1);
      return;
    }
    BigInt g = gcd(num_, den_);
    num_ = div_exact(num_, g);
    den_ = div_exact(den_, g);
    if (den_.is_negative()) {
      num_ = -num_;
      den_ = -den_;
    }
  }
};

}  // namespace tiltcell

#endif
