#ifndef TILTCELL_LAURENT_HPP
#define TILTCELL_LAURENT_HPP

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "tiltcell/errors.hpp"
#include "tiltcell/intvec.hpp"

namespace tiltcell {

// Sparse Laurent polynomial in one variable v with exact integer
// coefficients. Terms are kept sorted by exponent with no stored zeros.
class Laurent {
 public:
  Laurent() = default;
  explicit Laurent(long long c) {
    if (c != 0) terms_.push_back({0, c});
  }
  static Laurent monomial(int exp, long long c) {
    Laurent p;
    if (c != 0) p.terms_.push_back({exp, c});
    return p;
  }

  bool is_zero() const { return terms_.empty(); }

  long long coeff(int exp) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), exp,
                               [](const Term& t, int e) { return t.first < e; });
    return (it != terms_.end() && it->first == exp) ? it->second : 0;
  }

  int min_exp() const { return terms_.empty() ? 0 : terms_.front().first; }
  int max_exp() const { return terms_.empty() ? 0 : terms_.back().first; }

  // True when every term has exponent >= 1.
  bool in_v_ideal() const { return terms_.empty() || terms_.front().first >= 1; }

  long long eval_at_one() const {
    long long s = 0;
    for (auto& t : terms_) s += t.second;
    return s;
  }

  Laurent& operator+=(const Laurent& o) {
    *this = *this + o;
    return *this;
  }
  Laurent& operator-=(const Laurent& o) {
    *this = *this - o;
    return *this;
  }

  friend Laurent operator+(const Laurent& a, const Laurent& b) { return merge(a, b, 1); }
  friend Laurent operator-(const Laurent& a, const Laurent& b) { return merge(a, b, -1); }

  friend Laurent operator*(const Laurent& a, const Laurent& b) {
    Laurent r;
    for (auto& ta : a.terms_)
      for (auto& tb : b.terms_) r.add_term(ta.first + tb.first, checked_mul(ta.second, tb.second));
    r.normalize();
    return r;
  }

  Laurent scaled(long long c) const {
    Laurent r;
    if (c == 0) return r;
    r.terms_ = terms_;
    for (auto& t : r.terms_) t.second = checked_mul(t.second, c);
    return r;
  }

  Laurent shifted(int exp) const {
    Laurent r;
    r.terms_ = terms_;
    for (auto& t : r.terms_) t.first += exp;
    return r;
  }

  // v -> v^{-1}
  Laurent bar() const {
    Laurent r;
    r.terms_.reserve(terms_.size());
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) r.terms_.push_back({-it->first, it->second});
    return r;
  }

  bool operator==(const Laurent& o) const { return terms_ == o.terms_; }
  bool operator!=(const Laurent& o) const { return terms_ != o.terms_; }

  // "1 + 2v^2 - v^-1" style, ascending exponents; "0" when empty.
  std::string str() const {
    if (terms_.empty()) return "0";
    std::string s;
    bool first = true;
    for (auto& t : terms_) {
      long long c = t.second;
      if (first) {
        if (c < 0) s += "-";
        first = false;
      } else {
        s += (c < 0) ? " - " : " + ";
      }
      long long a = std::llabs(c);
      if (a != 1 || t.first == 0) s += std::to_string(a);
      if (t.first != 0) {
        s += "v";
        if (t.first != 1) s += "^" + std::to_string(t.first);
      }
    }
    return s;
  }

  const std::vector<std::pair<int, long long>>& terms() const { return terms_; }

 private:
  using Term = std::pair<int, long long>;
  std::vector<Term> terms_;

  static Laurent merge(const Laurent& a, const Laurent& b, long long sign) {
    Laurent r;
    r.terms_.reserve(a.terms_.size() + b.terms_.size());
    size_t i = 0, j = 0;
    while (i < a.terms_.size() || j < b.terms_.size()) {
      if (j == b.terms_.size() || (i < a.terms_.size() && a.terms_[i].first < b.terms_[j].first)) {
        r.terms_.push_back(a.terms_[i++]);
      } else if (i == a.terms_.size() || b.terms_[j].first < a.terms_[i].first) {
        r.terms_.push_back({b.terms_[j].first, sign * b.terms_[j].second});
        ++j;
      } else {
        long long c = a.terms_[i].second + sign * b.terms_[j].second;
        if (c != 0) r.terms_.push_back({a.terms_[i].first, c});
        ++i;
        ++j;
      }
    }
    return r;
  }

  void add_term(int exp, long long c) { terms_.push_back({exp, c}); }

  void normalize() {
    std::sort(terms_.begin(), terms_.end(),
              [](const Term& a, const Term& b) { return a.first < b.first; });
    std::vector<Term> out;
    for (auto& t : terms_) {
      if (!out.empty() && out.back().first == t.first)
        out.back().second += t.second;
      else
        out.push_back(t);
    }
    out.erase(std::remove_if(out.begin(), out.end(), [](const Term& t) { return t.second == 0; }),
              out.end());
    terms_ = std::move(out);
  }
};

}  // namespace tiltcell

#endif
