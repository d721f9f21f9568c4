#pragma once

#include <cstdint>
#include <map>
#include <sstream>
#include <string>

namespace aalt {

/// Exact Laurent polynomial in one variable A with integer coefficients.
/// Zero coefficients are never stored.
class LaurentPolynomial {
 public:
  using Coeff = std::int64_t;

  LaurentPolynomial() = default;
  explicit LaurentPolynomial(Coeff constant) { add_term(0, constant); }

  static LaurentPolynomial monomial(Coeff coeff, int exponent) {
    LaurentPolynomial p;
    p.add_term(exponent, coeff);
    return p;
  }

  // -A^2 - A^-2
  static LaurentPolynomial delta() {
    LaurentPolynomial p;
    p.add_term(2, -1);
    p.add_term(-2, -1);
    return p;
  }

  void add_term(int exponent, Coeff coeff) {
    if (coeff == 0) return;
    auto [it, inserted] = terms_.try_emplace(exponent, coeff);
    if (!inserted) {
      it->second += coeff;
      if (it->second == 0) terms_.erase(it);
    }
  }

  const std::map<int, Coeff>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  Coeff coefficient(int exponent) const {
    auto it = terms_.find(exponent);
    return it == terms_.end() ? 0 : it->second;
  }

  int min_exponent() const { return terms_.empty() ? 0 : terms_.begin()->first; }
  int max_exponent() const { return terms_.empty() ? 0 : terms_.rbegin()->first; }

  LaurentPolynomial& operator+=(const LaurentPolynomial& o) {
    for (auto [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  LaurentPolynomial& operator-=(const LaurentPolynomial& o) {
    for (auto [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  friend LaurentPolynomial operator+(LaurentPolynomial a, const LaurentPolynomial& b) { return a += b; }
  friend LaurentPolynomial operator-(LaurentPolynomial a, const LaurentPolynomial& b) { return a -= b; }
  friend LaurentPolynomial operator-(const LaurentPolynomial& a) { return LaurentPolynomial() - a; }

  friend LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    LaurentPolynomial r;
    for (auto [ea, ca] : a.terms_)
      for (auto [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
    return r;
  }

  LaurentPolynomial pow(int k) const {
    LaurentPolynomial r(1);
    for (int i = 0; i < k; ++i) r = r * *this;
    return r;
  }

  // A -> A^-1
  LaurentPolynomial mirrored() const {
    LaurentPolynomial r;
    for (auto [e, c] : terms_) r.add_term(-e, c);
    return r;
  }

  friend bool operator==(const LaurentPolynomial&, const LaurentPolynomial&) = default;

  // Sorted by ascending exponent: "-1*A^-4 + -1*A^4". Zero prints as "0".
  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto [e, c] : terms_) {
      if (!first) os << " + ";
      os << c << "*A^" << e;
      first = false;
    }
    return os.str();
  }

 private:
  std::map<int, Coeff> terms_;
};

}  // namespace aalt
