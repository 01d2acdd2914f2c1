#pragma once

#include "hultman/exact.hpp"

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace hultman {

/// Dense univariate polynomial over an exact ring, coefficients in ascending degree.
///
/// The highest stored coefficient is never zero; the zero polynomial stores nothing
/// and reports degree -1.
template <class Coeff>
class Polynomial {
 public:
  using coefficient_type = Coeff;

  Polynomial() = default;
  Polynomial(std::initializer_list<Coeff> coeffs) : c_(coeffs) { trim(); }
  explicit Polynomial(std::vector<Coeff> coeffs) : c_(std::move(coeffs)) { trim(); }

  static Polynomial constant(const Coeff& value) { return Polynomial(std::vector<Coeff>{value}); }

  // x + shift
  static Polynomial linear(const Coeff& shift) { return Polynomial(std::vector<Coeff>{shift, Coeff(1)}); }

  static Polynomial monomial(std::size_t degree, const Coeff& value = Coeff(1)) {
    std::vector<Coeff> c(degree + 1, Coeff(0));
    c[degree] = value;
    return Polynomial(std::move(c));
  }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<Coeff>& coefficients() const { return c_; }

  Coeff coefficient(int k) const {
    if (k < 0 || k >= static_cast<int>(c_.size())) return Coeff(0);
    return c_[k];
  }
  Coeff operator[](int k) const { return coefficient(k); }

  template <class Value>
  Value evaluate(const Value& x) const {
    Value acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + Value(*it);
    return acc;
  }

  Polynomial derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<Coeff> d(c_.size() - 1);
    for (std::size_t k = 1; k < c_.size(); ++k) d[k - 1] = c_[k] * Coeff(static_cast<long>(k));
    return Polynomial(std::move(d));
  }

  Polynomial& operator+=(const Polynomial& rhs) {
    if (rhs.c_.size() > c_.size()) c_.resize(rhs.c_.size(), Coeff(0));
    for (std::size_t k = 0; k < rhs.c_.size(); ++k) c_[k] += rhs.c_[k];
    trim();
    return *this;
  }

  Polynomial& operator-=(const Polynomial& rhs) {
    if (rhs.c_.size() > c_.size()) c_.resize(rhs.c_.size(), Coeff(0));
    for (std::size_t k = 0; k < rhs.c_.size(); ++k) c_[k] -= rhs.c_[k];
    trim();
    return *this;
  }

  Polynomial& operator*=(const Coeff& s) {
    for (auto& v : c_) v *= s;
    trim();
    return *this;
  }

  // Multiplication by (x + shift) in place, O(degree).
  Polynomial& mul_linear(const Coeff& shift) {
    if (c_.empty()) return *this;
    c_.push_back(Coeff(0));
    for (std::size_t k = c_.size() - 1; k > 0; --k) c_[k] = c_[k - 1] + c_[k] * shift;
    c_[0] *= shift;
    trim();
    return *this;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Coeff& s) { return a *= s; }
  friend Polynomial operator*(const Coeff& s, Polynomial a) { return a *= s; }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Coeff> out(a.c_.size() + b.c_.size() - 1, Coeff(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i] == 0) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
    }
    return Polynomial(std::move(out));
  }

  Polynomial operator-() const {
    Polynomial r = *this;
    for (auto& v : r.c_) v = -v;
    return r;
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }

  std::string str() const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = degree(); k >= 0; --k) {
      const Coeff& v = c_[k];
      if (v == 0) continue;
      if (!first) os << " + ";
      os << "(" << v << ")";
      if (k > 0) os << "*x^" << k;
      first = false;
    }
    return os.str();
  }

  friend std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << p.str(); }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  std::vector<Coeff> c_;
};

using IntPolynomial = Polynomial<ExactInt>;
using RationalPolynomial = Polynomial<ExactRational>;

inline RationalPolynomial to_rational(const IntPolynomial& p) {
  std::vector<ExactRational> c(p.coefficients().begin(), p.coefficients().end());
  return RationalPolynomial(std::move(c));
}

// Exact integer coefficients, or InternalError.
inline IntPolynomial to_integral(const RationalPolynomial& p, const char* what) {
  std::vector<ExactInt> c;
  c.reserve(p.coefficients().size());
  for (const auto& q : p.coefficients()) c.push_back(to_integer(q, what));
  return IntPolynomial(std::move(c));
}

/// prod_{j=0}^{length-1} (x + offset - j). With offset 0 this is the falling factorial.
inline IntPolynomial shifted_falling_factorial_poly(long offset, int length) {
  if (length < 0) throw std::invalid_argument("shifted_falling_factorial_poly: negative length");
  auto p = IntPolynomial::constant(1);
  for (int j = 0; j < length; ++j) p.mul_linear(ExactInt(offset - j));
  return p;
}

/// x (x+1) ... (x+n-1); coefficient of x^k is stirling_first(n, k).
inline IntPolynomial rising_factorial_poly(int n) {
  if (n < 0) throw std::invalid_argument("rising_factorial_poly: n must be nonnegative");
  auto p = IntPolynomial::constant(1);
  for (int j = 0; j < n; ++j) p.mul_linear(ExactInt(j));
  return p;
}

}  // namespace hultman
