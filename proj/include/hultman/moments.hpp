#pragma once

#include "hultman/exact.hpp"
#include "hultman/numbers.hpp"
#include "hultman/polynomial.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

namespace hultman {

struct MomentPair {
  ExactRational mean;
  ExactRational variance;

  friend bool operator==(const MomentPair&, const MomentPair&) = default;
};

/// Mean and variance of the distribution encoded by a generating function with F(1) > 0.
template <class Coeff>
MomentPair moments_from_gf(const Polynomial<Coeff>& f) {
  const ExactRational one(1);
  const auto d1 = f.derivative();
  const auto d2 = d1.derivative();
  const ExactRational f0 = f.template evaluate<ExactRational>(one);
  if (f0 <= 0) throw std::invalid_argument("moments_from_gf: F(1) must be positive");
  const ExactRational m1 = d1.template evaluate<ExactRational>(one) / f0;
  const ExactRational m2 = d2.template evaluate<ExactRational>(one) / f0;
  return {m1, m1 + m2 - m1 * m1};
}

/// E = H_n + 1/floor((n+2)/2); Var from the four-term harmonic closed form.
inline MomentPair unsigned_moments(int n) {
  if (n < 0) throw std::invalid_argument("unsigned_moments: n must be nonnegative");
  const ExactRational hn = harmonic(n);
  const ExactRational hn2 = harmonic(n + 2);
  const ExactInt p = ExactInt(n + 1) * (n + 2);
  const int sign = (n % 2 == 0) ? 1 : -1;
  MomentPair m;
  m.mean = hn + ExactRational(1, (n + 2) / 2);
  m.variance = hn2 - harmonic_squares(n + 2) + ExactRational(sign) * (2 * hn2 + 2 * hn - 3) / ExactRational(p) -
               ExactRational(ExactInt(1), p * p);
  return m;
}

// A_n = {(a, b) : a >= b >= 1, a + b <= n + 1}
inline bool in_r_domain(int n, int a, int b) { return b >= 1 && a >= b && a + b <= n + 1; }

/// r_n(a, b) of the signed mean formula.
inline ExactRational r_coefficient(int n, int a, int b) {
  if (n < 1 || !in_r_domain(n, a, b)) {
    throw std::invalid_argument("r_coefficient: (" + std::to_string(a) + "," + std::to_string(b) +
                                ") is outside A_" + std::to_string(n));
  }
  const int sign = ((n + a - b) % 2 == 0) ? 1 : -1;
  const ExactInt num = ExactInt(n + 1) * (2 * a - 2 * b + 1) * factorial(a - 1) * factorial(2 * b - 2) *
                       factorial(n - a - b + 2);
  const ExactInt den = pow2(static_cast<unsigned>(n - a + b - 1)) * factorial(n) * factorial(b - 1) *
                       (ExactInt(n + a - b + 2) * (n + a - b + 1)) * (ExactInt(n - a + b + 1) * (n - a + b));
  return ExactRational(sign * num, den);
}

namespace detail {

// For each k = a - b, the b-dependent part of r_n(a, b) is the integer
// (k+b-1)! (2b-2)!/(b-1)! (n-k-2b+2)!; everything else depends on k only.
// Returns the per-k terms so callers can sum signed or absolute values.
inline std::vector<ExactRational> r_terms_by_difference(int n) {
  const auto fact = factorial_table(2 * n + 2);
  std::vector<ExactRational> terms;
  terms.reserve(static_cast<std::size_t>(n));
  for (int k = 0; k <= n - 1; ++k) {
    ExactInt inner = 0;
    ExactInt ratio = 1;  // (2b-2)!/(b-1)! at b = 1
    for (int b = 1; 2 * b + k <= n + 1; ++b) {
      if (b > 1) ratio *= 2 * (2 * b - 3);  // (2b-2)!/(b-1)! = (2b-4)!/(b-2)! * (2b-3)(2b-2)/(b-1)
      inner += fact[k + b - 1] * ratio * fact[n - k - 2 * b + 2];
    }
    if (inner == 0) {
      terms.emplace_back(0);
      continue;
    }
    const int sign = ((n + k) % 2 == 0) ? 1 : -1;
    const ExactInt num = sign * ExactInt(n + 1) * (2 * k + 1) * inner;
    const ExactInt den = pow2(static_cast<unsigned>(n - k - 1)) * fact[n] * (ExactInt(n + k + 2) * (n + k + 1)) *
                         (ExactInt(n - k + 1) * (n - k));
    terms.emplace_back(num, den);
  }
  return terms;
}

}  // namespace detail

/// sum over A_n of r_n(a, b).
inline ExactRational r_sum(int n) {
  if (n < 1) return 0;
  ExactRational s = 0;
  for (const auto& t : detail::r_terms_by_difference(n)) s += t;
  return s;
}

/// sum over A_n of |r_n(a, b)|. Within one k all terms share a sign.
inline ExactRational r_abs_sum(int n) {
  if (n < 1) return 0;
  ExactRational s = 0;
  for (const auto& t : detail::r_terms_by_difference(n)) s += abs(t);
  return s;
}

/// 2 (1 - 2^-n) / (n + 2)
inline ExactRational r_abs_sum_bound(int n) {
  return ExactRational(2) * (ExactRational(1) - ExactRational(ExactInt(1), pow2(static_cast<unsigned>(n)))) /
         ExactRational(n + 2);
}

/// H_{2n+1} - H_n / 2 - sum_{A_n} r_n(a, b)
inline ExactRational signed_mean(int n) {
  if (n < 0) throw std::invalid_argument("signed_mean: n must be nonnegative");
  return harmonic(2 * n + 1) - harmonic(n) / 2 - r_sum(n);
}

inline MomentPair signed_moments(int n) {
  if (n < 0) throw std::invalid_argument("signed_moments: n must be nonnegative");
  const auto h = harmonic_table(2 * n + 1);
  ExactRational odd_squares = 0;
  for (int k = 0; k <= n; ++k) odd_squares += ExactRational(ExactInt(1), ExactInt(2 * k + 1) * (2 * k + 1));

  // Harmonic numbers over the common denominator L = lcm(1..2n+1), so the
  // weighted sum for each k = a - b is an integer over L.
  ExactInt lcm = 1;
  for (int i = 2; i <= 2 * n + 1; ++i) lcm = lcm / boost::multiprecision::gcd(lcm, ExactInt(i)) * i;
  std::vector<ExactInt> hl(static_cast<std::size_t>(2 * n + 2));
  hl[0] = 0;
  for (int i = 1; i <= 2 * n + 1; ++i) hl[i] = hl[i - 1] + lcm / i;

  const auto fact = factorial_table(2 * n + 2);
  ExactRational rs = 0;
  ExactRational weighted = 0;
  for (int k = 0; k <= n - 1; ++k) {
    ExactInt inner = 0, inner_weighted = 0;
    ExactInt ratio = 1;
    for (int b = 1; 2 * b + k <= n + 1; ++b) {
      if (b > 1) ratio *= 2 * (2 * b - 3);
      const int a = b + k;
      const ExactInt t = fact[k + b - 1] * ratio * fact[n - k - 2 * b + 2];
      inner += t;
      inner_weighted += t * (2 * hl[n - a - b + 1] - 2 * hl[2 * a - 1] + hl[a - 1] - hl[b - 1]);
    }
    if (inner == 0) continue;
    const int sign = ((n + k) % 2 == 0) ? 1 : -1;
    const ExactInt num = sign * ExactInt(n + 1) * (2 * k + 1);
    const ExactInt den = pow2(static_cast<unsigned>(n - k - 1)) * fact[n] * (ExactInt(n + k + 2) * (n + k + 1)) *
                         (ExactInt(n - k + 1) * (n - k));
    rs += ExactRational(num * inner, den);
    weighted += ExactRational(num * inner_weighted, den * lcm);
  }
  const ExactRational base = 2 * h[2 * n + 1] - h[n] - 1;
  weighted += base * rs;

  MomentPair m;
  m.mean = h[2 * n + 1] - h[n] / 2 - rs;
  m.variance = h[2 * n + 1] - h[n] / 2 - odd_squares - rs * rs + weighted;
  return m;
}

inline constexpr double kEulerGamma = 0.5772156649;

// Leading-order large-n mean of the unsigned and signed distributions.
inline double unsigned_mean_asymptote(int n) { return std::log(static_cast<double>(n)) + kEulerGamma; }
inline double signed_mean_asymptote(int n) {
  return std::log(static_cast<double>(n)) / 2 + kEulerGamma / 2 + std::log(2.0);
}

}  // namespace hultman
