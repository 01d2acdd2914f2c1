#pragma once

// Closed forms for the cycle distribution of breakpoint graphs.

#include "hultman/exact.hpp"
#include "hultman/polynomial.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace hultman {

// ---------------------------------------------------------------------------
// Unsigned Hultman numbers

/// [n+2 over k] / C(n+2, 2) when n-k is odd, else 0.
inline ExactInt hultman_bona_flynn(int n, int k) {
  if (n < 0) throw std::invalid_argument("hultman_bona_flynn: n must be nonnegative");
  if (k < 1 || k > n + 1) return 0;
  if ((n - k) % 2 == 0) return 0;
  return exact_div(stirling_first(n + 2, k), binomial(n + 2, 2), "hultman_bona_flynn");
}

/// Row k = 0..n+1 of (1/(n+1)) sum_{i=1}^{n+1} [h^k] (h+n-i+1)^{falling n+1}.
inline std::vector<ExactInt> hultman_new_formula_row(int n) {
  if (n < 0) throw std::invalid_argument("hultman_new_formula: n must be nonnegative");
  IntPolynomial sum;
  for (int i = 1; i <= n + 1; ++i) sum += shifted_falling_factorial_poly(n - i + 1, n + 1);
  std::vector<ExactInt> row(static_cast<std::size_t>(n) + 2);
  for (int k = 0; k <= n + 1; ++k) row[k] = exact_div(sum.coefficient(k), ExactInt(n + 1), "hultman_new_formula");
  return row;
}

inline ExactInt hultman_new_formula(int n, int k) {
  if (n < 0) throw std::invalid_argument("hultman_new_formula: n must be nonnegative");
  if (k < 1 || k > n + 1) return 0;
  return hultman_new_formula_row(n)[k];
}

inline ExactInt hultman(int n, int k) { return hultman_bona_flynn(n, k); }

/// F(x) = (x^{rising n+2} - x^{falling n+2}) / (2 C(n+2, 2)).
inline IntPolynomial unsigned_gf(int n) {
  if (n < 0) throw std::invalid_argument("unsigned_gf: n must be nonnegative");
  const auto diff = rising_factorial_poly(n + 2) - shifted_falling_factorial_poly(0, n + 2);
  const ExactInt den = 2 * binomial(n + 2, 2);
  std::vector<ExactInt> c;
  for (const auto& v : diff.coefficients()) c.push_back(exact_div(v, den, "unsigned_gf"));
  return IntPolynomial(std::move(c));
}

struct GfDerivatives {
  ExactRational value;   // F(1)
  ExactRational first;   // F'(1)
  ExactRational second;  // F''(1)
};

/// F(1), F'(1), F''(1) of the unsigned generating function from their harmonic-number closed forms.
inline GfDerivatives unsigned_gf_derivatives(int n) {
  const ExactRational scale(ExactInt(1), 2 * binomial(n + 2, 2));
  const ExactInt fn = factorial(n);
  const ExactInt fn2 = factorial(n + 2);
  const ExactRational h2 = harmonic(n + 2);
  const int sign = (n % 2 == 0) ? 1 : -1;
  GfDerivatives d;
  d.value = ExactRational(fn);
  d.first = scale * (ExactRational(fn2) * h2 + ExactRational(-sign * fn));
  d.second = scale * (ExactRational(fn2) * (h2 * h2 - harmonic_squares(n + 2)) +
                      ExactRational(2 * sign * fn) * (harmonic(n) - 1));
  return d;
}

// ---------------------------------------------------------------------------
// Hook partitions (a, b, 1^{n-a-b+1}) of n+1

struct HookPartition {
  int a;
  int b;
  int n;

  static HookPartition make(int a, int b, int n) {
    const bool hook = a >= b && b >= 1 && a + b <= n + 1;
    const bool row = a == n + 1 && b == 0;
    if (n < 0 || !(hook || row)) {
      throw std::invalid_argument("(" + std::to_string(a) + "," + std::to_string(b) +
                                  ") is not a hook partition of " + std::to_string(n + 1));
    }
    return {a, b, n};
  }

  bool is_single_row() const { return b == 0; }
  friend bool operator==(const HookPartition&, const HookPartition&) = default;
};

/// b ascending, then a ascending, with (n+1, 0) last.
inline std::vector<HookPartition> hook_partitions(int n) {
  std::vector<HookPartition> out;
  for (int b = 1; 2 * b <= n + 1; ++b)
    for (int a = b; a + b <= n + 1; ++a) out.push_back({a, b, n});
  out.push_back({n + 1, 0, n});
  return out;
}

/// F_lambda(x) with partition size n+1, via (x+2a-2)(x+2a-4)...(x+2b) * (x+2b-2)^{falling(n+1-a+b)}.
inline IntPolynomial f_lambda_poly(const HookPartition& lambda) {
  const int a = lambda.a, b = lambda.b, size = lambda.n + 1;
  auto p = IntPolynomial::constant(1);
  for (int j = 0; j < a - b; ++j) p.mul_linear(ExactInt(2 * a - 2 - 2 * j));
  for (int j = 0; j < size - a + b; ++j) p.mul_linear(ExactInt(2 * b - 2 - j));
  return p;
}

/// Zonal coefficient c_lambda(2) with partition size n+1.
inline ExactRational c_lambda(const HookPartition& lambda) {
  const int a = lambda.a, b = lambda.b, size = lambda.n + 1;
  if (lambda.is_single_row()) {
    return ExactRational(pow2(static_cast<unsigned>(size)) * factorial(size), factorial(2 * size));
  }
  const int sign = ((size + a - b + 1) % 2 == 0) ? 1 : -1;
  ExactInt num = pow2(static_cast<unsigned>(a - b + 1)) * size * (2 * a - 2 * b + 1) * factorial(a - 1);
  ExactInt den = ExactInt(size + a - b + 1) * (size + a - b) * ExactInt(size - a + b) * (size - a + b - 1) *
                 factorial(size - a - b) * factorial(2 * a - 1) * factorial(b - 1);
  return ExactRational(sign * num, den);
}

/// [l] F_lambda(l) = F'_lambda(0), from the derivative closed forms.
inline ExactInt f_lambda_linear_coefficient(const HookPartition& lambda) {
  const int a = lambda.a, b = lambda.b, n = lambda.n;
  if (lambda.is_single_row()) return pow2(static_cast<unsigned>(n)) * factorial(n);
  const int sign = ((n - a - b) % 2 == 0) ? 1 : -1;
  const ExactInt num =
      pow2(static_cast<unsigned>(a - b)) * factorial(a - 1) * factorial(2 * b - 2) * factorial(n - a - b + 2);
  return sign * exact_div(num, factorial(b - 1), "f_lambda_linear_coefficient");
}

// ---------------------------------------------------------------------------
// Signed Hultman numbers

/// G(x) = sum_lambda c_lambda(2) F_lambda(x) F'_lambda(0); x^k coefficient is S_H^+-(n, k).
inline IntPolynomial signed_gf(int n) {
  if (n < 0) throw std::invalid_argument("signed_gf: n must be nonnegative");
  RationalPolynomial g;
  for (const auto& lambda : hook_partitions(n)) {
    const ExactRational weight = c_lambda(lambda) * ExactRational(f_lambda_linear_coefficient(lambda));
    g += to_rational(f_lambda_poly(lambda)) * weight;
  }
  return to_integral(g, "signed_gf");
}

/// S_H^+-(n, k) for k = 0..n+1.
inline std::vector<ExactInt> signed_hultman_row(int n) {
  const auto g = signed_gf(n);
  std::vector<ExactInt> row(static_cast<std::size_t>(n) + 2);
  for (int k = 0; k <= n + 1; ++k) row[k] = g.coefficient(k);
  return row;
}

inline ExactInt signed_hultman(int n, int k) {
  if (n < 0) throw std::invalid_argument("signed_hultman: n must be nonnegative");
  if (k < 1 || k > n + 1) return 0;
  return signed_hultman_row(n)[k];
}

/// S_H^+-(n, k) for k in {n+1, n, n-1} from the special-case closed forms.
inline ExactInt signed_hultman_special(int n, int k) {
  if (n < 0) throw std::invalid_argument("signed_hultman_special: n must be nonnegative");
  if (k == n + 1) return 1;
  if (n >= 1 && k == n) return binomial(n + 1, 2);
  if (n >= 1 && k == n - 1) return 5 * binomial(n + 1, 4) + 4 * binomial(n + 1, 3);
  throw std::invalid_argument("signed_hultman_special: k must be n+1, n or n-1 (n >= 1 for the last two)");
}

// ---------------------------------------------------------------------------
// Sury's alternating binomial identity

struct IdentitySides {
  ExactRational lhs;
  ExactRational rhs;
};

/// sum_{i=0}^n (-1)^i / C(n, i)  versus  (1 + (-1)^n)(n+1)/(n+2).
inline IdentitySides sury_identity_check(int n) {
  if (n < 0) throw std::invalid_argument("sury_identity_check: n must be nonnegative");
  IdentitySides s;
  s.lhs = 0;
  for (int i = 0; i <= n; ++i) {
    const ExactRational term(ExactInt(1), binomial(n, i));
    if (i % 2 == 0) s.lhs += term;
    else s.lhs -= term;
  }
  s.rhs = (n % 2 == 0) ? ExactRational(2 * (n + 1), n + 2) : ExactRational(0);
  return s;
}

}  // namespace hultman
