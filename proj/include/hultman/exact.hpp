#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <cstdint>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <string>
#include <vector>

namespace hultman {

using ExactInt = boost::multiprecision::mpz_int;
// mpq_rational canonicalizes after every operation: lowest terms, positive denominator.
using ExactRational = boost::multiprecision::mpq_rational;

// Raised when a closed form that must be integral leaves a remainder.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

inline ExactInt numerator_of(const ExactRational& q) { return boost::multiprecision::numerator(q); }
inline ExactInt denominator_of(const ExactRational& q) { return boost::multiprecision::denominator(q); }

inline bool is_integer(const ExactRational& q) { return denominator_of(q) == 1; }

inline ExactInt to_integer(const ExactRational& q, const char* what) {
  if (!is_integer(q)) {
    throw InternalError(std::string(what) + ": expected an integer, got " + q.str());
  }
  return numerator_of(q);
}

inline ExactInt exact_div(const ExactInt& num, const ExactInt& den, const char* what) {
  if (den == 0) throw InternalError(std::string(what) + ": division by zero");
  ExactInt quotient, remainder;
  boost::multiprecision::divide_qr(num, den, quotient, remainder);
  if (remainder != 0) {
    throw InternalError(std::string(what) + ": inexact division " + num.str() + " / " + den.str());
  }
  return quotient;
}

// "p/q" with q >= 1, integers printed as "p/1".
inline std::string to_fraction_string(const ExactRational& q) {
  return numerator_of(q).str() + "/" + denominator_of(q).str();
}

inline double to_double(const ExactRational& q) { return q.convert_to<double>(); }

inline ExactInt pow2(unsigned e) {
  ExactInt r = 1;
  r <<= e;
  return r;
}

inline ExactInt factorial(int n) {
  if (n < 0) throw std::invalid_argument("factorial of a negative number");
  ExactInt r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

// 0!, 1!, ..., n!
inline std::vector<ExactInt> factorial_table(int n) {
  std::vector<ExactInt> t(static_cast<std::size_t>(n < 0 ? 0 : n) + 1);
  t[0] = 1;
  for (int i = 1; i <= n; ++i) t[i] = t[i - 1] * i;
  return t;
}

inline ExactInt binomial(int n, int k) {
  if (n < 0) throw std::invalid_argument("binomial: n must be nonnegative");
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  ExactInt r = 1;
  for (int i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;  // exact: r is C(n-k+i, i) after this step
  }
  return r;
}

inline ExactRational harmonic(int n) {
  if (n < 0) throw std::invalid_argument("harmonic: n must be nonnegative");
  ExactRational h = 0;
  for (int i = 1; i <= n; ++i) h += ExactRational(1, i);
  return h;
}

inline ExactRational harmonic_squares(int n) {
  if (n < 0) throw std::invalid_argument("harmonic_squares: n must be nonnegative");
  ExactRational h = 0;
  for (int i = 1; i <= n; ++i) h += ExactRational(ExactInt(1), ExactInt(i) * i);
  return h;
}

// Harmonic numbers H_0..H_n in one pass.
inline std::vector<ExactRational> harmonic_table(int n) {
  std::vector<ExactRational> t(static_cast<std::size_t>(n < 0 ? 0 : n) + 1);
  t[0] = 0;
  for (int i = 1; i <= n; ++i) t[i] = t[i - 1] + ExactRational(1, i);
  return t;
}

namespace detail {

// Unsigned Stirling numbers of the first kind, rows grown on demand and never shrunk.
class StirlingTable {
 public:
  static StirlingTable& instance() {
    static StirlingTable table;
    return table;
  }

  ExactInt get(int n, int k) {
    {
      std::shared_lock lock(mutex_);
      if (n < static_cast<int>(rows_.size())) return rows_[n][k];
    }
    std::unique_lock lock(mutex_);
    while (static_cast<int>(rows_.size()) <= n) {
      const auto m = static_cast<int>(rows_.size());
      const auto& prev = rows_.back();
      std::vector<ExactInt> row(static_cast<std::size_t>(m) + 1);
      for (int j = 1; j <= m; ++j) {
        row[j] = prev[j - 1];
        if (j <= m - 1) row[j] += ExactInt(m - 1) * prev[j];
      }
      rows_.push_back(std::move(row));
    }
    return rows_[n][k];
  }

 private:
  StirlingTable() : rows_{{ExactInt(1)}} {}

  std::shared_mutex mutex_;
  std::vector<std::vector<ExactInt>> rows_;
};

}  // namespace detail

// [n over k]: permutations of n elements with k disjoint cycles.
inline ExactInt stirling_first(int n, int k) {
  if (n < 0) throw std::invalid_argument("stirling_first: n must be nonnegative");
  if (k < 0 || k > n) return 0;
  return detail::StirlingTable::instance().get(n, k);
}

}  // namespace hultman
