#pragma once

#include "hultman/exact.hpp"

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <cstdlib>
#include <iterator>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace hultman {

class PermutationError : public std::invalid_argument {
 public:
  PermutationError(const std::string& what, int position)
      : std::invalid_argument(what), position_(position) {}
  // 1-based position of the offending entry, 0 when not position-specific.
  int position() const { return position_; }

 private:
  int position_;
};

// Refusal to enumerate beyond a soft size limit.
class GuardError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline void check_guard(int n, int limit, bool force, const char* what) {
  if (!force && n > limit) {
    throw GuardError(std::string(what) + ": n=" + std::to_string(n) + " exceeds guard " +
                     std::to_string(limit) + " (force to override)");
  }
}

struct EnumerationGuard {
  static constexpr int kUnsigned = 12;
  static constexpr int kSigned = 9;
};

/// A permutation of {1..n} where every image carries a sign.
///
/// Unsigned permutations are the all-positive case. Images are addressed 1-based
/// through image(i); images() exposes the raw sequence.
class SignedPermutation {
 public:
  SignedPermutation() = default;

  static SignedPermutation validate(std::vector<int> images) {
    const int n = static_cast<int>(images.size());
    std::vector<int> seen(static_cast<std::size_t>(n) + 1, 0);
    for (int i = 0; i < n; ++i) {
      const int v = images[i];
      if (v == 0) throw PermutationError("zero image at position " + std::to_string(i + 1), i + 1);
      const int a = std::abs(v);
      if (a > n) {
        throw PermutationError("image " + std::to_string(v) + " at position " + std::to_string(i + 1) +
                                   " is outside 1.." + std::to_string(n),
                               i + 1);
      }
      if (seen[a]) {
        throw PermutationError("duplicate absolute value " + std::to_string(a) + " at position " +
                                   std::to_string(i + 1) + " (first seen at position " +
                                   std::to_string(seen[a]) + ")",
                               i + 1);
      }
      seen[a] = i + 1;
    }
    return SignedPermutation(std::move(images));
  }

  static SignedPermutation identity(int n) {
    std::vector<int> v(static_cast<std::size_t>(n));
    std::iota(v.begin(), v.end(), 1);
    return SignedPermutation(std::move(v));
  }

  // Caller guarantees validity (hot enumeration paths).
  static SignedPermutation from_trusted(std::vector<int> images) { return SignedPermutation(std::move(images)); }

  int size() const { return static_cast<int>(images_.size()); }
  int image(int i) const { return images_[static_cast<std::size_t>(i - 1)]; }
  std::span<const int> images() const { return images_; }

  bool is_unsigned() const {
    return std::all_of(images_.begin(), images_.end(), [](int v) { return v > 0; });
  }
  bool is_identity() const {
    for (int i = 0; i < size(); ++i)
      if (images_[i] != i + 1) return false;
    return true;
  }

  std::string str() const {
    std::string s = "<";
    for (std::size_t i = 0; i < images_.size(); ++i) {
      if (i) s += ' ';
      s += std::to_string(images_[i]);
    }
    return s + ">";
  }

  friend bool operator==(const SignedPermutation&, const SignedPermutation&) = default;
  friend auto operator<=>(const SignedPermutation&, const SignedPermutation&) = default;

 private:
  explicit SignedPermutation(std::vector<int> images) : images_(std::move(images)) {}

  std::vector<int> images_;
};

/// Parses "-5 1 2 4 -7 -3 6", "-5,1,2" or the printed form "<-5 1 2>".
inline SignedPermutation parse_permutation(std::string_view text) {
  while (!text.empty() && (text.front() == ' ' || text.front() == '<')) text.remove_prefix(1);
  while (!text.empty() && (text.back() == ' ' || text.back() == '>' || text.back() == '\n')) text.remove_suffix(1);
  std::vector<int> values;
  std::size_t i = 0;
  while (i < text.size()) {
    const char ch = text[i];
    if (ch == ',' || ch == ' ' || ch == '\t' || ch == '\n' || ch == '\r') {
      ++i;
      continue;
    }
    std::size_t j = i;
    if (text[j] == '+' || text[j] == '-') ++j;
    while (j < text.size() && text[j] >= '0' && text[j] <= '9') ++j;
    int value = 0;
    const char* first = text.data() + i + (text[i] == '+' ? 1 : 0);
    auto [ptr, ec] = std::from_chars(first, text.data() + j, value);
    if (ec != std::errc() || ptr != text.data() + j || j == i) {
      throw PermutationError("cannot parse permutation entry " + std::to_string(values.size() + 1) + " in \"" +
                                 std::string(text) + "\"",
                             static_cast<int>(values.size()) + 1);
    }
    values.push_back(value);
    i = j;
  }
  return SignedPermutation::validate(std::move(values));
}

inline void require_same_size(const SignedPermutation& a, const SignedPermutation& b) {
  if (a.size() != b.size()) {
    throw std::invalid_argument("permutation size mismatch: " + std::to_string(a.size()) + " vs " +
                                std::to_string(b.size()));
  }
}

inline void require_unsigned(const SignedPermutation& p, const char* what) {
  if (!p.is_unsigned()) throw std::invalid_argument(std::string(what) + " requires an unsigned permutation");
}

/// (sigma o pi)(i) = sigma(pi(i)), signs multiply.
inline SignedPermutation compose(const SignedPermutation& sigma, const SignedPermutation& pi) {
  require_same_size(sigma, pi);
  std::vector<int> out(static_cast<std::size_t>(pi.size()));
  for (int i = 1; i <= pi.size(); ++i) {
    const int v = pi.image(i);
    const int w = sigma.image(std::abs(v));
    out[i - 1] = v < 0 ? -w : w;
  }
  return SignedPermutation::from_trusted(std::move(out));
}

inline SignedPermutation inverse(const SignedPermutation& pi) {
  std::vector<int> out(static_cast<std::size_t>(pi.size()));
  for (int i = 1; i <= pi.size(); ++i) {
    const int v = pi.image(i);
    out[std::abs(v) - 1] = v < 0 ? -i : i;
  }
  return SignedPermutation::from_trusted(std::move(out));
}

// sigma o pi o sigma^-1
inline SignedPermutation conjugate(const SignedPermutation& pi, const SignedPermutation& sigma) {
  return compose(compose(sigma, pi), inverse(sigma));
}

/// Disjoint cycles in canonical form: each cycle starts at its minimum, cycles sorted by minimum.
struct CycleDecomposition {
  std::vector<std::vector<int>> cycles;

  int count() const { return static_cast<int>(cycles.size()); }

  std::vector<int> lengths() const {
    std::vector<int> out;
    out.reserve(cycles.size());
    for (const auto& c : cycles) out.push_back(static_cast<int>(c.size()));
    std::sort(out.begin(), out.end());
    return out;
  }

  friend bool operator==(const CycleDecomposition&, const CycleDecomposition&) = default;
};

inline CycleDecomposition cycle_decomposition(const SignedPermutation& pi) {
  require_unsigned(pi, "cycle_decomposition");
  const int n = pi.size();
  std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
  CycleDecomposition d;
  // Starting from the smallest unvisited element keeps both canonical rules.
  for (int start = 1; start <= n; ++start) {
    if (seen[start]) continue;
    std::vector<int> cycle;
    for (int v = start; !seen[v]; v = pi.image(v)) {
      seen[v] = 1;
      cycle.push_back(v);
    }
    d.cycles.push_back(std::move(cycle));
  }
  return d;
}

// Cycle count on a raw 1-based image array of an unsigned permutation; no allocation beyond `seen`.
inline int cycle_count(std::span<const int> images) {
  const auto n = images.size();
  std::vector<char> seen(n, 0);
  int cycles = 0;
  for (std::size_t s = 0; s < n; ++s) {
    if (seen[s]) continue;
    ++cycles;
    for (std::size_t v = s; !seen[v]; v = static_cast<std::size_t>(images[v] - 1)) seen[v] = 1;
  }
  return cycles;
}

inline int cycle_count(const SignedPermutation& pi) {
  require_unsigned(pi, "cycle_count");
  return cycle_count(pi.images());
}

// ---------------------------------------------------------------------------
// Ranking, unranking and lexicographic successors.
//
// Unsigned permutations are ordered lexicographically on images (factorial
// number system). Signed permutations are ordered lexicographically on the
// signed images, with -n < ... < -1 < 1 < ... < n; position i then has
// 2(n-i) choices, which gives a mixed-radix rank in [0, 2^n n!).

inline std::uint64_t group_order(int n, bool is_signed) {
  std::uint64_t r = 1;
  for (int i = 2; i <= n; ++i) r *= static_cast<std::uint64_t>(i);
  if (is_signed) r <<= n;
  return r;
}

inline std::vector<int> unrank_unsigned(int n, std::uint64_t rank) {
  std::vector<int> pool(static_cast<std::size_t>(n));
  std::iota(pool.begin(), pool.end(), 1);
  std::vector<int> out;
  out.reserve(pool.size());
  for (int i = 0; i < n; ++i) {
    const std::uint64_t block = group_order(n - i - 1, false);
    const auto d = static_cast<std::size_t>(rank / block);
    rank %= block;
    out.push_back(pool[d]);
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(d));
  }
  return out;
}

inline std::uint64_t rank_unsigned(std::span<const int> images) {
  const int n = static_cast<int>(images.size());
  std::uint64_t rank = 0;
  for (int i = 0; i < n; ++i) {
    int smaller = 0;
    for (int j = i + 1; j < n; ++j)
      if (images[j] < images[i]) ++smaller;
    rank += static_cast<std::uint64_t>(smaller) * group_order(n - i - 1, false);
  }
  return rank;
}

inline std::vector<int> unrank_signed(int n, std::uint64_t rank) {
  std::vector<int> pool(static_cast<std::size_t>(n));
  std::iota(pool.begin(), pool.end(), 1);
  std::vector<int> out;
  out.reserve(pool.size());
  for (int i = 0; i < n; ++i) {
    const int m = n - i;
    const std::uint64_t block = group_order(m - 1, true);
    const auto d = static_cast<int>(rank / block);
    rank %= block;
    // Choices in increasing signed order: -pool[m-1], ..., -pool[0], pool[0], ..., pool[m-1].
    if (d < m) {
      const int idx = m - 1 - d;
      out.push_back(-pool[idx]);
      pool.erase(pool.begin() + idx);
    } else {
      const int idx = d - m;
      out.push_back(pool[idx]);
      pool.erase(pool.begin() + idx);
    }
  }
  return out;
}

inline std::uint64_t rank_signed(std::span<const int> images) {
  const int n = static_cast<int>(images.size());
  std::uint64_t rank = 0;
  for (int i = 0; i < n; ++i) {
    const int m = n - i;
    const int a = std::abs(images[i]);
    int smaller = 0;  // remaining absolute values below a
    for (int j = i + 1; j < n; ++j)
      if (std::abs(images[j]) < a) ++smaller;
    const int d = images[i] < 0 ? m - 1 - smaller : m + smaller;
    rank += static_cast<std::uint64_t>(d) * group_order(m - 1, true);
  }
  return rank;
}

inline bool next_unsigned(std::vector<int>& images) { return std::next_permutation(images.begin(), images.end()); }

// Lexicographic successor in signed order; false (and unchanged) at the last element.
inline bool next_signed(std::vector<int>& images) {
  const int n = static_cast<int>(images.size());
  // Scan suffixes right to left, tracking the absolute values available at and after i.
  std::vector<int> suffix;  // absolute values of images[i+1..n-1]
  suffix.reserve(images.size());
  for (int i = n - 1; i >= 0; --i) {
    const int cur = images[i];
    // Smallest signed value > cur among {+-a : a in suffix} U {-cur}.
    int best = 0;
    bool found = false;
    auto consider = [&](int v) {
      if (v > cur && (!found || v < best)) {
        best = v;
        found = true;
      }
    };
    for (int a : suffix) {
      consider(-a);
      consider(a);
    }
    consider(-cur);
    if (found) {
      suffix.push_back(std::abs(cur));
      suffix.erase(std::find(suffix.begin(), suffix.end(), std::abs(best)));
      images[i] = best;
      // Smallest arrangement of the rest: all negative, largest magnitude first.
      std::sort(suffix.begin(), suffix.end(), std::greater<>());
      for (std::size_t j = 0; j < suffix.size(); ++j) images[i + 1 + j] = -suffix[j];
      return true;
    }
    suffix.push_back(std::abs(cur));
  }
  return false;
}

/// A contiguous rank interval [first, last) of S_n or S_n^+-, iterable in lexicographic order.
///
/// Ranges split into disjoint contiguous subranges for parallel consumption.
class PermutationRange {
 public:
  PermutationRange(int n, bool is_signed, std::uint64_t first, std::uint64_t last)
      : n_(n), signed_(is_signed), first_(first), last_(last) {
    if (n < 0) throw std::invalid_argument("PermutationRange: n must be nonnegative");
    if (first > last || last > group_order(n, is_signed)) throw std::out_of_range("PermutationRange: bad rank bounds");
  }

  class iterator {
   public:
    using iterator_category = std::input_iterator_tag;
    using value_type = SignedPermutation;
    using difference_type = std::ptrdiff_t;
    using pointer = const SignedPermutation*;
    using reference = const SignedPermutation&;

    iterator() = default;
    iterator(int n, bool is_signed, std::uint64_t rank, std::uint64_t last)
        : signed_(is_signed), rank_(rank) {
      if (rank < last) {
        current_ = SignedPermutation::from_trusted(is_signed ? unrank_signed(n, rank) : unrank_unsigned(n, rank));
        raw_.assign(current_.images().begin(), current_.images().end());
      }
    }

    reference operator*() const { return current_; }
    pointer operator->() const { return &current_; }
    std::uint64_t rank() const { return rank_; }

    iterator& operator++() {
      ++rank_;
      if (signed_) next_signed(raw_);
      else next_unsigned(raw_);
      current_ = SignedPermutation::from_trusted(raw_);
      return *this;
    }
    void operator++(int) { ++*this; }

    friend bool operator==(const iterator& a, const iterator& b) { return a.rank_ == b.rank_; }

   private:
    bool signed_ = false;
    std::uint64_t rank_ = 0;
    std::vector<int> raw_;
    SignedPermutation current_;
  };

  iterator begin() const { return {n_, signed_, first_, last_}; }
  iterator end() const { return {n_, signed_, last_, last_}; }

  int n() const { return n_; }
  bool is_signed() const { return signed_; }
  std::uint64_t first() const { return first_; }
  std::uint64_t last() const { return last_; }
  std::uint64_t size() const { return last_ - first_; }

  // Raw traversal without constructing SignedPermutation values.
  template <class Visitor>
  void for_each_raw(Visitor&& visit) const {
    if (first_ == last_) return;
    std::vector<int> raw = signed_ ? unrank_signed(n_, first_) : unrank_unsigned(n_, first_);
    for (std::uint64_t r = first_;;) {
      visit(std::span<const int>(raw));
      if (++r == last_) break;
      if (signed_) next_signed(raw);
      else next_unsigned(raw);
    }
  }

  std::vector<PermutationRange> split(std::size_t parts) const {
    std::vector<PermutationRange> out;
    if (parts == 0) parts = 1;
    const std::uint64_t total = size();
    for (std::size_t p = 0; p < parts; ++p) {
      const std::uint64_t a = first_ + total * p / parts;
      const std::uint64_t b = first_ + total * (p + 1) / parts;
      if (a < b || (total == 0 && p == 0)) out.emplace_back(n_, signed_, a, b);
    }
    return out;
  }

 private:
  int n_;
  bool signed_;
  std::uint64_t first_;
  std::uint64_t last_;
};

inline PermutationRange enumerate_unsigned(int n, bool force = false, int guard = EnumerationGuard::kUnsigned) {
  check_guard(n, guard, force, "enumerate_unsigned");
  return {n, false, 0, group_order(n, false)};
}

inline PermutationRange enumerate_signed(int n, bool force = false, int guard = EnumerationGuard::kSigned) {
  check_guard(n, guard, force, "enumerate_signed");
  return {n, true, 0, group_order(n, true)};
}

/// Number of omega in S_{n+1} with c(omega) = k such that beta o omega^-1 is an (n+1)-cycle,
/// beta = (1 2 ... n+1). Brute force over S_{n+1}.
inline ExactInt count_factorizations(int n, int k, bool force = false, int guard = 7) {
  if (n < 0) throw std::invalid_argument("count_factorizations: n must be nonnegative");
  if (k < 1 || k > n + 1) throw std::invalid_argument("count_factorizations: k must lie in 1..n+1");
  check_guard(n, guard, force, "count_factorizations");
  const int m = n + 1;
  std::vector<int> beta(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) beta[i] = (i + 1) % m + 1;
  std::vector<int> omega(static_cast<std::size_t>(m));
  std::iota(omega.begin(), omega.end(), 1);
  std::vector<int> rho(omega.size());
  std::uint64_t count = 0;
  do {
    if (cycle_count(omega) != k) continue;
    // rho = beta o omega^-1: rho(omega(i)) = beta(i)
    for (int i = 0; i < m; ++i) rho[omega[i] - 1] = beta[i];
    if (cycle_count(rho) == 1) ++count;
  } while (std::next_permutation(omega.begin(), omega.end()));
  return ExactInt(count);
}

}  // namespace hultman
