#pragma once

// Exhaustive censuses over S_n, S_n^+- and perfect-matching families.

#include "hultman/bpgraph.hpp"
#include "hultman/exact.hpp"
#include "hultman/moments.hpp"
#include "hultman/parallel.hpp"
#include "hultman/perm.hpp"

#include <cstdint>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hultman {

/// Exact map k -> count for one statistic at one n. Absent keys count zero.
class DistributionTable {
 public:
  DistributionTable() = default;
  DistributionTable(int n, std::string statistic) : n_(n), statistic_(std::move(statistic)) {}

  int n() const { return n_; }
  const std::string& statistic() const { return statistic_; }
  const std::map<int, ExactInt>& counts() const { return counts_; }

  void add(int k, const ExactInt& count) {
    if (count < 0) throw std::invalid_argument("DistributionTable: negative count");
    if (count == 0) return;
    counts_[k] += count;
  }

  ExactInt count(int k) const {
    auto it = counts_.find(k);
    return it == counts_.end() ? ExactInt(0) : it->second;
  }

  ExactInt total() const {
    ExactInt t = 0;
    for (const auto& [k, c] : counts_) t += c;
    return t;
  }

  bool empty() const { return counts_.empty(); }

  void merge(const DistributionTable& other) {
    for (const auto& [k, c] : other.counts_) add(k, c);
  }

  // Same n and statistic, same nonzero counts.
  friend bool operator==(const DistributionTable&, const DistributionTable&) = default;

 private:
  int n_ = 0;
  std::string statistic_;
  std::map<int, ExactInt> counts_;
};

struct CensusGuard {
  static constexpr int kUnsigned = 10;
  static constexpr int kSigned = 8;
  static constexpr int kMatching = 6;
};

struct CensusOptions {
  unsigned jobs = 1;
  bool force = false;
};

/// Tallies key(images, scratch) over every permutation in `range`, split into
/// independent chunks and merged by addition.
template <class Key>
DistributionTable tally(const PermutationRange& range, const std::string& statistic, unsigned jobs, Key key) {
  const std::size_t chunks = jobs <= 1 ? 1 : static_cast<std::size_t>(jobs) * 4;
  const auto parts = range.split(chunks);
  using Partial = std::map<int, std::uint64_t>;
  auto partials = parallel_map<Partial>(parts.size(), jobs, [&](std::size_t i) {
    Partial local;
    BreakpointScratch scratch;
    parts[i].for_each_raw([&](std::span<const int> images) { ++local[key(images, scratch)]; });
    return local;
  });
  DistributionTable table(range.n(), statistic);
  for (const auto& p : partials)
    for (const auto& [k, c] : p) table.add(k, ExactInt(c));
  return table;
}

inline DistributionTable hultman_census(int n, const CensusOptions& opt = {}) {
  check_guard(n, CensusGuard::kUnsigned, opt.force, "hultman_census");
  return tally(PermutationRange(n, false, 0, group_order(n, false)), "cycles", opt.jobs,
               [](std::span<const int> p, BreakpointScratch& s) { return s.stats(p).cycles; });
}

inline DistributionTable signed_hultman_census(int n, const CensusOptions& opt = {}) {
  check_guard(n, CensusGuard::kSigned, opt.force, "signed_hultman_census");
  return tally(PermutationRange(n, true, 0, group_order(n, true)), "cycles", opt.jobs,
               [](std::span<const int> p, BreakpointScratch& s) { return s.stats(p).cycles; });
}

/// Distribution of the number of odd-length cycles over S_n. No closed form is known.
inline DistributionTable odd_hultman_census(int n, const CensusOptions& opt = {}) {
  check_guard(n, CensusGuard::kUnsigned, opt.force, "odd_hultman_census");
  return tally(PermutationRange(n, false, 0, group_order(n, false)), "odd", opt.jobs,
               [](std::span<const int> p, BreakpointScratch& s) { return s.stats(p).odd; });
}

/// Signed analogue of odd_hultman_census (CLI `census --signed --statistic odd`).
inline DistributionTable signed_odd_census(int n, const CensusOptions& opt = {}) {
  check_guard(n, CensusGuard::kSigned, opt.force, "signed_odd_census");
  return tally(PermutationRange(n, true, 0, group_order(n, true)), "odd", opt.jobs,
               [](std::span<const int> p, BreakpointScratch& s) { return s.stats(p).odd; });
}

/// Counts of (c(delta_G U tau), c(tau U complement grey)) as tau ranges over matchings of {0..2n+1}.
using MatchingCensus = std::map<std::pair<int, int>, ExactInt>;

inline MatchingCensus matching_census(int n, const CensusOptions& opt = {}) {
  if (n < 0) throw std::invalid_argument("matching_census: n must be nonnegative");
  check_guard(n, CensusGuard::kMatching, opt.force, "matching_census");
  const int m = n + 1;
  const auto grey = grey_matching(n);
  const auto cgrey = complement_grey_matching(n);
  using Partial = std::map<std::pair<int, int>, std::uint64_t>;
  // One work unit per partner of vertex 0.
  auto partials = parallel_map<Partial>(static_cast<std::size_t>(2 * m - 1), opt.jobs, [&](std::size_t i) {
    Partial local;
    const int size = 2 * m;
    std::vector<char> seen(static_cast<std::size_t>(size));
    auto cycles_with = [&](std::span<const int> tau, const PerfectMatching& other) {
      std::fill(seen.begin(), seen.end(), 0);
      int c = 0;
      for (int s = 0; s < size; ++s) {
        if (seen[s]) continue;
        ++c;
        int v = s;
        do {
          seen[v] = 1;
          const int w = tau[v];
          seen[w] = 1;
          v = other.partner(w);
        } while (v != s);
      }
      return c;
    };
    for_each_matching_branch(m, static_cast<int>(i) + 1, [&](std::span<const int> tau) {
      ++local[{cycles_with(tau, grey), cycles_with(tau, cgrey)}];
    });
    return local;
  });
  MatchingCensus out;
  for (const auto& p : partials)
    for (const auto& [key, c] : p) out[key] += c;
  return out;
}

/// Slice j = 1 of a matching census: k -> count of tau with a hamiltonian complement.
inline DistributionTable matching_census_slice(int n, const MatchingCensus& census) {
  DistributionTable t(n, "cycles");
  for (const auto& [key, c] : census)
    if (key.second == 1) t.add(key.first, c);
  return t;
}

inline MomentPair moments_from_table(const DistributionTable& t, const ExactInt& total) {
  if (total <= 0) throw std::invalid_argument("moments_from_table: total must be positive");
  if (t.total() != total) {
    throw std::invalid_argument("moments_from_table: counts sum to " + t.total().str() + ", expected " + total.str());
  }
  ExactInt s1 = 0, s2 = 0;
  for (const auto& [k, c] : t.counts()) {
    s1 += c * k;
    s2 += c * k * k;
  }
  const ExactRational mean(s1, total);
  return {mean, ExactRational(s2, total) - mean * mean};
}

inline ExactInt group_order_exact(int n, bool is_signed) {
  ExactInt r = factorial(n);
  if (is_signed) r <<= static_cast<unsigned>(n);
  return r;
}

}  // namespace hultman
