#pragma once

// Rearrangement distances and lower bounds read off the breakpoint graph, plus an
// exhaustive breadth-first oracle for the distances that have no formula.

#include "hultman/bpgraph.hpp"
#include "hultman/census.hpp"
#include "hultman/numbers.hpp"
#include "hultman/parallel.hpp"
#include "hultman/perm.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace hultman {

// ---------------------------------------------------------------------------
// Formula distances and lower bounds

inline int bid(const SignedPermutation& pi) {
  require_unsigned(pi, "bid");
  const int gap = pi.size() + 1 - cycle_stats(pi).cycles;
  if (gap % 2 != 0) throw InternalError("bid: n+1-c is odd for " + pi.str());
  return gap / 2;
}

inline int dcj(const SignedPermutation& pi) { return pi.size() + 1 - cycle_stats(pi).cycles; }

namespace detail {

inline int clamp_nonnegative(int v) { return v < 0 ? 0 : v; }

inline int srd_bound(int n, const CycleStats& s) { return n + 1 - s.cycles; }
inline int td_bound(int n, const CycleStats& s) { return (n + 1 - s.odd) / 2; }
inline int ptd_bound(int n, const CycleStats& s, int first) {
  return clamp_nonnegative((n + 1 + s.cycles) / 2 - s.unit - (first == 1 ? 0 : 1));
}
inline int psrd_bound(int n, const CycleStats& s, int first) {
  return clamp_nonnegative(n + 1 + s.cycles - 2 * s.unit - (first == 1 ? 0 : 2));
}

}  // namespace detail

inline int srd_lower(const SignedPermutation& pi) { return detail::srd_bound(pi.size(), cycle_stats(pi)); }

inline int td_lower(const SignedPermutation& pi) {
  require_unsigned(pi, "td_lower");
  return detail::td_bound(pi.size(), cycle_stats(pi));
}

inline int ptd_lower(const SignedPermutation& pi) {
  require_unsigned(pi, "ptd_lower");
  return detail::ptd_bound(pi.size(), cycle_stats(pi), pi.size() ? pi.image(1) : 1);
}

inline int psrd_lower(const SignedPermutation& pi) {
  return detail::psrd_bound(pi.size(), cycle_stats(pi), pi.size() ? pi.image(1) : 1);
}

struct BoundReport {
  SignedPermutation permutation;
  int value;
  int cycles;
  int odd_cycles;
  int unit_cycles;
  bool first_is_one;
};

// ---------------------------------------------------------------------------
// Generator sets

enum class GeneratorKind {
  reversal,
  prefix_reversal,
  transposition,
  prefix_transposition,
  block_interchange,
  signed_reversal,
  prefix_signed_reversal,
};

inline constexpr std::array<GeneratorKind, 7> kAllGenerators = {
    GeneratorKind::reversal,          GeneratorKind::prefix_reversal, GeneratorKind::transposition,
    GeneratorKind::prefix_transposition, GeneratorKind::block_interchange, GeneratorKind::signed_reversal,
    GeneratorKind::prefix_signed_reversal};

struct GeneratorSet {
  GeneratorKind kind;

  std::string_view name() const {
    switch (kind) {
      case GeneratorKind::reversal: return "reversal";
      case GeneratorKind::prefix_reversal: return "prefix_reversal";
      case GeneratorKind::transposition: return "transposition";
      case GeneratorKind::prefix_transposition: return "prefix_transposition";
      case GeneratorKind::block_interchange: return "block_interchange";
      case GeneratorKind::signed_reversal: return "signed_reversal";
      case GeneratorKind::prefix_signed_reversal: return "prefix_signed_reversal";
    }
    return "?";
  }

  bool is_signed() const {
    return kind == GeneratorKind::signed_reversal || kind == GeneratorKind::prefix_signed_reversal;
  }

  static std::optional<GeneratorSet> parse(std::string_view name) {
    for (auto k : kAllGenerators)
      if (GeneratorSet{k}.name() == name) return GeneratorSet{k};
    return std::nullopt;
  }
};

/// One rearrangement acting on positions. Segments are half-open, 0-based.
struct Move {
  enum class Type { reverse, signed_reverse, exchange } type;
  int i, j, k, l;  // reverse: [i, j); exchange: [i, j) with [k, l), j <= k

  void apply(std::span<const int> src, std::vector<int>& dst) const {
    dst.assign(src.begin(), src.end());
    switch (type) {
      case Type::reverse:
        std::reverse(dst.begin() + i, dst.begin() + j);
        break;
      case Type::signed_reverse:
        std::reverse(dst.begin() + i, dst.begin() + j);
        for (int p = i; p < j; ++p) dst[p] = -dst[p];
        break;
      case Type::exchange: {
        auto out = dst.begin() + i;
        out = std::copy(src.begin() + k, src.begin() + l, out);
        out = std::copy(src.begin() + j, src.begin() + k, out);
        std::copy(src.begin() + i, src.begin() + j, out);
        break;
      }
    }
  }
};

/// Every move of a generator set on n elements. The set is closed under inverses.
inline std::vector<Move> generator_moves(GeneratorSet g, int n) {
  std::vector<Move> moves;
  using T = Move::Type;
  switch (g.kind) {
    case GeneratorKind::reversal:
      for (int i = 0; i < n; ++i)
        for (int j = i + 2; j <= n; ++j) moves.push_back({T::reverse, i, j, 0, 0});
      break;
    case GeneratorKind::prefix_reversal:
      for (int j = 2; j <= n; ++j) moves.push_back({T::reverse, 0, j, 0, 0});
      break;
    case GeneratorKind::signed_reversal:
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j <= n; ++j) moves.push_back({T::signed_reverse, i, j, 0, 0});
      break;
    case GeneratorKind::prefix_signed_reversal:
      for (int j = 1; j <= n; ++j) moves.push_back({T::signed_reverse, 0, j, 0, 0});
      break;
    case GeneratorKind::transposition:
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
          for (int k = j + 1; k <= n; ++k) moves.push_back({T::exchange, i, j, j, k});
      break;
    case GeneratorKind::prefix_transposition:
      for (int j = 1; j < n; ++j)
        for (int k = j + 1; k <= n; ++k) moves.push_back({T::exchange, 0, j, j, k});
      break;
    case GeneratorKind::block_interchange:
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
          for (int k = j; k < n; ++k)
            for (int l = k + 1; l <= n; ++l) moves.push_back({T::exchange, i, j, k, l});
      break;
  }
  return moves;
}

// ---------------------------------------------------------------------------
// Breadth-first distances over the whole group

struct BfsGuard {
  static constexpr int kUnsigned = 8;
  static constexpr int kSigned = 6;
};

/// Sorting distance of every element of S_n (or S_n^+-), indexed by lexicographic rank.
class BfsDistances {
 public:
  BfsDistances(int n, GeneratorSet g, std::vector<std::uint8_t> dist)
      : n_(n), gen_(g), dist_(std::move(dist)) {}

  int n() const { return n_; }
  GeneratorSet generators() const { return gen_; }
  std::span<const std::uint8_t> by_rank() const { return dist_; }

  int at(std::span<const int> images) const {
    return dist_[gen_.is_signed() ? rank_signed(images) : rank_unsigned(images)];
  }
  int at(const SignedPermutation& pi) const {
    if (pi.size() != n_) throw std::invalid_argument("BfsDistances: size mismatch");
    if (!gen_.is_signed()) require_unsigned(pi, "BfsDistances");
    return at(pi.images());
  }

  std::vector<std::uint64_t> level_sizes() const {
    std::vector<std::uint64_t> levels;
    for (auto d : dist_) {
      if (d >= levels.size()) levels.resize(d + 1u, 0);
      ++levels[d];
    }
    return levels;
  }

  DistributionTable table() const {
    DistributionTable t(n_, std::string(gen_.name()));
    const auto levels = level_sizes();
    for (std::size_t d = 0; d < levels.size(); ++d) t.add(static_cast<int>(d), ExactInt(levels[d]));
    return t;
  }

 private:
  int n_;
  GeneratorSet gen_;
  std::vector<std::uint8_t> dist_;
};

/// Level-synchronous BFS from the identity. Each frontier is expanded in independent
/// chunks and merged in chunk order, so the result does not depend on `jobs`.
inline BfsDistances bfs_distances(int n, GeneratorSet g, unsigned jobs = 1, bool force = false) {
  if (n < 0) throw std::invalid_argument("bfs_distances: n must be nonnegative");
  check_guard(n, g.is_signed() ? BfsGuard::kSigned : BfsGuard::kUnsigned, force, "bfs_distances");
  const bool sgn = g.is_signed();
  const std::uint64_t order = group_order(n, sgn);
  constexpr std::uint8_t kUnset = 0xff;
  std::vector<std::uint8_t> dist(order, kUnset);
  const auto moves = generator_moves(g, n);

  std::vector<std::uint64_t> frontier{sgn ? rank_signed(SignedPermutation::identity(n).images())
                                          : rank_unsigned(SignedPermutation::identity(n).images())};
  dist[frontier[0]] = 0;
  for (std::uint8_t level = 0; !frontier.empty(); ++level) {
    if (level + 1 == kUnset) throw InternalError("bfs_distances: diameter exceeds 254");
    const std::size_t chunk_count = jobs <= 1 ? 1 : std::min<std::size_t>(frontier.size(), jobs * 4u);
    auto found = parallel_map<std::vector<std::uint64_t>>(chunk_count, jobs, [&](std::size_t c) {
      std::vector<std::uint64_t> out;
      std::vector<int> next;
      const std::size_t a = frontier.size() * c / chunk_count;
      const std::size_t b = frontier.size() * (c + 1) / chunk_count;
      for (std::size_t f = a; f < b; ++f) {
        const auto state = sgn ? unrank_signed(n, frontier[f]) : unrank_unsigned(n, frontier[f]);
        for (const auto& mv : moves) {
          mv.apply(state, next);
          const std::uint64_t r = sgn ? rank_signed(next) : rank_unsigned(next);
          if (dist[r] == kUnset) out.push_back(r);  // read-only during expansion
        }
      }
      return out;
    });
    std::vector<std::uint64_t> next_frontier;
    for (const auto& part : found)
      for (auto r : part)
        if (dist[r] == kUnset) {
          dist[r] = static_cast<std::uint8_t>(level + 1);
          next_frontier.push_back(r);
        }
    std::sort(next_frontier.begin(), next_frontier.end());
    frontier = std::move(next_frontier);
  }
  for (auto d : dist)
    if (d == kUnset) throw InternalError("bfs_distances: generator set does not generate the group");
  return {n, g, std::move(dist)};
}

// ---------------------------------------------------------------------------
// Distributions by metric name

enum class FormulaMetric { bid, dcj, srd_lower, td_lower, ptd_lower, psrd_lower };

inline constexpr std::array<std::string_view, 6> kFormulaMetricNames = {"bid",      "dcj",       "srd_lower",
                                                                        "td_lower", "ptd_lower", "psrd_lower"};

inline std::optional<FormulaMetric> parse_formula_metric(std::string_view name) {
  for (std::size_t i = 0; i < kFormulaMetricNames.size(); ++i)
    if (kFormulaMetricNames[i] == name) return static_cast<FormulaMetric>(i);
  return std::nullopt;
}

inline bool formula_metric_is_signed(FormulaMetric m) {
  return m == FormulaMetric::dcj || m == FormulaMetric::srd_lower || m == FormulaMetric::psrd_lower;
}

inline int formula_metric_value(FormulaMetric m, std::span<const int> images, const CycleStats& s) {
  const int n = static_cast<int>(images.size());
  const int first = n ? images[0] : 1;
  switch (m) {
    case FormulaMetric::bid: return (n + 1 - s.cycles) / 2;
    case FormulaMetric::dcj: return n + 1 - s.cycles;
    case FormulaMetric::srd_lower: return detail::srd_bound(n, s);
    case FormulaMetric::td_lower: return detail::td_bound(n, s);
    case FormulaMetric::ptd_lower: return detail::ptd_bound(n, s, first);
    case FormulaMetric::psrd_lower: return detail::psrd_bound(n, s, first);
  }
  return 0;
}

inline BoundReport bound_report(FormulaMetric m, const SignedPermutation& pi) {
  if (!formula_metric_is_signed(m)) require_unsigned(pi, "bound_report");
  const auto s = cycle_stats(pi);
  return {pi, formula_metric_value(m, pi.images(), s), s.cycles, s.odd, s.unit, pi.size() == 0 || pi.image(1) == 1};
}

inline bool is_metric_name(std::string_view name) {
  return parse_formula_metric(name).has_value() || GeneratorSet::parse(name).has_value();
}

inline bool metric_is_signed(std::string_view name) {
  if (auto f = parse_formula_metric(name)) return formula_metric_is_signed(*f);
  if (auto g = GeneratorSet::parse(name)) return g->is_signed();
  throw std::invalid_argument("unknown metric \"" + std::string(name) + "\"");
}

/// Exact distribution of a metric over S_n or S_n^+-. Formula metrics enumerate under the
/// census guard; generator-set metrics run the BFS under its own guard.
inline DistributionTable distance_distribution(int n, std::string_view metric, const CensusOptions& opt = {}) {
  if (auto f = parse_formula_metric(metric)) {
    const bool sgn = formula_metric_is_signed(*f);
    check_guard(n, sgn ? CensusGuard::kSigned : CensusGuard::kUnsigned, opt.force, "distance_distribution");
    const FormulaMetric m = *f;
    return tally(PermutationRange(n, sgn, 0, group_order(n, sgn)), std::string(metric), opt.jobs,
                 [m](std::span<const int> p, BreakpointScratch& s) { return formula_metric_value(m, p, s.stats(p)); });
  }
  if (auto g = GeneratorSet::parse(metric)) return bfs_distances(n, *g, opt.jobs, opt.force).table();
  throw std::invalid_argument("unknown metric \"" + std::string(metric) + "\"");
}

// ---------------------------------------------------------------------------
// Comparison against shifted Hultman distributions

struct CompareRow {
  int k;
  ExactInt distance_count;
  ExactInt shifted_hultman;
};

struct CompareResult {
  std::string metric;
  int n;
  int offset;
  ExactRational total_variation;
  std::vector<CompareRow> rows;
};

/// Hultman-derived base series: k -> S_H(n, n+1-2k) for unsigned metrics,
/// k -> S_H^+-(n, n+1-k) for signed ones.
inline DistributionTable hultman_distance_series(int n, bool is_signed) {
  DistributionTable t(n, is_signed ? "signed_hultman" : "hultman");
  if (is_signed) {
    const auto row = signed_hultman_row(n);
    for (int k = 0; k <= n; ++k) t.add(k, row[n + 1 - k]);
  } else {
    for (int k = 0; 2 * k <= n; ++k) t.add(k, hultman_bona_flynn(n, n + 1 - 2 * k));
  }
  return t;
}

/// Shifts the base series by m = 0, 1, ... distance steps and keeps the m minimizing the
/// total variation distance to the metric's distribution (ties toward smaller m).
inline CompareResult compare_with_hultman(int n, std::string_view metric, const DistributionTable& dist) {
  const bool sgn = metric_is_signed(metric);
  const auto base = hultman_distance_series(n, sgn);
  const ExactInt order = group_order_exact(n, sgn);
  int max_k = 0;
  for (const auto& [k, c] : dist.counts()) max_k = std::max(max_k, k);
  int base_max = 0;
  for (const auto& [k, c] : base.counts()) base_max = std::max(base_max, k);

  CompareResult best{std::string(metric), n, 0, ExactRational(2), {}};
  for (int m = 0; m <= max_k; ++m) {
    ExactInt diff = 0;
    for (int k = 0; k <= std::max(max_k, base_max + m); ++k) diff += abs(dist.count(k) - base.count(k - m));
    const ExactRational tv(diff, 2 * order);
    if (tv < best.total_variation) {
      best.total_variation = tv;
      best.offset = m;
    }
  }
  const int last = std::max(max_k, base_max + best.offset);
  for (int k = 0; k <= last; ++k) best.rows.push_back({k, dist.count(k), base.count(k - best.offset)});
  return best;
}

}  // namespace hultman
