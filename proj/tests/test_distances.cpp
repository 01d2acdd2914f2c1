#include "hultman/distances.hpp"

#include <gtest/gtest.h>

#include <deque>
#include <map>
#include <random>

using namespace hultman;

namespace {

using Images = std::vector<int>;

// Neighbours of a state under a generator set, written out directly on vectors.
std::vector<Images> neighbours(const Images& p, GeneratorKind kind) {
  const int n = static_cast<int>(p.size());
  std::vector<Images> out;
  auto reversed = [&](int i, int j, bool flip) {
    Images q = p;
    for (int t = 0; t < j - i; ++t) q[i + t] = flip ? -p[j - 1 - t] : p[j - 1 - t];
    out.push_back(q);
  };
  auto exchanged = [&](int i, int j, int k, int l) {
    Images q(p.begin(), p.begin() + i);
    q.insert(q.end(), p.begin() + k, p.begin() + l);
    q.insert(q.end(), p.begin() + j, p.begin() + k);
    q.insert(q.end(), p.begin() + i, p.begin() + j);
    q.insert(q.end(), p.begin() + l, p.end());
    out.push_back(q);
  };
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      if (kind == GeneratorKind::reversal && j - i >= 2) reversed(i, j, false);
      if (kind == GeneratorKind::prefix_reversal && i == 0 && j >= 2) reversed(i, j, false);
      if (kind == GeneratorKind::signed_reversal) reversed(i, j, true);
      if (kind == GeneratorKind::prefix_signed_reversal && i == 0) reversed(i, j, true);
      for (int k = j; k <= n; ++k)
        for (int l = k + 1; l <= n; ++l) {
          if (kind == GeneratorKind::block_interchange) exchanged(i, j, k, l);
          if (k == j && kind == GeneratorKind::transposition) exchanged(i, j, k, l);
          if (k == j && i == 0 && kind == GeneratorKind::prefix_transposition) exchanged(i, j, k, l);
        }
    }
  return out;
}

std::map<Images, int> bfs_oracle(const Images& start, GeneratorKind kind) {
  std::map<Images, int> dist{{start, 0}};
  std::deque<Images> queue{start};
  while (!queue.empty()) {
    const Images p = queue.front();
    queue.pop_front();
    for (const auto& q : neighbours(p, kind))
      if (dist.emplace(q, dist[p] + 1).second) queue.push_back(q);
  }
  return dist;
}

}  // namespace

TEST(FormulaDistances, Examples) {
  EXPECT_EQ(bid(SignedPermutation::identity(5)), 0);
  EXPECT_EQ(bid(parse_permutation("2 1")), 1);
  EXPECT_EQ(dcj(SignedPermutation::identity(4)), 0);
  EXPECT_EQ(dcj(parse_permutation("-5 1 2 4 -7 -3 6")), 6);
  EXPECT_THROW(bid(parse_permutation("-1 2")), std::invalid_argument);
  for (int n = 0; n <= 5; ++n) {
    const auto id = SignedPermutation::identity(n);
    EXPECT_EQ(srd_lower(id), 0);
    EXPECT_EQ(td_lower(id), 0);
    EXPECT_EQ(ptd_lower(id), 0);
    EXPECT_EQ(psrd_lower(id), 0);
  }
  EXPECT_EQ(td_lower(parse_permutation("2 1")), 1);
}

TEST(FormulaDistances, BoundsAreNonnegative) {
  for (int n = 0; n <= 5; ++n)
    for (const auto& pi : enumerate_signed(n)) {
      EXPECT_GE(srd_lower(pi), 0);
      EXPECT_GE(psrd_lower(pi), 0);
      if (pi.is_unsigned()) {
        EXPECT_GE(td_lower(pi), 0);
        EXPECT_GE(ptd_lower(pi), 0);
      }
    }
}

TEST(FormulaDistances, BoundReport) {
  const auto r = bound_report(FormulaMetric::td_lower, parse_permutation("2 1"));
  EXPECT_EQ(r.value, 1);
  EXPECT_EQ(r.cycles, 1);
  EXPECT_EQ(r.odd_cycles, 1);
  EXPECT_FALSE(r.first_is_one);
  EXPECT_THROW(bound_report(FormulaMetric::td_lower, parse_permutation("-1")), std::invalid_argument);
}

TEST(FormulaDistances, DistributionsAreShiftedHultmanRows) {
  DistributionTable bid3(3, "bid");
  bid3.add(0, 1);
  bid3.add(1, 5);
  EXPECT_EQ(distance_distribution(3, "bid"), bid3);
  DistributionTable dcj3(3, "dcj");
  for (auto [k, c] : {std::pair{0, 1}, {1, 6}, {2, 21}, {3, 20}}) dcj3.add(k, c);
  EXPECT_EQ(distance_distribution(3, "dcj"), dcj3);
  for (int n = 0; n <= 8; ++n) {
    const auto t = distance_distribution(n, "bid");
    for (int k = 0; 2 * k <= n + 1; ++k) EXPECT_EQ(t.count(k), hultman_bona_flynn(n, n + 1 - 2 * k));
  }
  for (int n = 0; n <= 7; ++n) {
    const auto t = distance_distribution(n, "dcj");
    const auto row = signed_hultman_row(n);
    for (int k = 0; k <= n; ++k) EXPECT_EQ(t.count(k), row[n + 1 - k]);
  }
  EXPECT_THROW(distance_distribution(3, "nonsense"), std::invalid_argument);
}

TEST(Bfs, MatchesIndependentOracle) {
  for (auto kind : kAllGenerators) {
    const GeneratorSet g{kind};
    for (int n = 0; n <= (g.is_signed() ? 4 : 5); ++n) {
      const auto bfs = bfs_distances(n, g);
      const auto id = SignedPermutation::identity(n);
      const auto oracle = bfs_oracle(Images(id.images().begin(), id.images().end()), kind);
      ASSERT_EQ(oracle.size(), group_order(n, g.is_signed())) << g.name() << " n=" << n;
      for (const auto& [p, d] : oracle) EXPECT_EQ(bfs.at(p), d) << g.name();
    }
  }
}

TEST(Bfs, Examples) {
  const auto rev = bfs_distances(2, GeneratorSet{GeneratorKind::reversal});
  EXPECT_EQ(rev.at(parse_permutation("2 1")), 1);
  const auto sr = bfs_distances(3, GeneratorSet{GeneratorKind::signed_reversal});
  std::uint64_t sum = 0;
  for (auto l : sr.level_sizes()) sum += l;
  EXPECT_EQ(sum, 48u);
  for (auto kind : kAllGenerators) {
    const GeneratorSet g{kind};
    const auto b = bfs_distances(4, g);
    EXPECT_EQ(b.level_sizes().front(), 1u);
    EXPECT_EQ(b.at(SignedPermutation::identity(4)), 0);
    EXPECT_EQ(GeneratorSet::parse(g.name())->kind, kind);
  }
  EXPECT_FALSE(GeneratorSet::parse("shuffle").has_value());
  EXPECT_THROW(bfs_distances(9, GeneratorSet{GeneratorKind::reversal}), GuardError);
  EXPECT_THROW(bfs_distances(7, GeneratorSet{GeneratorKind::signed_reversal}), GuardError);
}

TEST(Bfs, LeftInvariance) {
  std::mt19937 rng(2024);
  for (auto kind : {GeneratorKind::reversal, GeneratorKind::transposition, GeneratorKind::signed_reversal}) {
    const GeneratorSet g{kind};
    const int n = g.is_signed() ? 4 : 5;
    const auto bfs = bfs_distances(n, g);
    for (int t = 0; t < 3; ++t) {
      const auto start = SignedPermutation::from_trusted(
          g.is_signed() ? unrank_signed(n, rng() % group_order(n, true)) : unrank_unsigned(n, rng() % group_order(n, false)));
      const auto from_start = bfs_oracle(Images(start.images().begin(), start.images().end()), kind);
      const auto back = inverse(start);
      for (const auto& [p, d] : from_start)
        EXPECT_EQ(bfs.at(compose(back, SignedPermutation::from_trusted(p))), d);
    }
  }
}

TEST(Bfs, ParallelLevelsAreDeterministic) {
  for (auto kind : kAllGenerators) {
    const GeneratorSet g{kind};
    const int n = g.is_signed() ? 5 : 6;
    const auto one = bfs_distances(n, g, 1);
    const auto many = bfs_distances(n, g, 8);
    EXPECT_TRUE(std::ranges::equal(one.by_rank(), many.by_rank())) << g.name();
  }
}

TEST(Bounds, DominatedByExactDistances) {
  auto check = [](std::string_view bound, GeneratorKind kind, int top) {
    const auto m = *parse_formula_metric(bound);
    const GeneratorSet g{kind};
    for (int n = 1; n <= top; ++n) {
      const auto bfs = bfs_distances(n, g);
      for (const auto& pi : PermutationRange(n, g.is_signed(), 0, group_order(n, g.is_signed())))
        ASSERT_LE(formula_metric_value(m, pi.images(), cycle_stats(pi)), bfs.at(pi)) << bound << " " << pi.str();
    }
  };
  check("bid", GeneratorKind::transposition, 7);
  check("td_lower", GeneratorKind::transposition, 7);
  check("ptd_lower", GeneratorKind::prefix_transposition, 6);
  check("srd_lower", GeneratorKind::signed_reversal, 6);
  check("psrd_lower", GeneratorKind::prefix_signed_reversal, 5);
  check("bid", GeneratorKind::block_interchange, 6);
}

TEST(Bounds, BlockInterchangeDistanceIsExact) {
  for (int n = 1; n <= 6; ++n) {
    const auto bfs = bfs_distances(n, GeneratorSet{GeneratorKind::block_interchange});
    for (const auto& pi : enumerate_unsigned(n)) ASSERT_EQ(bid(pi), bfs.at(pi)) << pi.str();
  }
}

TEST(Bounds, SignedReversalBoundIsUsuallyTight) {
  // Engineering proxy for the small gap between the bound and the exact distance:
  // at n = 6 more than 90% of signed permutations attain it.
  const auto bfs = bfs_distances(6, GeneratorSet{GeneratorKind::signed_reversal});
  std::uint64_t equal = 0;
  for (const auto& pi : enumerate_signed(6)) equal += srd_lower(pi) == bfs.at(pi);
  EXPECT_GT(static_cast<double>(equal) / static_cast<double>(group_order(6, true)), 0.9);
}

TEST(Compare, OffsetFitting) {
  const auto dcj = compare_with_hultman(5, "dcj", distance_distribution(5, "dcj"));
  EXPECT_EQ(dcj.offset, 0);
  EXPECT_EQ(dcj.total_variation, 0);
  const auto bidc = compare_with_hultman(6, "bid", distance_distribution(6, "bid"));
  EXPECT_EQ(bidc.offset, 0);
  EXPECT_EQ(bidc.total_variation, 0);

  // A distribution that is the base series moved by two steps is fitted with m = 2.
  const auto base = hultman_distance_series(4, true);
  DistributionTable moved(4, "test");
  for (const auto& [k, c] : base.counts()) moved.add(k + 2, c);
  const auto fit = compare_with_hultman(4, "signed_reversal", moved);
  EXPECT_EQ(fit.offset, 2);
  EXPECT_EQ(fit.total_variation, 0);
  ExactInt sum = 0;
  for (const auto& r : fit.rows) sum += r.distance_count;
  EXPECT_EQ(sum, group_order_exact(4, true));

  const auto sr = compare_with_hultman(5, "signed_reversal", distance_distribution(5, "signed_reversal"));
  EXPECT_GE(sr.total_variation, 0);
  EXPECT_LE(sr.total_variation, 1);
}
