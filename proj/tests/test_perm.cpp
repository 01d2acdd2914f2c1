#include "hultman/perm.hpp"

#include <gtest/gtest.h>

#include <random>
#include <set>
#include <vector>

using namespace hultman;

namespace {

SignedPermutation random_signed(int n, std::mt19937& rng) {
  std::vector<int> v(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) v[i] = i + 1;
  std::shuffle(v.begin(), v.end(), rng);
  for (auto& x : v)
    if (rng() & 1) x = -x;
  return SignedPermutation::validate(v);
}

}  // namespace

TEST(Permutation, ValidateRejectsBadInput) {
  try {
    SignedPermutation::validate({1, 1});
    FAIL();
  } catch (const PermutationError& e) {
    EXPECT_EQ(e.position(), 2);
  }
  try {
    SignedPermutation::validate({0, 1});
    FAIL();
  } catch (const PermutationError& e) {
    EXPECT_EQ(e.position(), 1);
  }
  EXPECT_THROW(SignedPermutation::validate({1, 3}), PermutationError);
  EXPECT_THROW(SignedPermutation::validate({2, -2}), PermutationError);
  EXPECT_NO_THROW(SignedPermutation::validate({}));
}

TEST(Permutation, ParseAndPrint) {
  const auto p = parse_permutation("-5, 1, 2 4 -7 -3 6");
  EXPECT_EQ(p.size(), 7);
  EXPECT_EQ(p.image(1), -5);
  EXPECT_FALSE(p.is_unsigned());
  EXPECT_EQ(parse_permutation(p.str()), p);
  EXPECT_THROW(parse_permutation("1, x"), PermutationError);
  EXPECT_TRUE(parse_permutation("1 2 3").is_identity());
}

TEST(Permutation, ComposeInverseConjugate) {
  const auto a = parse_permutation("2 3 1");
  const auto b = parse_permutation("2 1 3");
  // (a o b)(1) = a(b(1)) = a(2) = 3
  EXPECT_EQ(compose(a, b).image(1), 3);
  EXPECT_TRUE(compose(a, inverse(a)).is_identity());
  const auto s = parse_permutation("-2 1");
  EXPECT_EQ(inverse(s), parse_permutation("2 -1"));
  EXPECT_TRUE(compose(s, inverse(s)).is_identity());
  EXPECT_THROW(compose(a, parse_permutation("1 2")), std::invalid_argument);

  std::mt19937 rng(7);
  for (int t = 0; t < 200; ++t) {
    const auto p = random_signed(6, rng), q = random_signed(6, rng), r = random_signed(6, rng);
    EXPECT_EQ(compose(compose(p, q), r), compose(p, compose(q, r)));
    EXPECT_EQ(inverse(compose(p, q)), compose(inverse(q), inverse(p)));
    EXPECT_EQ(conjugate(compose(p, q), r), compose(conjugate(p, r), conjugate(q, r)));
  }
}

TEST(Permutation, CycleDecomposition) {
  const auto p = parse_permutation("2 3 1 5 4 6");
  const auto d = cycle_decomposition(p);
  EXPECT_EQ(d.count(), 3);
  EXPECT_EQ(cycle_count(p), 3);
  auto lengths = d.lengths();
  std::sort(lengths.begin(), lengths.end());
  EXPECT_EQ(lengths, (std::vector<int>{1, 2, 3}));
  EXPECT_EQ(cycle_count(SignedPermutation::identity(4)), 4);
  EXPECT_EQ(cycle_count(SignedPermutation::identity(0)), 0);
}

TEST(Enumeration, RankUnrankRoundTrip) {
  for (int n = 0; n <= 6; ++n) {
    for (std::uint64_t r = 0; r < group_order(n, false); ++r) EXPECT_EQ(rank_unsigned(unrank_unsigned(n, r)), r);
  }
  for (int n = 0; n <= 4; ++n) {
    for (std::uint64_t r = 0; r < group_order(n, true); ++r) EXPECT_EQ(rank_signed(unrank_signed(n, r)), r);
  }
}

TEST(Enumeration, LexicographicOrderAndCompleteness) {
  for (int n = 0; n <= 5; ++n) {
    std::set<std::vector<int>> seen;
    std::vector<int> prev;
    for (const auto& p : enumerate_unsigned(n)) {
      const std::vector<int> v(p.images().begin(), p.images().end());
      if (!prev.empty()) EXPECT_LT(prev, v);
      prev = v;
      seen.insert(v);
    }
    EXPECT_EQ(seen.size(), group_order(n, false));
  }
  for (int n = 0; n <= 4; ++n) {
    std::set<std::vector<int>> seen;
    std::vector<int> prev;
    bool first = true;
    for (const auto& p : enumerate_signed(n)) {
      const std::vector<int> v(p.images().begin(), p.images().end());
      if (!first) EXPECT_LT(prev, v);
      first = false;
      prev = v;
      seen.insert(v);
    }
    EXPECT_EQ(seen.size(), group_order(n, true));
  }
  const auto it = enumerate_signed(2).begin();
  EXPECT_EQ(*it, parse_permutation("-2 -1"));
}

TEST(Enumeration, SplitCoversRangeInOrder) {
  const auto all = enumerate_signed(4);
  const auto parts = all.split(7);
  std::uint64_t expect = 0;
  for (const auto& part : parts) {
    EXPECT_EQ(part.first(), expect);
    expect = part.last();
  }
  EXPECT_EQ(expect, all.size());
  std::vector<SignedPermutation> joined;
  for (const auto& part : parts)
    for (const auto& p : part) joined.push_back(p);
  std::vector<SignedPermutation> direct(all.begin(), all.end());
  EXPECT_EQ(joined, direct);
}

TEST(Enumeration, Guards) {
  EXPECT_THROW(enumerate_unsigned(13), GuardError);
  EXPECT_THROW(enumerate_signed(10), GuardError);
  EXPECT_NO_THROW(enumerate_signed(10, true));
  EXPECT_EQ(group_order(10, true), 3715891200ULL);
}

TEST(Factorizations, CountsMatchHandValues) {
  // n = 1: beta = (1 2); omega ranges over S_2.
  EXPECT_EQ(count_factorizations(1, 2, false), 1);
  EXPECT_EQ(count_factorizations(1, 1, false), 0);
  EXPECT_EQ(count_factorizations(2, 1, false) + count_factorizations(2, 3, false), 2);
  EXPECT_THROW(count_factorizations(8, 1), GuardError);
}
