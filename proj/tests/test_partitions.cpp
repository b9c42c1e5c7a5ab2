#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "tgv/partitions.hpp"

using namespace tgv;

namespace {

std::vector<std::vector<std::uint32_t>> parts_of(const std::vector<CycleType>& types)
{
  std::vector<std::vector<std::uint32_t>> out;
  for (const auto& t : types)
    out.push_back(t.parts());
  return out;
}

std::size_t count(std::uint32_t m, PartitionFilter filter = {})
{
  std::size_t c = 0;
  for_each_partition(m, filter, [&](const CycleType&) { ++c; });
  return c;
}

} // namespace

TEST(CycleType, NormalizesParts)
{
  const CycleType t({1, 3, 1});
  EXPECT_EQ(t.parts(), (std::vector<std::uint32_t>{3, 1, 1}));
  EXPECT_EQ(t.size(), 5u);
  EXPECT_EQ(t.fixed_points(), 2u);
  EXPECT_EQ(t.to_string(), "(3,1,1)");
  EXPECT_THROW(CycleType({2, 0}), domain_error);
}

TEST(Partitions, Examples)
{
  EXPECT_EQ(partitions_of(5).size(), 7u);
  EXPECT_EQ(parts_of(partitions_of(5, {true, Parity::any})),
            (std::vector<std::vector<std::uint32_t>>{{5}, {3, 2}}));
  EXPECT_EQ(parts_of(partitions_of(4, {false, Parity::even})),
            (std::vector<std::vector<std::uint32_t>>{{3, 1}, {2, 2}, {1, 1, 1, 1}}));
  EXPECT_EQ(partitions_of(0).size(), 1u);
  EXPECT_TRUE(partitions_of(1, {true, Parity::any}).empty());
}

TEST(Partitions, Guard)
{
  EXPECT_NO_THROW(for_each_partition(200, {}, [](const CycleType&) { return false; }));
  EXPECT_THROW(partitions_of(201), resource_error);
}

TEST(Partitions, CountsFollowPentagonalRecurrence)
{
  const auto p = oracle_ref::partition_numbers(60);
  for (std::uint32_t m = 0; m <= 60; ++m)
    ASSERT_EQ(count(m), static_cast<std::size_t>(p[m])) << m;
}

TEST(Partitions, FixedPointFreeCount)
{
  const auto p = oracle_ref::partition_numbers(60);
  for (std::uint32_t m = 1; m <= 60; ++m)
    ASSERT_EQ(count(m, {true, Parity::any}), static_cast<std::size_t>(p[m] - p[m - 1])) << m;
}

TEST(Partitions, ParitySplitIsExhaustive)
{
  for (std::uint32_t m = 0; m <= 50; ++m) {
    ASSERT_EQ(count(m, {false, Parity::even}) + count(m, {false, Parity::odd}), count(m)) << m;
    ASSERT_EQ(count(m, {true, Parity::even}) + count(m, {true, Parity::odd}), count(m, {true, Parity::any})) << m;
  }
}

TEST(Partitions, MatchesIndependentEnumeration)
{
  for (int m = 0; m <= 30; ++m) {
    for (bool no_ones : {false, true}) {
      const auto ref = oracle_ref::partitions(m, no_ones ? 2 : 1);
      const auto got = partitions_of(m, {no_ones, Parity::any});
      ASSERT_EQ(got.size(), ref.size());
      for (std::size_t i = 0; i < ref.size(); ++i)
        ASSERT_EQ(got[i].parts(), std::vector<std::uint32_t>(ref[i].begin(), ref[i].end()));
    }
  }
}

TEST(Partitions, RandomParityFilterAgreesWithOracle)
{
  std::mt19937 rng(99);
  for (int i = 0; i < 1000; ++i) {
    const int m = static_cast<int>(rng() % 25);
    const bool no_ones = rng() % 2;
    const Parity parity = rng() % 2 ? Parity::even : Parity::odd;
    std::size_t expected = 0;
    for (const auto& g : oracle_ref::partitions(m, no_ones ? 2 : 1))
      expected += oracle_ref::is_even(g) == (parity == Parity::even);
    ASSERT_EQ(count(m, {no_ones, parity}), expected);
  }
}

TEST(Partitions, EarlyStop)
{
  int seen = 0;
  for_each_partition(30, {}, [&](const CycleType&) { return ++seen < 5; });
  EXPECT_EQ(seen, 5);
}

TEST(Parity, Examples)
{
  EXPECT_TRUE(is_even_type(CycleType({3})));
  EXPECT_FALSE(is_even_type(CycleType({2, 1})));
  EXPECT_TRUE(is_even_type(CycleType({2, 2})));
}

TEST(Split, Examples)
{
  EXPECT_TRUE(splits_in_alt(CycleType({5})));
  EXPECT_FALSE(splits_in_alt(CycleType({3, 1, 1})));
  EXPECT_TRUE(splits_in_alt(CycleType({7, 5, 3, 1})));
  EXPECT_THROW(splits_in_alt(CycleType({2, 1})), precondition_error);
  EXPECT_FALSE(splits_in_alt(CycleType({1})));
}

TEST(Split, MatchesOddDistinctRule)
{
  for (int m = 1; m <= 25; ++m)
    for (const auto& g : oracle_ref::partitions(m))
      if (oracle_ref::is_even(g))
        ASSERT_EQ(splits_in_alt(CycleType(std::vector<std::uint32_t>(g.begin(), g.end()))),
                  m >= 2 && oracle_ref::odd_distinct(g));
}

TEST(CycleType, JoinAndFixedPoints)
{
  EXPECT_EQ(with_fixed_points(CycleType({3}), 2), CycleType({3, 1, 1}));
  EXPECT_EQ(join(CycleType({2}), CycleType({5, 1})), CycleType({5, 2, 1}));
}
