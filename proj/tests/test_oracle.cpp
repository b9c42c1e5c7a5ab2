#include <gtest/gtest.h>

#include <algorithm>

#include "tgv/oracle.hpp"

using namespace tgv;
using namespace tgv::oracle;

namespace {

std::vector<std::uint64_t> sizes(GroupKind kind, std::uint32_t n)
{
  std::vector<std::uint64_t> out;
  for (const auto& c : brute_classes(kind, n))
    out.push_back(c.size);
  std::sort(out.begin(), out.end());
  return out;
}

} // namespace

TEST(Perm, Validation)
{
  EXPECT_NO_THROW(Perm({2, 0, 1}));
  EXPECT_THROW(Perm({0, 0, 1}), domain_error);
  EXPECT_THROW(Perm({0, 3, 1}), domain_error);
}

TEST(Perm, GroupLaws)
{
  const auto group = enumerate_group(GroupKind::sym, 4);
  const Perm e = Perm::identity(4);
  for (const auto& a : group) {
    EXPECT_EQ(a * e, a);
    EXPECT_EQ(a * a.inverse(), e);
    for (const auto& b : group)
      EXPECT_EQ((a * b).is_even(), a.is_even() == b.is_even());
  }
}

TEST(Perm, CycleType)
{
  EXPECT_EQ(Perm({1, 2, 0, 4, 3}).cycle_type(), CycleType({3, 2}));
  EXPECT_TRUE(Perm({1, 2, 0, 3}).is_even());
  EXPECT_FALSE(Perm({1, 0, 2}).is_even());
}

TEST(Brute, Examples)
{
  EXPECT_EQ(sizes(GroupKind::sym, 3), (std::vector<std::uint64_t>{1, 2, 3}));
  EXPECT_EQ(sizes(GroupKind::alt, 4), (std::vector<std::uint64_t>{1, 3, 4, 4}));
  EXPECT_EQ(sizes(GroupKind::alt, 5), (std::vector<std::uint64_t>{1, 12, 12, 15, 20}));
  EXPECT_EQ(sizes(GroupKind::alt, 1), (std::vector<std::uint64_t>{1}));
  EXPECT_THROW(brute_classes(GroupKind::sym, 9), resource_error);
}

TEST(Brute, GroupSizes)
{
  EXPECT_EQ(enumerate_group(GroupKind::sym, 6).size(), 720u);
  EXPECT_EQ(enumerate_group(GroupKind::alt, 6).size(), 360u);
}

TEST(Brute, SymClassesAreCycleTypes)
{
  for (std::uint32_t n = 1; n <= 7; ++n) {
    const auto classes = brute_classes(GroupKind::sym, n);
    std::vector<CycleType> types;
    for (const auto& c : classes)
      types.push_back(c.type);
    std::sort(types.begin(), types.end());
    EXPECT_EQ(std::adjacent_find(types.begin(), types.end()), types.end()) << n;
    EXPECT_EQ(types.size(), partitions_of(n).size()) << n;
  }
}

TEST(Compare, Examples)
{
  const auto alt5 = compare_with_formula(GroupKind::alt, 5);
  EXPECT_TRUE(alt5.match);
  std::size_t fives = 0;
  for (const auto& c : brute_classes(GroupKind::alt, 5))
    if (c.type == CycleType({5})) {
      ++fives;
      EXPECT_EQ(c.size, 12u);
    }
  EXPECT_EQ(fives, 2u);

  const auto sym7 = compare_with_formula(GroupKind::sym, 7);
  EXPECT_TRUE(sym7.match);
  EXPECT_EQ(sym7.type_count, 15u);

  const auto alt7 = compare_with_formula(GroupKind::alt, 7);
  EXPECT_TRUE(alt7.match);
  EXPECT_EQ(alt7.brute_class_count, 9u);
}

TEST(Compare, AllDegreesUpToEight)
{
  for (std::uint32_t n = 1; n <= max_degree; ++n)
    for (GroupKind kind : {GroupKind::sym, GroupKind::alt})
      EXPECT_TRUE(compare_with_formula(kind, n).match) << to_string(kind) << ' ' << n;
}
