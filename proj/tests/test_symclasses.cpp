#include <gtest/gtest.h>

#include "oracles.hpp"
#include "tgv/oracle.hpp"
#include "tgv/primes.hpp"
#include "tgv/symclasses.hpp"

using namespace tgv;

namespace {

std::vector<std::string> decimals(const std::vector<FactoredNat>& values)
{
  std::vector<std::string> out;
  for (const auto& v : values)
    out.push_back(to_decimal(v));
  return out;
}

CycleType ct(std::vector<std::uint32_t> parts)
{
  return CycleType(std::move(parts));
}

} // namespace

TEST(GroupKind, Parse)
{
  EXPECT_EQ(parse_group_kind("sym"), GroupKind::sym);
  EXPECT_EQ(parse_group_kind("Alt"), GroupKind::alt);
  EXPECT_THROW(parse_group_kind("dih"), domain_error);
}

TEST(Centralizer, Examples)
{
  EXPECT_EQ(to_decimal(centralizer_order_sym(ct({3, 1, 1}))), "6");
  EXPECT_EQ(centralizer_order_sym(ct({1, 1, 1, 1, 1, 1, 1, 1, 1})), factorial_factored(9));
  EXPECT_EQ(to_decimal(centralizer_order_sym(ct({2, 2}))), "8");
  EXPECT_THROW(centralizer_order(GroupKind::alt, ct({2, 1})), domain_error);
}

TEST(ClassSize, Examples)
{
  EXPECT_EQ(to_decimal(class_size(GroupKind::sym, 3, ct({3}))), "2");
  EXPECT_EQ(to_decimal(class_size(GroupKind::alt, 5, ct({5}))), "12");
  EXPECT_EQ(to_decimal(class_size(GroupKind::alt, 4, ct({2, 2}))), "3");
  EXPECT_THROW(class_size(GroupKind::alt, 4, ct({2, 1, 1})), domain_error);
  EXPECT_THROW(class_size(GroupKind::sym, 5, ct({2, 1})), std::exception);
}

TEST(ClassSizeSet, Examples)
{
  EXPECT_EQ(decimals(class_size_set(GroupKind::sym, 3).sorted), (std::vector<std::string>{"1", "2", "3"}));
  EXPECT_EQ(decimals(class_size_set(GroupKind::alt, 5).sorted), (std::vector<std::string>{"1", "12", "15", "20"}));
  EXPECT_EQ(decimals(class_size_set(GroupKind::alt, 4).sorted), (std::vector<std::string>{"1", "3", "4"}));
  EXPECT_EQ(decimals(class_size_set(GroupKind::sym, 5).sorted),
            (std::vector<std::string>{"1", "10", "15", "20", "24", "30"}));
  EXPECT_THROW(class_size_set(GroupKind::sym, 0), domain_error);
  EXPECT_THROW(class_size_set(GroupKind::sym, 1501), resource_error);
}

TEST(ClassSize, MatchesNativeArithmetic)
{
  for (int n = 1; n <= 30; ++n) {
    for (bool alt : {false, true}) {
      const GroupKind kind = alt ? GroupKind::alt : GroupKind::sym;
      for (const auto& g : oracle_ref::partitions(n)) {
        if (alt && !oracle_ref::is_even(g))
          continue;
        const auto got = class_size(kind, n, ct({g.begin(), g.end()}));
        ASSERT_EQ(to_decimal(got), oracle_ref::to_string128(oracle_ref::class_size128(alt, g)));
      }
    }
  }
}

TEST(ClassEquation, NativeSums)
{
  for (int n = 1; n <= 20; ++n) {
    for (GroupKind kind : {GroupKind::sym, GroupKind::alt}) {
      oracle_ref::u128 total = 0;
      for (const auto& rec : class_records(kind, n)) {
        const oracle_ref::u128 size = std::stoull(to_decimal(rec.class_size));
        total += rec.splits ? 2 * size : size;
      }
      oracle_ref::u128 order = oracle_ref::factorial128(n);
      if (kind == GroupKind::alt && n >= 2)
        order /= 2;
      ASSERT_TRUE(total == order) << to_string(kind) << ' ' << n;
    }
  }
}

TEST(ClassSizes, LargePrimeSquaresNeverDivide)
{
  for (std::uint32_t n = 5; n <= 45; ++n)
    for (GroupKind kind : {GroupKind::sym, GroupKind::alt}) {
      const auto spectrum = class_size_set(kind, n);
      for (auto t : omega_set(n))
        for (const auto& v : spectrum.sorted)
          ASSERT_LE(v.exponent(t), 1u) << n << ' ' << t;
    }
}

TEST(ClassSizes, OracleAgreementUpToEight)
{
  for (std::uint32_t n = 1; n <= oracle::max_degree; ++n) {
    for (GroupKind kind : {GroupKind::sym, GroupKind::alt}) {
      const auto report = oracle::compare_with_formula(kind, n);
      EXPECT_TRUE(report.match) << to_string(kind) << ' ' << n << ": "
                                << (report.mismatches.empty() ? "" : report.mismatches.front());
    }
  }
}

TEST(ClassRecords, TypeCounts)
{
  // Sym_7 has 15 types; Alt_7 has 8 even types and only (7) splits
  const auto sym7 = class_records(GroupKind::sym, 7);
  EXPECT_EQ(sym7.size(), 15u);
  const auto alt7 = class_records(GroupKind::alt, 7);
  EXPECT_EQ(alt7.size(), 8u);
  std::size_t splits = 0;
  for (const auto& r : alt7)
    splits += r.splits;
  EXPECT_EQ(splits, 1u);
}
