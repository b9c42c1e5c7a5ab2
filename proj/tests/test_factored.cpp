#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "tgv/factored.hpp"
#include "tgv/primes.hpp"

using namespace tgv;

namespace {

FactoredNat fn(std::vector<FactoredNat::Term> terms)
{
  return FactoredNat::from_terms(std::move(terms));
}

// Random value built over a small prime basis so that divisibility is common.
FactoredNat random_factored(std::mt19937_64& rng)
{
  static const std::uint64_t basis[] = {2, 3, 5, 7, 11, 13};
  std::uniform_int_distribution<int> exp(0, 3);
  std::vector<FactoredNat::Term> terms;
  for (auto p : basis)
    terms.emplace_back(p, exp(rng));
  return fn(terms);
}

} // namespace

TEST(Factor, Examples)
{
  EXPECT_TRUE(factor(1).is_one());
  EXPECT_EQ(factor(12), fn({{2, 2}, {3, 1}}));
  EXPECT_EQ(factor(97), fn({{97, 1}}));
  EXPECT_THROW(factor(0), domain_error);
}

TEST(Factor, LargeInputs)
{
  EXPECT_EQ(factor(18446744073709551557ull), fn({{18446744073709551557ull, 1}}));
  EXPECT_EQ(factor(4294967291ull * 4294967279ull), fn({{4294967279ull, 1}, {4294967291ull, 1}}));
  EXPECT_EQ(factor(1ull << 63), fn({{2, 63}}));
  EXPECT_EQ(factor(999999999989ull * 3), fn({{3, 1}, {999999999989ull, 1}}));
}

TEST(Factor, RoundTripsThroughDecimal)
{
  std::mt19937_64 rng(7);
  for (int i = 0; i < 2000; ++i) {
    const std::uint64_t m = rng() % 1'000'000'000'000'000'000ull + 1;
    const auto f = factor(m);
    ASSERT_EQ(to_decimal(f), std::to_string(m));
    for (const auto& [p, e] : f.terms())
      ASSERT_TRUE(detail::is_prime_u64(p)) << p;
  }
}

TEST(Factor, MultiplicativeProperty)
{
  std::mt19937_64 rng(11);
  for (int i = 0; i < 2000; ++i) {
    const std::uint64_t a = rng() % 4'000'000'000ull + 1;
    const std::uint64_t b = rng() % 4'000'000'000ull + 1;
    ASSERT_EQ(factor(a * b), multiply(factor(a), factor(b))) << a << ' ' << b;
  }
}

TEST(Factorial, Examples)
{
  EXPECT_TRUE(factorial_factored(0).is_one());
  EXPECT_EQ(factorial_factored(5), fn({{2, 3}, {3, 1}, {5, 1}}));
  const auto f10 = factorial_factored(10);
  EXPECT_EQ(f10.exponent(2), 8u);
  EXPECT_EQ(f10.exponent(3), 4u);
  EXPECT_EQ(f10.exponent(5), 2u);
  EXPECT_EQ(f10.exponent(7), 1u);
}

TEST(Factorial, Recurrence)
{
  FactoredNat running;
  for (std::uint64_t n = 1; n <= 2000; ++n) {
    running *= factor(n);
    ASSERT_EQ(factorial_factored(n), running) << n;
  }
}

TEST(Factorial, MatchesNativeValues)
{
  for (int n = 0; n <= 33; ++n)
    ASSERT_EQ(to_decimal(factorial_factored(n)), oracle_ref::to_string128(oracle_ref::factorial128(n))) << n;
}

TEST(Factorial, LargePrimesAppearOnce)
{
  for (std::uint64_t n = 5; n <= 1361; ++n) {
    const auto f = factorial_factored(n);
    for (auto t : omega_set(n))
      ASSERT_EQ(f.exponent(t), 1u) << n << ' ' << t;
  }
}

TEST(Multiply, Examples)
{
  EXPECT_EQ(multiply(fn({{2, 1}}), fn({{3, 1}})), fn({{2, 1}, {3, 1}}));
  const auto a = fn({{5, 2}, {11, 1}});
  EXPECT_EQ(multiply(a, FactoredNat{}), a);
  EXPECT_EQ(multiply(fn({{2, 2}}), fn({{2, 3}})), fn({{2, 5}}));
}

TEST(DivideExact, Examples)
{
  EXPECT_EQ(divide_exact(fn({{2, 3}, {3, 1}}), fn({{2, 1}})), fn({{2, 2}, {3, 1}}));
  const auto a = fn({{2, 3}, {7, 4}});
  EXPECT_TRUE(divide_exact(a, a).is_one());
  try {
    divide_exact(fn({{2, 1}}), fn({{3, 1}}));
    FAIL() << "expected precondition_error";
  } catch (const precondition_error& e) {
    EXPECT_NE(std::string(e.what()).find('3'), std::string::npos);
  }
}

TEST(Divides, Examples)
{
  EXPECT_TRUE(divides(fn({{2, 1}, {3, 1}}), fn({{2, 2}, {3, 1}, {5, 1}})));
  EXPECT_FALSE(divides(fn({{2, 2}}), fn({{2, 1}})));
  EXPECT_TRUE(divides(FactoredNat{}, fn({{13, 2}})));
  EXPECT_TRUE(divides(FactoredNat{}, FactoredNat{}));
}

TEST(Divides, PartialOrderLaws)
{
  std::mt19937_64 rng(2024);
  for (int i = 0; i < 3000; ++i) {
    const auto a = random_factored(rng);
    const auto b = random_factored(rng);
    const auto c = random_factored(rng);
    ASSERT_TRUE(divides(a, a));
    if (divides(a, b) && divides(b, a))
      ASSERT_EQ(a, b);
    if (divides(a, b) && divides(b, c))
      ASSERT_TRUE(divides(a, c));
    ASSERT_TRUE(divides(a, multiply(a, b)));
    ASSERT_TRUE(divides(gcd(a, b), a));
    ASSERT_TRUE(divides(gcd(a, b), b));
    if (divides(a, b))
      ASSERT_EQ(multiply(divide_exact(b, a), a), b);
  }
}

TEST(Divides, AgreesWithNativeModulo)
{
  std::mt19937_64 rng(5);
  for (int i = 0; i < 3000; ++i) {
    const std::uint64_t a = rng() % 5000 + 1;
    const std::uint64_t b = rng() % 200000 + 1;
    ASSERT_EQ(divides(factor(a), factor(b)), b % a == 0) << a << ' ' << b;
  }
}

TEST(Decimal, Examples)
{
  EXPECT_EQ(to_decimal(fn({{2, 3}, {3, 1}, {5, 1}})), "120");
  EXPECT_EQ(to_decimal(FactoredNat{}), "1");
  const auto v = divide_exact(factorial_factored(26), multiply(factor(3), factorial_factored(23)));
  EXPECT_EQ(to_decimal(v), "5200");
}

TEST(Decimal, BeyondMachineWords)
{
  EXPECT_EQ(to_decimal(fn({{2, 64}})), "18446744073709551616");
  EXPECT_EQ(to_decimal(factorial_factored(30)), "265252859812191058636308480000000");
  oracle_ref::u128 big = 1;
  for (int i = 0; i < 5; ++i)
    big *= 10007;
  big *= 999983;
  EXPECT_EQ(to_decimal(fn({{10007, 5}, {999983, 1}})), oracle_ref::to_string128(big));
}

TEST(Ordering, ValueLessMatchesNumericOrder)
{
  std::mt19937_64 rng(3);
  for (int i = 0; i < 3000; ++i) {
    const std::uint64_t a = rng() % 1'000'000'000'000ull + 1;
    const std::uint64_t b = rng() % 1'000'000'000'000ull + 1;
    ASSERT_EQ(value_less(factor(a), factor(b)), a < b) << a << ' ' << b;
  }
  std::vector<FactoredNat> v{factor(12), factor(5), factor(12), factor(1)};
  sort_values(v);
  EXPECT_EQ(v, (std::vector<FactoredNat>{factor(1), factor(5), factor(12)}));
}

TEST(Json, RoundTrip)
{
  const auto a = fn({{2, 3}, {13, 1}, {101, 2}});
  const auto j = to_json(a);
  EXPECT_EQ(j.dump(), R"({"2":3,"13":1,"101":2})");
  EXPECT_EQ(factored_from_json(j), a);
  EXPECT_EQ(to_json(FactoredNat{}).dump(), "{}");
}

TEST(Json, RejectsMalformed)
{
  EXPECT_THROW(factored_from_json(nlohmann::ordered_json::parse(R"({"4":1})")), domain_error);
  EXPECT_THROW(factored_from_json(nlohmann::ordered_json::parse(R"({"2":0})")), domain_error);
  EXPECT_THROW(factored_from_json(nlohmann::ordered_json::parse(R"([2])")), domain_error);
}
