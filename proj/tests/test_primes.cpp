#include <gtest/gtest.h>

#include "oracles.hpp"
#include "tgv/primes.hpp"

using namespace tgv;

TEST(Sieve, SmallTables)
{
  EXPECT_EQ(sieve_upto(10).primes, (std::vector<std::uint64_t>{2, 3, 5, 7}));
  EXPECT_EQ(sieve_upto(2).primes, (std::vector<std::uint64_t>{2}));
  const auto t30 = sieve_upto(30);
  ASSERT_EQ(t30.primes.size(), 10u);
  EXPECT_EQ(t30.primes.back(), 29u);
}

TEST(Sieve, RejectsTinyLimit)
{
  EXPECT_THROW(sieve_upto(1), domain_error);
  EXPECT_THROW(sieve_upto(0), domain_error);
}

TEST(Sieve, AgreesWithTrialDivision)
{
  const auto table = sieve_upto(20000);
  std::vector<std::uint64_t> expected;
  for (std::uint64_t m = 2; m <= 20000; ++m)
    if (oracle_ref::is_prime_trial(m))
      expected.push_back(m);
  EXPECT_EQ(table.primes, expected);
}

TEST(Sieve, ContainsBeyondLimitThrows)
{
  const auto table = sieve_upto(100);
  EXPECT_TRUE(table.contains(97));
  EXPECT_FALSE(table.contains(91));
  EXPECT_THROW(table.contains(101), domain_error);
}

TEST(Omega, Examples)
{
  EXPECT_EQ(omega_set(23), (std::vector<std::uint64_t>{13, 17, 19, 23}));
  EXPECT_EQ(omega_set(26), (std::vector<std::uint64_t>{17, 19, 23}));
  EXPECT_EQ(omega_set(10), (std::vector<std::uint64_t>{7}));
  EXPECT_THROW(omega_set(4), domain_error);
}

TEST(Omega, MatchesTrialAndEndsAtLargestPrime)
{
  for (int n = 5; n <= 2000; ++n) {
    const auto omega = omega_set(n);
    const auto expected = oracle_ref::omega_trial(n);
    ASSERT_EQ(omega.size(), expected.size()) << n;
    for (std::size_t i = 0; i < omega.size(); ++i)
      ASSERT_EQ(omega[i], static_cast<std::uint64_t>(expected[i])) << n;
    ASSERT_FALSE(omega.empty()) << n;
    ASSERT_EQ(omega.back(), largest_prime_leq(n)) << n;
  }
}

TEST(LargestPrime, Examples)
{
  EXPECT_EQ(largest_prime_leq(26), 23u);
  EXPECT_EQ(largest_prime_leq(23), 23u);
  EXPECT_EQ(largest_prime_leq(126), 113u);
  EXPECT_EQ(largest_prime_leq(2), 2u);
  EXPECT_THROW(largest_prime_leq(1), domain_error);
}

TEST(PrimeFree, Examples)
{
  EXPECT_TRUE(interval_prime_free(23, 26));
  EXPECT_FALSE(interval_prime_free(22, 26));
  EXPECT_TRUE(interval_prime_free(40, 40));
  EXPECT_THROW(interval_prime_free(27, 26), domain_error);
}

TEST(PrimeFree, MonotoneInLowerEnd)
{
  for (std::uint64_t n = 10; n <= 400; ++n) {
    bool seen_free = false;
    for (std::uint64_t k = 1; k <= n; ++k) {
      const bool free = interval_prime_free(k, n);
      if (seen_free)
        ASSERT_TRUE(free) << k << ' ' << n;
      seen_free = seen_free || free;
      bool brute = true;
      for (std::uint64_t m = k + 1; m <= n; ++m)
        brute = brute && !oracle_ref::is_prime_trial(m);
      ASSERT_EQ(free, brute) << k << ' ' << n;
    }
  }
}

TEST(Goldbach, Examples)
{
  const auto r24 = goldbach_condition(24);
  ASSERT_TRUE(r24.holds);
  EXPECT_EQ(r24.witness->smaller, 5u);
  EXPECT_EQ(r24.witness->larger, 19u);
  EXPECT_EQ(r24.witness->target, 24u);

  const auto r27 = goldbach_condition(27);
  ASSERT_TRUE(r27.holds);
  EXPECT_EQ(r27.witness->target, 26u);
  EXPECT_EQ(r27.witness->smaller, 3u);
  EXPECT_EQ(r27.witness->larger, 23u);

  const auto r5 = goldbach_condition(5);
  ASSERT_TRUE(r5.holds);
  EXPECT_EQ(r5.witness->smaller, 2u);
  EXPECT_EQ(r5.witness->larger, 3u);

  EXPECT_THROW(goldbach_condition(4), domain_error);
}

TEST(Goldbach, AgreesWithPairEnumeration)
{
  for (std::uint64_t n = 5; n <= 600; ++n) {
    const bool brute = oracle_ref::two_prime_sum(n) || oracle_ref::two_prime_sum(n - 1);
    ASSERT_EQ(goldbach_condition(n).holds, brute) << n;
  }
}

TEST(Goldbach, WitnessIsValidUpTo10000)
{
  for (std::uint64_t n = 5; n <= 10000; ++n) {
    const auto r = goldbach_condition(n);
    ASSERT_TRUE(r.holds) << n;
    const auto& w = *r.witness;
    ASSERT_TRUE(w.target == n || w.target == n - 1);
    ASSERT_EQ(w.smaller + w.larger, w.target);
    ASSERT_LE(w.smaller, w.larger);
    ASSERT_TRUE(oracle_ref::is_prime_trial(w.smaller));
    ASSERT_TRUE(oracle_ref::is_prime_trial(w.larger));
    for (std::uint64_t q = 2; q < w.smaller; ++q)
      ASSERT_FALSE(oracle_ref::is_prime_trial(q) && oracle_ref::is_prime_trial(w.target - q)) << n;
  }
}
