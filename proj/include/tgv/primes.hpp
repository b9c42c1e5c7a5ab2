#pragma once

#include <algorithm>
#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "tgv/error.hpp"

namespace tgv {

/// Largest sieve the library will build on request.
inline constexpr std::uint64_t sieve_guard = 100'000'000;

/// All primes up to `limit`, ascending.
struct PrimeTable {
  std::uint64_t limit = 0;
  std::vector<std::uint64_t> primes;

  /// Membership for m <= limit (binary search).
  bool contains(std::uint64_t m) const
  {
    if (m > limit)
      throw domain_error("PrimeTable::contains: " + std::to_string(m) +
                         " exceeds table limit " + std::to_string(limit));
    return std::binary_search(primes.begin(), primes.end(), m);
  }

  /// Largest tabulated prime <= m, or nullopt if none.
  std::optional<std::uint64_t> largest_leq(std::uint64_t m) const
  {
    auto it = std::upper_bound(primes.begin(), primes.end(), m);
    if (it == primes.begin())
      return std::nullopt;
    return *std::prev(it);
  }
};

/// Sieve of Eratosthenes over odd numbers.
inline PrimeTable sieve_upto(std::uint64_t limit)
{
  if (limit < 2)
    throw domain_error("sieve_upto: limit must be >= 2, got " + std::to_string(limit));
  if (limit > sieve_guard)
    throw resource_error("sieve_upto: limit " + std::to_string(limit) + " exceeds guard " +
                         std::to_string(sieve_guard));

  PrimeTable table;
  table.limit = limit;
  // composite[i] describes the odd number 2*i + 1
  std::vector<bool> composite(limit / 2 + 1, false);
  for (std::uint64_t i = 1; (2 * i + 1) * (2 * i + 1) <= limit; ++i) {
    if (composite[i])
      continue;
    const std::uint64_t p = 2 * i + 1;
    for (std::uint64_t q = p * p; q <= limit; q += 2 * p)
      composite[q / 2] = true;
  }
  table.primes.push_back(2);
  for (std::uint64_t i = 1; 2 * i + 1 <= limit; ++i)
    if (!composite[i])
      table.primes.push_back(2 * i + 1);
  return table;
}

/// Process-wide table covering at least `at_least`. Grown on demand by
/// doubling; earlier snapshots stay valid because tables are immutable.
inline std::shared_ptr<const PrimeTable> shared_primes(std::uint64_t at_least)
{
  static std::mutex mutex;
  static std::shared_ptr<const PrimeTable> current;

  std::lock_guard lock(mutex);
  if (!current || current->limit < at_least) {
    std::uint64_t target = std::max<std::uint64_t>(at_least, 1u << 16);
    if (current)
      target = std::max(target, std::min(2 * current->limit, sieve_guard));
    current = std::make_shared<const PrimeTable>(sieve_upto(target));
  }
  return current;
}

inline bool is_prime_small(std::uint64_t m)
{
  return m >= 2 && shared_primes(m)->contains(m);
}

/// The primes t with n/2 < t <= n, ascending.
inline std::vector<std::uint64_t> omega_set(std::uint64_t n)
{
  if (n < 5)
    throw domain_error("omega_set: n must be >= 5, got " + std::to_string(n));
  auto table = shared_primes(n);
  std::vector<std::uint64_t> omega;
  for (auto it = std::upper_bound(table->primes.begin(), table->primes.end(), n / 2);
       it != table->primes.end() && *it <= n; ++it) {
    if (2 * *it > n)
      omega.push_back(*it);
  }
  return omega;
}

inline std::uint64_t largest_prime_leq(std::uint64_t n)
{
  if (n < 2)
    throw domain_error("largest_prime_leq: n must be >= 2, got " + std::to_string(n));
  return *shared_primes(n)->largest_leq(n);
}

/// True iff the half-open interval (k, n] contains no prime.
inline bool interval_prime_free(std::uint64_t k, std::uint64_t n)
{
  if (k > n)
    throw domain_error("interval_prime_free: need k <= n, got k=" + std::to_string(k) +
                       " n=" + std::to_string(n));
  if (n < 2)
    return true;
  return largest_prime_leq(n) <= k;
}

struct GoldbachWitness {
  std::uint64_t smaller = 0;
  std::uint64_t larger = 0;
  /// The decomposed number: n, or n - 1 when n itself has no decomposition.
  std::uint64_t target = 0;
};

struct GoldbachReport {
  std::uint64_t n = 0;
  bool holds = false;
  std::optional<GoldbachWitness> witness;
};

namespace detail {

inline std::optional<GoldbachWitness> two_prime_split(std::uint64_t m, const PrimeTable& table)
{
  for (std::uint64_t q : table.primes) {
    if (2 * q > m)
      break;
    if (table.contains(m - q))
      return GoldbachWitness{q, m - q, m};
  }
  return std::nullopt;
}

} // namespace detail

/// Whether n or n - 1 is a sum of two primes. The witness carries the
/// smallest first summand, and a decomposition of n wins over one of n - 1.
inline GoldbachReport goldbach_condition(std::uint64_t n)
{
  if (n < 5)
    throw domain_error("goldbach_condition: n must be >= 5, got " + std::to_string(n));
  auto table = shared_primes(n);
  GoldbachReport report;
  report.n = n;
  report.witness = detail::two_prime_split(n, *table);
  if (!report.witness)
    report.witness = detail::two_prime_split(n - 1, *table);
  report.holds = report.witness.has_value();
  return report;
}

} // namespace tgv
