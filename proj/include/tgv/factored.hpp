#pragma once

#include <algorithm>
#include <cmath>
#include <compare>
#include <cstdint>
#include <functional>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "tgv/error.hpp"
#include "tgv/primes.hpp"

namespace tgv {

/// A positive integer stored as its prime factorization: (prime, exponent)
/// pairs sorted by prime, every exponent >= 1. The empty list is 1.
class FactoredNat {
public:
  using Term = std::pair<std::uint64_t, std::uint32_t>;

  FactoredNat() = default;

  /// Builds from arbitrary (prime, exponent) terms: sorts, merges repeated
  /// primes and drops zero exponents. Primality of the keys is the caller's
  /// responsibility.
  static FactoredNat from_terms(std::vector<Term> terms)
  {
    std::sort(terms.begin(), terms.end());
    FactoredNat out;
    for (const auto& [p, e] : terms) {
      if (e == 0)
        continue;
      if (!out.terms_.empty() && out.terms_.back().first == p)
        out.terms_.back().second += e;
      else
        out.terms_.emplace_back(p, e);
    }
    return out;
  }

  static FactoredNat prime_power(std::uint64_t p, std::uint32_t e)
  {
    FactoredNat out;
    if (e > 0)
      out.terms_.emplace_back(p, e);
    return out;
  }

  const std::vector<Term>& terms() const noexcept { return terms_; }
  bool is_one() const noexcept { return terms_.empty(); }

  std::uint32_t exponent(std::uint64_t p) const noexcept
  {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), p,
                               [](const Term& t, std::uint64_t q) { return t.first < q; });
    return (it != terms_.end() && it->first == p) ? it->second : 0;
  }

  /// Number of prime factors counted with multiplicity.
  std::uint64_t exponent_sum() const noexcept
  {
    std::uint64_t s = 0;
    for (const auto& t : terms_)
      s += t.second;
    return s;
  }

  double log2_estimate() const noexcept
  {
    double s = 0.0;
    for (const auto& [p, e] : terms_)
      s += e * std::log2(static_cast<double>(p));
    return s;
  }

  FactoredNat& operator*=(const FactoredNat& rhs)
  {
    if (rhs.terms_.empty())
      return *this;
    std::vector<Term> merged;
    merged.reserve(terms_.size() + rhs.terms_.size());
    auto a = terms_.begin();
    auto b = rhs.terms_.begin();
    while (a != terms_.end() || b != rhs.terms_.end()) {
      if (b == rhs.terms_.end() || (a != terms_.end() && a->first < b->first))
        merged.push_back(*a++);
      else if (a == terms_.end() || b->first < a->first)
        merged.push_back(*b++);
      else {
        merged.emplace_back(a->first, a->second + b->second);
        ++a;
        ++b;
      }
    }
    terms_ = std::move(merged);
    return *this;
  }

  friend bool operator==(const FactoredNat&, const FactoredNat&) = default;

private:
  std::vector<Term> terms_;
};

namespace detail {

inline std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m)
{
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

inline std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m)
{
  std::uint64_t result = 1 % m;
  base %= m;
  while (exp > 0) {
    if (exp & 1)
      result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return result;
}

// Miller-Rabin with the first twelve prime bases is exact below 3.3e24.
inline bool is_prime_u64(std::uint64_t n)
{
  if (n < 2)
    return false;
  for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % p == 0)
      return n == p;
  }
  std::uint64_t d = n - 1;
  int r = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++r;
  }
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    std::uint64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1)
      continue;
    bool composite = true;
    for (int i = 1; i < r && composite; ++i) {
      x = mul_mod(x, x, n);
      if (x == n - 1)
        composite = false;
    }
    if (composite)
      return false;
  }
  return true;
}

// Brent's variant of Pollard rho; n must be an odd composite.
inline std::uint64_t pollard_brent(std::uint64_t n)
{
  for (std::uint64_t c = 1;; ++c) {
    auto f = [&](std::uint64_t x) { return (mul_mod(x, x, n) + c) % n; };
    std::uint64_t y = 2, x = 2, g = 1, q = 1, ys = 2;
    std::uint64_t r = 1;
    constexpr std::uint64_t batch = 128;
    while (g == 1) {
      x = y;
      for (std::uint64_t i = 0; i < r; ++i)
        y = f(y);
      std::uint64_t k = 0;
      while (k < r && g == 1) {
        ys = y;
        for (std::uint64_t i = 0; i < std::min(batch, r - k); ++i) {
          y = f(y);
          q = mul_mod(q, x > y ? x - y : y - x, n);
        }
        g = std::gcd(q, n);
        k += batch;
      }
      r *= 2;
    }
    if (g == n) {
      do {
        ys = f(ys);
        g = std::gcd(x > ys ? x - ys : ys - x, n);
      } while (g == 1);
    }
    if (g != n)
      return g;
  }
}

inline void factor_into(std::uint64_t m, std::vector<FactoredNat::Term>& out)
{
  if (m == 1)
    return;
  if (is_prime_u64(m)) {
    out.emplace_back(m, 1);
    return;
  }
  const std::uint64_t d = pollard_brent(m);
  factor_into(d, out);
  factor_into(m / d, out);
}

} // namespace detail

/// Exact factorization of a machine integer: trial division by primes below
/// 2^10, then Pollard-Brent on the cofactor.
inline FactoredNat factor(std::uint64_t m)
{
  if (m == 0)
    throw domain_error("factor: 0 has no factorization");
  std::vector<FactoredNat::Term> terms;
  for (std::uint64_t p = 2; p < 1024 && p * p <= m; p += (p == 2 ? 1 : 2)) {
    std::uint32_t e = 0;
    while (m % p == 0) {
      m /= p;
      ++e;
    }
    if (e > 0)
      terms.emplace_back(p, e);
  }
  if (m > 1)
    detail::factor_into(m, terms);
  return FactoredNat::from_terms(std::move(terms));
}

/// n! by Legendre's formula.
inline FactoredNat factorial_factored(std::uint64_t n)
{
  if (n < 2)
    return {};
  auto table = shared_primes(n);
  std::vector<FactoredNat::Term> terms;
  for (std::uint64_t p : table->primes) {
    if (p > n)
      break;
    std::uint32_t e = 0;
    for (std::uint64_t q = n / p; q > 0; q /= p)
      e += static_cast<std::uint32_t>(q);
    terms.emplace_back(p, e);
  }
  return FactoredNat::from_terms(std::move(terms));
}

inline FactoredNat multiply(FactoredNat a, const FactoredNat& b)
{
  a *= b;
  return a;
}

/// a / b; throws precondition_error naming the first prime where b's
/// exponent exceeds a's.
inline FactoredNat divide_exact(const FactoredNat& a, const FactoredNat& b)
{
  std::vector<FactoredNat::Term> out;
  out.reserve(a.terms().size());
  auto ia = a.terms().begin();
  for (const auto& [p, e] : b.terms()) {
    while (ia != a.terms().end() && ia->first < p)
      out.push_back(*ia++);
    const std::uint32_t have = (ia != a.terms().end() && ia->first == p) ? ia->second : 0;
    if (have < e)
      throw precondition_error("divide_exact: prime " + std::to_string(p) + " has exponent " +
                               std::to_string(e) + " in the divisor but " +
                               std::to_string(have) + " in the dividend");
    if (have > e)
      out.emplace_back(p, have - e);
    if (have > 0)
      ++ia;
  }
  out.insert(out.end(), ia, a.terms().end());
  return FactoredNat::from_terms(std::move(out));
}

/// a | b
inline bool divides(const FactoredNat& a, const FactoredNat& b) noexcept
{
  auto ib = b.terms().begin();
  for (const auto& [p, e] : a.terms()) {
    while (ib != b.terms().end() && ib->first < p)
      ++ib;
    if (ib == b.terms().end() || ib->first != p || ib->second < e)
      return false;
  }
  return true;
}

inline FactoredNat gcd(const FactoredNat& a, const FactoredNat& b)
{
  std::vector<FactoredNat::Term> out;
  auto ib = b.terms().begin();
  for (const auto& [p, e] : a.terms()) {
    while (ib != b.terms().end() && ib->first < p)
      ++ib;
    if (ib != b.terms().end() && ib->first == p)
      out.emplace_back(p, std::min(e, ib->second));
  }
  return FactoredNat::from_terms(std::move(out));
}

/// Exact decimal expansion, accumulated in base-10^9 blocks.
inline std::string to_decimal(const FactoredNat& a)
{
  constexpr std::uint64_t base = 1'000'000'000;
  std::vector<std::uint32_t> blocks{1}; // little-endian

  auto scale = [&](std::uint64_t k) {
    unsigned __int128 carry = 0;
    for (auto& block : blocks) {
      const unsigned __int128 cur = static_cast<unsigned __int128>(block) * k + carry;
      block = static_cast<std::uint32_t>(cur % base);
      carry = cur / base;
    }
    while (carry > 0) {
      blocks.push_back(static_cast<std::uint32_t>(carry % base));
      carry /= base;
    }
  };

  // Batch factors so each pass multiplies by up to ~2^63.
  std::uint64_t pending = 1;
  for (const auto& [p, e] : a.terms()) {
    for (std::uint32_t i = 0; i < e; ++i) {
      if (pending > (std::uint64_t{1} << 63) / p) {
        scale(pending);
        pending = 1;
      }
      if (p > (std::uint64_t{1} << 63))
        scale(p);
      else
        pending *= p;
    }
  }
  scale(pending);

  std::string out = std::to_string(blocks.back());
  for (auto it = std::next(blocks.rbegin()); it != blocks.rend(); ++it) {
    std::string chunk = std::to_string(*it);
    out.append(9 - chunk.size(), '0');
    out += chunk;
  }
  return out;
}

/// Deterministic total order used for every sorted report: by estimated bit
/// size, then lexicographically by the (prime, exponent) list.
inline bool value_less(const FactoredNat& a, const FactoredNat& b)
{
  const double la = a.log2_estimate();
  const double lb = b.log2_estimate();
  if (la != lb)
    return la < lb;
  return a.terms() < b.terms();
}

struct ValueLess {
  bool operator()(const FactoredNat& a, const FactoredNat& b) const { return value_less(a, b); }
};

inline void sort_values(std::vector<FactoredNat>& values)
{
  std::sort(values.begin(), values.end(), ValueLess{});
  values.erase(std::unique(values.begin(), values.end()), values.end());
}

/// {"p1": e1, "p2": e2, ...} with ascending numeric keys.
inline nlohmann::ordered_json to_json(const FactoredNat& a)
{
  nlohmann::ordered_json j = nlohmann::ordered_json::object();
  for (const auto& [p, e] : a.terms())
    j[std::to_string(p)] = e;
  return j;
}

inline FactoredNat factored_from_json(const nlohmann::ordered_json& j)
{
  if (!j.is_object())
    throw domain_error("factored_from_json: expected an object");
  std::vector<FactoredNat::Term> terms;
  for (const auto& [key, value] : j.items()) {
    std::size_t used = 0;
    std::uint64_t p = 0;
    try {
      p = std::stoull(key, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != key.size() || !detail::is_prime_u64(p))
      throw domain_error("factored_from_json: key '" + key + "' is not a prime");
    if (!value.is_number_unsigned() || value.get<std::uint64_t>() == 0)
      throw domain_error("factored_from_json: exponent of " + key + " must be a positive integer");
    terms.emplace_back(p, value.get<std::uint32_t>());
  }
  return FactoredNat::from_terms(std::move(terms));
}

} // namespace tgv

template <>
struct std::hash<tgv::FactoredNat> {
  std::size_t operator()(const tgv::FactoredNat& a) const noexcept
  {
    std::uint64_t h = 0x9e3779b97f4a7c15ull;
    for (const auto& [p, e] : a.terms()) {
      h ^= p + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
      h ^= e + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return static_cast<std::size_t>(h);
  }
};
