#pragma once

#include <cctype>
#include <cstdint>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "tgv/error.hpp"
#include "tgv/factored.hpp"
#include "tgv/partitions.hpp"

namespace tgv {

/// Largest degree for which class_size_set accepts a request. Enumeration is
/// further bounded by partition_guard.
inline constexpr std::uint32_t class_spectrum_guard = 1500;

enum class GroupKind { sym, alt };

inline std::string_view to_string(GroupKind kind) noexcept
{
  return kind == GroupKind::sym ? "Sym" : "Alt";
}

/// Accepts "sym"/"alt" in any letter case.
inline GroupKind parse_group_kind(std::string_view text)
{
  std::string lower(text);
  for (auto& c : lower)
    c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  if (lower == "sym")
    return GroupKind::sym;
  if (lower == "alt")
    return GroupKind::alt;
  throw domain_error("unknown group kind '" + std::string(text) + "' (expected sym or alt)");
}

namespace detail {

// Smallest-prime-factor table; enough for every part size and multiplicity
// the library can meet (degrees stay below class_spectrum_guard).
inline const std::vector<std::uint32_t>& spf_table()
{
  static const std::vector<std::uint32_t> table = [] {
    constexpr std::uint32_t limit = 1u << 16;
    std::vector<std::uint32_t> spf(limit + 1, 0);
    for (std::uint32_t i = 2; i <= limit; ++i) {
      if (spf[i] != 0)
        continue;
      for (std::uint32_t j = i; j <= limit; j += i)
        if (spf[j] == 0)
          spf[j] = i;
    }
    return spf;
  }();
  return table;
}

/// Dense exponent vector indexed by prime, for building products of many
/// small factors without intermediate merges.
class ExponentAccumulator {
public:
  void add_integer(std::uint32_t k, std::uint32_t times = 1)
  {
    const auto& spf = spf_table();
    if (k >= spf.size()) {
      for (const auto& [p, e] : factor(k).terms())
        add_prime(static_cast<std::uint32_t>(p), e * times);
      return;
    }
    while (k > 1) {
      const std::uint32_t p = spf[k];
      std::uint32_t e = 0;
      while (k % p == 0) {
        k /= p;
        ++e;
      }
      add_prime(p, e * times);
    }
  }

  void add_factorial(std::uint32_t k)
  {
    for (std::uint32_t i = 2; i <= k; ++i)
      add_integer(i);
  }

  void add_prime(std::uint32_t p, std::uint32_t e)
  {
    if (p >= exps_.size())
      exps_.resize(p + 1, 0);
    exps_[p] += e;
  }

  FactoredNat finish() const
  {
    std::vector<FactoredNat::Term> terms;
    for (std::uint32_t p = 2; p < exps_.size(); ++p)
      if (exps_[p] != 0)
        terms.emplace_back(p, exps_[p]);
    return FactoredNat::from_terms(std::move(terms));
  }

private:
  std::vector<std::uint32_t> exps_;
};

inline void require_partition_of(std::uint32_t n, const CycleType& t, const char* where)
{
  if (t.size() != n)
    throw domain_error(std::string(where) + ": " + t.to_string() + " is not a partition of " +
                       std::to_string(n));
}

} // namespace detail

/// |V_n|: n! for Sym, n!/2 for Alt (1 when n < 2).
inline FactoredNat group_order(GroupKind kind, std::uint32_t n)
{
  FactoredNat order = factorial_factored(n);
  if (kind == GroupKind::alt && n >= 2)
    order = divide_exact(order, factor(2));
  return order;
}

/// Order of the centralizer in Sym_n: prod over part sizes i of i^{m_i} * m_i!.
inline FactoredNat centralizer_order_sym(const CycleType& t)
{
  detail::ExponentAccumulator acc;
  for (const auto& [part, mult] : t.multiplicities()) {
    acc.add_integer(part, mult);
    acc.add_factorial(mult);
  }
  return acc.finish();
}

/// Order of the centralizer in V_n. For Alt the type must be even; the
/// centralizer is the full Sym one when the class splits or n < 2, half of it
/// otherwise.
inline FactoredNat centralizer_order(GroupKind kind, const CycleType& t)
{
  FactoredNat z = centralizer_order_sym(t);
  if (kind == GroupKind::sym)
    return z;
  if (!is_even_type(t))
    throw domain_error("centralizer_order: " + t.to_string() + " is odd, not a class of Alt_" +
                       std::to_string(t.size()));
  if (t.size() < 2 || splits_in_alt(t))
    return z;
  return divide_exact(z, factor(2));
}

/// |g^{V_n}| for g of cycle type t. Uses a precomputed |V_n| when given.
inline FactoredNat class_size(GroupKind kind, std::uint32_t n, const CycleType& t,
                              const FactoredNat* order = nullptr)
{
  detail::require_partition_of(n, t, "class_size");
  if (kind == GroupKind::alt && !is_even_type(t))
    throw domain_error("class_size: " + t.to_string() + " is odd, not a class of Alt_" +
                       std::to_string(n));
  if (order)
    return divide_exact(*order, centralizer_order(kind, t));
  return divide_exact(group_order(kind, n), centralizer_order(kind, t));
}

struct ClassRecord {
  CycleType type;
  GroupKind kind = GroupKind::sym;
  FactoredNat sym_centralizer;
  bool splits = false; // Alt only
  FactoredNat class_size;
  std::uint32_t fixed_points = 0;
};

inline ClassRecord class_record(GroupKind kind, std::uint32_t n, const CycleType& t)
{
  ClassRecord rec;
  rec.type = t;
  rec.kind = kind;
  rec.sym_centralizer = centralizer_order_sym(t);
  rec.class_size = class_size(kind, n, t);
  rec.splits = kind == GroupKind::alt && splits_in_alt(t);
  rec.fixed_points = t.fixed_points();
  return rec;
}

/// One record per cycle type of V_n (even types only for Alt).
inline std::vector<ClassRecord> class_records(GroupKind kind, std::uint32_t n)
{
  std::vector<ClassRecord> out;
  PartitionFilter filter;
  if (kind == GroupKind::alt)
    filter.parity = Parity::even;
  for_each_partition(n, filter, [&](const CycleType& t) { out.push_back(class_record(kind, n, t)); });
  return out;
}

/// N(V_n): the set of class sizes, as a hash set for membership and a sorted
/// list (ValueLess order) for reporting.
struct ClassSpectrum {
  GroupKind kind = GroupKind::sym;
  std::uint32_t n = 0;
  std::vector<FactoredNat> sorted;
  std::unordered_set<FactoredNat> members;

  bool contains(const FactoredNat& a) const { return members.count(a) != 0; }
  std::size_t size() const noexcept { return sorted.size(); }

  static ClassSpectrum from_values(GroupKind kind, std::uint32_t n, std::vector<FactoredNat> values)
  {
    ClassSpectrum out;
    out.kind = kind;
    out.n = n;
    sort_values(values);
    out.sorted = std::move(values);
    out.members.insert(out.sorted.begin(), out.sorted.end());
    return out;
  }
};

/// Invokes visit(type, size) for every class type of V_n.
template <class Visit>
void for_each_class_size(GroupKind kind, std::uint32_t n, Visit&& visit)
{
  const FactoredNat order = group_order(kind, n);
  PartitionFilter filter;
  if (kind == GroupKind::alt)
    filter.parity = Parity::even;
  for_each_partition(n, filter, [&](const CycleType& t) { visit(t, class_size(kind, n, t, &order)); });
}

inline ClassSpectrum class_size_set(GroupKind kind, std::uint32_t n)
{
  if (n < 1)
    throw domain_error("class_size_set: n must be >= 1");
  if (n > class_spectrum_guard)
    throw resource_error("class_size_set: n = " + std::to_string(n) + " exceeds guard " +
                         std::to_string(class_spectrum_guard));
  std::unordered_set<FactoredNat> seen;
  for_each_class_size(kind, n, [&](const CycleType&, FactoredNat size) { seen.insert(std::move(size)); });
  return ClassSpectrum::from_values(kind, n, {seen.begin(), seen.end()});
}

} // namespace tgv
