#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "tgv/error.hpp"
#include "tgv/factored.hpp"
#include "tgv/partitions.hpp"
#include "tgv/primes.hpp"
#include "tgv/symclasses.hpp"

namespace tgv {

/// How Psi values are computed for Alt.
///  exact   - true class sizes in V_n of the described elements.
///  literal - |V_n| / (|V_{t+i}| |C_{V_m}(g)|) taken at face value; for Alt
///            this is twice the class size whenever g does not split in Alt_m.
enum class PsiMode { exact, literal };

inline std::string_view to_string(PsiMode mode) noexcept
{
  return mode == PsiMode::exact ? "exact" : "literal";
}

inline PsiMode parse_psi_mode(std::string_view text)
{
  if (text == "exact")
    return PsiMode::exact;
  if (text == "literal")
    return PsiMode::literal;
  throw domain_error("unknown psi mode '" + std::string(text) + "' (expected exact or literal)");
}

enum class SetFamily { phi, psi };

/// What generated a value. For Phi: `type` is g in V_{n-t}. For Psi:
/// `offset` is i (the element fixes t + i points) and `type` is the
/// fixed-point-free g in V_{n-t-i}.
struct SetWitness {
  std::uint32_t offset = 0;
  CycleType type;
};

struct PhiPsiSet {
  SetFamily family = SetFamily::phi;
  GroupKind kind = GroupKind::sym;
  std::uint32_t n = 0;
  std::uint32_t t = 0;
  PsiMode mode = PsiMode::exact;
  std::vector<FactoredNat> values; // ValueLess order
  std::vector<SetWitness> witnesses; // aligned with values

  bool contains(const FactoredNat& a) const { return index_.count(a) != 0; }
  bool empty() const noexcept { return values.empty(); }
  std::size_t size() const noexcept { return values.size(); }

  const SetWitness& witness_of(const FactoredNat& a) const { return witnesses.at(index_.at(a)); }

  /// Sorts the collected (value, witness) pairs and builds the index. The
  /// first witness collected for a value is kept.
  void finalize(std::vector<std::pair<FactoredNat, SetWitness>> collected)
  {
    std::unordered_map<FactoredNat, std::size_t> first;
    std::vector<std::pair<FactoredNat, SetWitness>> unique;
    for (auto& entry : collected) {
      if (first.emplace(entry.first, unique.size()).second)
        unique.push_back(std::move(entry));
    }
    std::stable_sort(unique.begin(), unique.end(),
                     [](const auto& a, const auto& b) { return value_less(a.first, b.first); });
    values.clear();
    witnesses.clear();
    index_.clear();
    for (auto& [value, witness] : unique) {
      index_.emplace(value, values.size());
      values.push_back(std::move(value));
      witnesses.push_back(std::move(witness));
    }
  }

private:
  std::unordered_map<FactoredNat, std::size_t> index_;
};

/// |V_n| / (t |C_{V_{n-t}}(g)|) for g a class type of V_{n-t}.
inline FactoredNat phi_formula_value(GroupKind kind, std::uint32_t n, std::uint32_t t, const CycleType& g)
{
  if (t > n)
    throw domain_error("phi_formula_value: t exceeds n");
  detail::require_partition_of(n - t, g, "phi_formula_value");
  return divide_exact(group_order(kind, n), multiply(factor(t), centralizer_order(kind, g)));
}

/// Class size in V_n of an element fixing `fixed` points whose moved part has
/// fixed-point-free type g.
inline FactoredNat psi_exact_value(GroupKind kind, std::uint32_t n, std::uint32_t fixed, const CycleType& g)
{
  return class_size(kind, n, with_fixed_points(g, fixed));
}

/// |V_n| / (|V_fixed| |C_{V_m}(g)|), m = n - fixed.
inline FactoredNat psi_literal_value(GroupKind kind, std::uint32_t n, std::uint32_t fixed, const CycleType& g)
{
  if (fixed > n)
    throw domain_error("psi_literal_value: more fixed points than n");
  detail::require_partition_of(n - fixed, g, "psi_literal_value");
  return divide_exact(group_order(kind, n), multiply(group_order(kind, fixed), centralizer_order(kind, g)));
}

/// Recomputes a member of `set` from its witness through the defining formula.
inline FactoredNat recompute_from_witness(const PhiPsiSet& set, const SetWitness& w)
{
  if (set.family == SetFamily::phi)
    return phi_formula_value(set.kind, set.n, set.t, w.type);
  const std::uint32_t fixed = set.t + w.offset;
  return set.mode == PsiMode::exact ? psi_exact_value(set.kind, set.n, fixed, w.type)
                                    : psi_literal_value(set.kind, set.n, fixed, w.type);
}

inline PhiPsiSet phi_set(GroupKind kind, std::uint32_t n, std::uint32_t t)
{
  if (t < 2 || t > n)
    throw domain_error("phi_set: need 2 <= t <= n, got t=" + std::to_string(t) + " n=" + std::to_string(n));
  if (kind == GroupKind::alt && t % 2 == 0)
    throw domain_error("phi_set: a " + std::to_string(t) + "-cycle is odd, so Phi_t is undefined for Alt");

  const FactoredNat order = group_order(kind, n);
  const FactoredNat t_factored = factor(t);
  PartitionFilter filter;
  if (kind == GroupKind::alt)
    filter.parity = Parity::even;

  std::vector<std::pair<FactoredNat, SetWitness>> collected;
  for_each_partition(n - t, filter, [&](const CycleType& g) {
    FactoredNat value = divide_exact(order, multiply(t_factored, centralizer_order(kind, g)));
    collected.emplace_back(std::move(value), SetWitness{0, g});
  });

  PhiPsiSet set;
  set.family = SetFamily::phi;
  set.kind = kind;
  set.n = n;
  set.t = t;
  set.finalize(std::move(collected));
  return set;
}

namespace detail {

// Centralizer in V_n of (g with `fixed` extra fixed points) given z(g) and
// fixed!; avoids rebuilding the long all-ones tail of the cycle type.
inline FactoredNat fixed_point_centralizer(GroupKind kind, const CycleType& g, std::uint32_t fixed,
                                           const FactoredNat& z_g, const FactoredNat& fixed_factorial)
{
  FactoredNat z = multiply(z_g, fixed_factorial);
  if (kind == GroupKind::sym)
    return z;
  const bool splits = fixed <= 1 && splits_in_alt(g);
  return splits ? z : divide_exact(z, factor(2));
}

} // namespace detail

/// Psi_t: values over every fixed-point count f = t + i with t <= f <= n - 2,
/// the moved part a fixed-point-free type of m = n - f (even for Alt). Empty
/// when t < 2 or t > n - 2.
inline PhiPsiSet psi_set(GroupKind kind, std::uint32_t n, std::uint32_t t, PsiMode mode = PsiMode::exact)
{
  PhiPsiSet set;
  set.family = SetFamily::psi;
  set.kind = kind;
  set.n = n;
  set.t = t;
  set.mode = mode;
  if (t < 2 || n < 2 || t > n - 2) {
    set.finalize({});
    return set;
  }

  const FactoredNat order = group_order(kind, n);
  PartitionFilter filter;
  filter.forbid_part_one = true;
  if (kind == GroupKind::alt)
    filter.parity = Parity::even;

  std::vector<std::pair<FactoredNat, SetWitness>> collected;
  for (std::uint32_t fixed = t; fixed + 2 <= n; ++fixed) {
    const std::uint32_t moved = n - fixed;
    const FactoredNat fixed_factorial = factorial_factored(fixed);
    const FactoredNat fixed_group = group_order(kind, fixed);
    for_each_partition(moved, filter, [&](const CycleType& g) {
      const FactoredNat z_g = centralizer_order_sym(g);
      FactoredNat value;
      if (mode == PsiMode::exact) {
        value = divide_exact(order, detail::fixed_point_centralizer(kind, g, fixed, z_g, fixed_factorial));
      } else {
        FactoredNat c_g = z_g;
        if (kind == GroupKind::alt && !splits_in_alt(g))
          c_g = divide_exact(c_g, factor(2));
        value = divide_exact(order, multiply(fixed_group, c_g));
      }
      collected.emplace_back(std::move(value), SetWitness{fixed - t, g});
    });
  }
  set.finalize(std::move(collected));
  return set;
}

struct ConClassReport {
  GroupKind kind = GroupKind::sym;
  std::uint32_t n = 0;
  std::uint32_t t = 0;
  bool holds = true;
  std::vector<FactoredNat> violations; // ValueLess order
  std::size_t types_checked = 0;
  std::size_t coprime_types = 0; // types whose class size is prime to t
  std::size_t covered_by_phi = 0;
  std::size_t covered_by_psi = 0;
  std::size_t identity = 0;
};

/// Every class size of V_n prime to t must lie in Phi_t, Psi_t (exact) or
/// {1}. The identity (n fixed points) sits outside Psi's window; no element
/// fixes exactly n - 1 points.
inline ConClassReport conclass_cover_check(GroupKind kind, std::uint32_t n, std::uint32_t t)
{
  const auto omega = omega_set(n);
  if (std::find(omega.begin(), omega.end(), t) == omega.end())
    throw domain_error("conclass_cover_check: t=" + std::to_string(t) + " is not a prime in (n/2, n] for n=" +
                       std::to_string(n));

  const PhiPsiSet phi = phi_set(kind, n, t);
  const PhiPsiSet psi = psi_set(kind, n, t, PsiMode::exact);

  ConClassReport report;
  report.kind = kind;
  report.n = n;
  report.t = t;
  std::unordered_set<FactoredNat> bad;
  for_each_class_size(kind, n, [&](const CycleType&, const FactoredNat& alpha) {
    ++report.types_checked;
    if (alpha.exponent(t) != 0)
      return;
    ++report.coprime_types;
    if (alpha.is_one())
      ++report.identity;
    else if (phi.contains(alpha))
      ++report.covered_by_phi;
    else if (psi.contains(alpha))
      ++report.covered_by_psi;
    else
      bad.insert(alpha);
  });
  report.violations.assign(bad.begin(), bad.end());
  sort_values(report.violations);
  report.holds = report.violations.empty();
  return report;
}

struct DescentPair {
  std::uint32_t lower = 0; // t_i
  std::uint32_t upper = 0; // t_{i+1}
  bool difference_empty = false;
  bool predicted_empty = false; // n - t_i == 2 and V = Alt
  bool consistent = false;
  std::optional<FactoredNat> witness_value;
  std::optional<SetWitness> witness; // offset relative to `lower`
};

struct PsiDescentReport {
  GroupKind kind = GroupKind::sym;
  std::uint32_t n = 0;
  std::vector<DescentPair> pairs;
  bool all_consistent = true;
};

/// For consecutive t_i < t_{i+1} in Omega, decides whether
/// Psi_{t_i} \ Psi_{t_{i+1}} is empty and compares with the rule
/// "empty iff n - t_i = 2 and V = Alt".
///
/// Values contributed by f >= t_{i+1} lie in both sets, so the difference can
/// only come from f in [t_i, t_{i+1}). A candidate divisible by t_{i+1} is
/// certainly outside Psi_{t_{i+1}}: every element there fixes at least
/// t_{i+1} >= 3 points, so its centralizer contains Alt_{t_{i+1}} and its
/// class size carries no factor t_{i+1} (which divides |V_n| once). Other
/// candidates are looked up in the materialized Psi_{t_{i+1}}. The search
/// stops at the first member of the difference.
inline PsiDescentReport psi_strict_descent(GroupKind kind, std::uint32_t n)
{
  const auto omega = omega_set(n);
  if (omega.size() < 2)
    throw domain_error("psi_strict_descent: |Omega| < 2 for n=" + std::to_string(n));

  const FactoredNat order = group_order(kind, n);
  PartitionFilter filter;
  filter.forbid_part_one = true;
  if (kind == GroupKind::alt)
    filter.parity = Parity::even;

  PsiDescentReport report;
  report.kind = kind;
  report.n = n;
  for (std::size_t k = 0; k + 1 < omega.size(); ++k) {
    DescentPair pair;
    pair.lower = static_cast<std::uint32_t>(omega[k]);
    pair.upper = static_cast<std::uint32_t>(omega[k + 1]);
    pair.predicted_empty = (n - pair.lower == 2) && kind == GroupKind::alt;

    std::optional<PhiPsiSet> upper_set;
    for (std::uint32_t fixed = pair.lower; fixed < pair.upper && fixed + 2 <= n && !pair.witness; ++fixed) {
      const FactoredNat fixed_factorial = factorial_factored(fixed);
      for_each_partition(n - fixed, filter, [&](const CycleType& g) {
        FactoredNat value = divide_exact(
            order, detail::fixed_point_centralizer(kind, g, fixed, centralizer_order_sym(g), fixed_factorial));
        bool outside = value.exponent(pair.upper) > 0;
        if (!outside) {
          if (!upper_set)
            upper_set = psi_set(kind, n, pair.upper, PsiMode::exact);
          outside = !upper_set->contains(value);
        }
        if (!outside)
          return true;
        pair.witness_value = std::move(value);
        pair.witness = SetWitness{fixed - pair.lower, g};
        return false;
      });
    }
    pair.difference_empty = !pair.witness.has_value();
    pair.consistent = pair.difference_empty == pair.predicted_empty;
    report.all_consistent = report.all_consistent && pair.consistent;
    report.pairs.push_back(std::move(pair));
  }
  return report;
}

} // namespace tgv
