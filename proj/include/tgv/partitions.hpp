#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <functional>
#include <numeric>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "tgv/error.hpp"

namespace tgv {

/// Largest m that partitions_of will enumerate.
inline constexpr std::uint32_t partition_guard = 200;

/// A partition of n read as the cycle type of a permutation of n points.
/// Parts are kept non-increasing; fixed points are parts equal to 1.
class CycleType {
public:
  CycleType() = default;

  /// Parts may be given in any order; zero parts are rejected.
  explicit CycleType(std::vector<std::uint32_t> parts) : parts_(std::move(parts))
  {
    if (std::find(parts_.begin(), parts_.end(), 0u) != parts_.end())
      throw domain_error("CycleType: parts must be positive");
    std::sort(parts_.begin(), parts_.end(), std::greater<>{});
    n_ = std::accumulate(parts_.begin(), parts_.end(), std::uint32_t{0});
  }

  const std::vector<std::uint32_t>& parts() const noexcept { return parts_; }
  std::uint32_t size() const noexcept { return n_; }
  std::size_t part_count() const noexcept { return parts_.size(); }

  std::uint32_t fixed_points() const noexcept
  {
    return static_cast<std::uint32_t>(std::count(parts_.begin(), parts_.end(), 1u));
  }

  /// (part size, multiplicity) pairs, largest part first.
  std::vector<std::pair<std::uint32_t, std::uint32_t>> multiplicities() const
  {
    std::vector<std::pair<std::uint32_t, std::uint32_t>> out;
    for (std::uint32_t part : parts_) {
      if (!out.empty() && out.back().first == part)
        ++out.back().second;
      else
        out.emplace_back(part, 1);
    }
    return out;
  }

  std::string to_string() const
  {
    std::string s = "(";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (i)
        s += ',';
      s += std::to_string(parts_[i]);
    }
    return s + ")";
  }

  friend bool operator==(const CycleType&, const CycleType&) = default;
  friend auto operator<=>(const CycleType& a, const CycleType& b) { return a.parts_ <=> b.parts_; }

private:
  template <class Visit>
  friend bool for_each_partition_impl(std::uint32_t, std::uint32_t, std::uint32_t, CycleType&, Visit&);

  std::vector<std::uint32_t> parts_;
  std::uint32_t n_ = 0;
};

enum class Parity { any, even, odd };

struct PartitionFilter {
  bool forbid_part_one = false;
  Parity parity = Parity::any;
};

/// Parity of the permutation: that of sum(part - 1) = n - #parts.
inline bool is_even_type(const CycleType& t) noexcept
{
  return (t.size() - t.part_count()) % 2 == 0;
}

/// Whether the Sym_n class of an even type breaks into two Alt_n classes:
/// exactly when all parts are odd and pairwise distinct, for n >= 2.
inline bool splits_in_alt(const CycleType& t)
{
  if (!is_even_type(t))
    throw precondition_error("splits_in_alt: " + t.to_string() + " is an odd permutation type");
  if (t.size() < 2)
    return false;
  const auto& parts = t.parts();
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] % 2 == 0 || (i > 0 && parts[i] == parts[i - 1]))
      return false;
  }
  return true;
}

/// `moved` extended by `fixed` parts of size 1.
inline CycleType with_fixed_points(const CycleType& moved, std::uint32_t fixed)
{
  std::vector<std::uint32_t> parts = moved.parts();
  parts.insert(parts.end(), fixed, 1u);
  return CycleType(std::move(parts));
}

/// The disjoint union of two cycle types.
inline CycleType join(const CycleType& a, const CycleType& b)
{
  std::vector<std::uint32_t> parts = a.parts();
  parts.insert(parts.end(), b.parts().begin(), b.parts().end());
  return CycleType(std::move(parts));
}

// Recursive generator in lexicographically decreasing order. Returns false
// once the visitor has asked to stop.
template <class Visit>
bool for_each_partition_impl(std::uint32_t remaining, std::uint32_t max_part, std::uint32_t min_part,
                             CycleType& current, Visit& visit)
{
  if (remaining == 0) {
    if constexpr (std::is_same_v<std::invoke_result_t<Visit&, const CycleType&>, bool>)
      return visit(std::as_const(current));
    else {
      visit(std::as_const(current));
      return true;
    }
  }
  for (std::uint32_t part = std::min(remaining, max_part); part >= min_part; --part) {
    const std::uint32_t rest = remaining - part;
    if (rest > 0 && rest < min_part)
      continue;
    current.parts_.push_back(part);
    current.n_ += part;
    const bool go_on = for_each_partition_impl(rest, part, min_part, current, visit);
    current.parts_.pop_back();
    current.n_ -= part;
    if (!go_on)
      return false;
  }
  return true;
}

/// Streams every partition of m that passes `filter` to `visit`, in
/// lexicographically decreasing order. A visitor returning bool stops the
/// stream by returning false.
template <class Visit>
void for_each_partition(std::uint32_t m, PartitionFilter filter, Visit&& visit)
{
  if (m > partition_guard)
    throw resource_error("partitions_of: m = " + std::to_string(m) + " exceeds guard " +
                         std::to_string(partition_guard));
  auto filtered = [&](const CycleType& t) -> bool {
    if (filter.parity != Parity::any && is_even_type(t) != (filter.parity == Parity::even))
      return true;
    if constexpr (std::is_same_v<std::invoke_result_t<Visit&, const CycleType&>, bool>)
      return visit(t);
    else {
      visit(t);
      return true;
    }
  };
  CycleType current;
  const std::uint32_t min_part = filter.forbid_part_one ? 2 : 1;
  for_each_partition_impl(m, m, min_part, current, filtered);
}

inline std::vector<CycleType> partitions_of(std::uint32_t m, PartitionFilter filter = {})
{
  std::vector<CycleType> out;
  for_each_partition(m, filter, [&](const CycleType& t) { out.push_back(t); });
  return out;
}

} // namespace tgv
