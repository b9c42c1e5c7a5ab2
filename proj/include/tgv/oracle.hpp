#pragma once

// Brute-force ground truth for small degrees: every permutation is built
// explicitly, classes are orbits under conjugation and centralizers are
// counted element by element. Nothing here uses the cycle-type formulas.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "tgv/error.hpp"
#include "tgv/factored.hpp"
#include "tgv/partitions.hpp"
#include "tgv/symclasses.hpp"

namespace tgv::oracle {

inline constexpr std::uint32_t max_degree = 8;

class Perm {
public:
  explicit Perm(std::vector<std::uint8_t> images) : images_(std::move(images))
  {
    std::vector<bool> hit(images_.size(), false);
    for (auto x : images_) {
      if (x >= images_.size() || hit[x])
        throw domain_error("Perm: images do not form a bijection");
      hit[x] = true;
    }
  }

  static Perm identity(std::size_t n)
  {
    std::vector<std::uint8_t> img(n);
    std::iota(img.begin(), img.end(), std::uint8_t{0});
    return Perm(std::move(img));
  }

  std::size_t degree() const noexcept { return images_.size(); }
  std::uint8_t operator()(std::size_t i) const { return images_[i]; }
  const std::vector<std::uint8_t>& images() const noexcept { return images_; }

  /// (a * b)(i) = a(b(i))
  friend Perm operator*(const Perm& a, const Perm& b)
  {
    std::vector<std::uint8_t> img(b.degree());
    for (std::size_t i = 0; i < img.size(); ++i)
      img[i] = a.images_[b.images_[i]];
    return Perm(std::move(img), unchecked{});
  }

  Perm inverse() const
  {
    std::vector<std::uint8_t> img(degree());
    for (std::size_t i = 0; i < img.size(); ++i)
      img[images_[i]] = static_cast<std::uint8_t>(i);
    return Perm(std::move(img), unchecked{});
  }

  bool is_even() const
  {
    std::size_t inversions = 0;
    for (std::size_t i = 0; i < images_.size(); ++i)
      for (std::size_t j = i + 1; j < images_.size(); ++j)
        inversions += images_[i] > images_[j];
    return inversions % 2 == 0;
  }

  CycleType cycle_type() const
  {
    std::vector<bool> seen(degree(), false);
    std::vector<std::uint32_t> parts;
    for (std::size_t i = 0; i < degree(); ++i) {
      if (seen[i])
        continue;
      std::uint32_t len = 0;
      for (std::size_t j = i; !seen[j]; j = images_[j]) {
        seen[j] = true;
        ++len;
      }
      parts.push_back(len);
    }
    return CycleType(std::move(parts));
  }

  friend bool operator==(const Perm&, const Perm&) = default;

private:
  struct unchecked {};
  Perm(std::vector<std::uint8_t> images, unchecked) : images_(std::move(images)) {}

  std::vector<std::uint8_t> images_;
};

/// All elements of V_n in lexicographic order of their image lists.
inline std::vector<Perm> enumerate_group(GroupKind kind, std::uint32_t n)
{
  if (n > max_degree)
    throw resource_error("oracle: degree " + std::to_string(n) + " exceeds " + std::to_string(max_degree));
  std::vector<std::uint8_t> img(n);
  std::iota(img.begin(), img.end(), std::uint8_t{0});
  std::vector<Perm> out;
  do {
    Perm g(img);
    if (kind == GroupKind::sym || g.is_even())
      out.push_back(std::move(g));
  } while (std::next_permutation(img.begin(), img.end()));
  return out;
}

struct BruteClass {
  Perm representative;
  std::uint64_t size = 0;
  std::uint64_t centralizer_order = 0;
  CycleType type;
};

namespace detail {

inline std::uint64_t rank(const Perm& g)
{
  // Lehmer code; unique index in [0, n!)
  const std::size_t n = g.degree();
  std::uint64_t r = 0;
  for (std::size_t i = 0; i < n; ++i) {
    std::uint64_t smaller = 0;
    for (std::size_t j = i + 1; j < n; ++j)
      smaller += g(j) < g(i);
    r = r * (n - i) + smaller;
  }
  return r;
}

} // namespace detail

/// Conjugacy classes of V_n by exhaustion, in order of first appearance.
inline std::vector<BruteClass> brute_classes(GroupKind kind, std::uint32_t n)
{
  const std::vector<Perm> group = enumerate_group(kind, n);
  std::uint64_t factorial = 1;
  for (std::uint32_t i = 2; i <= n; ++i)
    factorial *= i;
  std::vector<bool> assigned(factorial, false);

  std::vector<BruteClass> classes;
  for (const Perm& g : group) {
    if (assigned[detail::rank(g)])
      continue;
    BruteClass cls{g, 0, 0, g.cycle_type()};
    for (const Perm& x : group) {
      const Perm conj = x * g * x.inverse();
      const std::uint64_t r = detail::rank(conj);
      if (!assigned[r]) {
        assigned[r] = true;
        ++cls.size;
      }
      if (conj == g)
        ++cls.centralizer_order;
    }
    classes.push_back(std::move(cls));
  }
  return classes;
}

struct OracleReport {
  GroupKind kind = GroupKind::sym;
  std::uint32_t n = 0;
  std::size_t brute_class_count = 0;
  std::size_t type_count = 0;
  bool match = true;
  std::vector<std::string> mismatches;
};

/// Compares brute-force classes of V_n against the cycle-type formulas.
inline OracleReport compare_with_formula(GroupKind kind, std::uint32_t n)
{
  OracleReport report;
  report.kind = kind;
  report.n = n;
  auto fail = [&](std::string msg) {
    report.match = false;
    report.mismatches.push_back(std::move(msg));
  };

  const auto brute = brute_classes(kind, n);
  report.brute_class_count = brute.size();

  std::uint64_t order = 1;
  for (std::uint32_t i = 2; i <= n; ++i)
    order *= i;
  if (kind == GroupKind::alt && n >= 2)
    order /= 2;

  std::uint64_t total = 0;
  std::map<CycleType, std::vector<const BruteClass*>> by_type;
  for (const auto& cls : brute) {
    total += cls.size;
    if (cls.size * cls.centralizer_order != order)
      fail("class " + cls.type.to_string() + ": size * centralizer != |V_n|");
    by_type[cls.type].push_back(&cls);
  }
  if (total != order)
    fail("class equation: sizes sum to " + std::to_string(total) + ", expected " + std::to_string(order));

  const auto records = class_records(kind, n);
  report.type_count = records.size();
  if (records.size() != by_type.size())
    fail("type count: formula " + std::to_string(records.size()) + ", brute " + std::to_string(by_type.size()));

  for (const auto& rec : records) {
    auto it = by_type.find(rec.type);
    if (it == by_type.end()) {
      fail("type " + rec.type.to_string() + " missing from brute classes");
      continue;
    }
    const auto& classes = it->second;
    const std::size_t expected_count = rec.splits ? 2 : 1;
    if (classes.size() != expected_count)
      fail("type " + rec.type.to_string() + ": " + std::to_string(classes.size()) + " brute classes, expected " +
           std::to_string(expected_count));
    const FactoredNat centralizer = centralizer_order(kind, rec.type);
    for (const BruteClass* cls : classes) {
      if (factor(cls->size) != rec.class_size)
        fail("type " + rec.type.to_string() + ": brute size " + std::to_string(cls->size) + " vs formula " +
             to_decimal(rec.class_size));
      if (factor(cls->centralizer_order) != centralizer)
        fail("type " + rec.type.to_string() + ": brute centralizer " + std::to_string(cls->centralizer_order) +
             " vs formula " + to_decimal(centralizer));
    }
  }

  std::vector<FactoredNat> brute_sizes;
  for (const auto& cls : brute)
    brute_sizes.push_back(factor(cls.size));
  sort_values(brute_sizes);
  if (brute_sizes != class_size_set(kind, n).sorted)
    fail("N(V_n) differs between brute force and formula");
  return report;
}

} // namespace tgv::oracle
