#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tgv/divgraph.hpp"
#include "tgv/error.hpp"
#include "tgv/parallel.hpp"
#include "tgv/phipsi.hpp"
#include "tgv/primes.hpp"
#include "tgv/symclasses.hpp"

namespace tgv {

inline constexpr std::uint32_t scan_min_n = 23;
inline constexpr std::uint32_t scan_max_n = 1500;
inline constexpr std::uint32_t default_scan_hi = 1361;
inline constexpr std::uint64_t goldbach_scan_max = 1'000'000;

struct Hz2Range {
  std::uint32_t lo = 0;
  std::uint32_t hi = 0;
  std::uint32_t bound = 0;
};

/// Tabulated upper bounds on h(Psi_p).
struct BoundTable {
  std::map<std::uint32_t, std::uint32_t> hz_rows; // n - p -> bound
  std::vector<Hz2Range> hz2_ranges;               // n in [lo, hi] -> bound
};

inline const BoundTable& bound_table()
{
  static const BoundTable table{
      {{2, 1}, {3, 2}, {4, 3}, {5, 5}, {6, 6}, {7, 8}, {8, 11},
       {9, 14}, {10, 18}, {11, 21}, {12, 26}, {13, 30}, {18, 69}},
      {{23, 26, 2},
       {31, 36, 2},
       {113, 124, 11},
       {139, 148, 9},
       {199, 210, 12},
       {211, 222, 12},
       {317, 336, 17},
       {523, 540, 26},
       {887, 905, 35},
       {1129, 1150, 39},
       {1327, 1360, 58}},
  };
  return table;
}

inline std::optional<Hz2Range> hz2_range_of(std::uint32_t n)
{
  for (const auto& r : bound_table().hz2_ranges)
    if (r.lo <= n && n <= r.hi)
      return r;
  return std::nullopt;
}

struct BoundCheck {
  std::string source; // "hz" or "hz2"
  std::uint32_t bound = 0;
  bool ok = false;
};

struct GapReport {
  GroupKind kind = GroupKind::sym;
  std::uint32_t n = 0;
  std::uint32_t p = 0;
  std::vector<std::uint64_t> omega;
  std::size_t h_psi_p = 0;
  std::vector<FactoredNat> chain_witness;
  bool criterion = false; // |Omega| > h(Psi_p)
  std::vector<BoundCheck> bounds;
  GoldbachReport goldbach;
  bool psi_descent_ok = false;
};

/// p = largest prime <= n and h(Psi_p) with its witness chain.
inline std::pair<std::uint32_t, HeightResult> psi_p_height(GroupKind kind, std::uint32_t n)
{
  const auto p = static_cast<std::uint32_t>(largest_prime_leq(n));
  const PhiPsiSet psi = psi_set(kind, n, p, PsiMode::exact);
  return {p, height(psi.values)};
}

inline GapReport omega_gap_report(GroupKind kind, std::uint32_t n)
{
  if (n < scan_min_n || n > scan_max_n)
    throw domain_error("omega_gap_report: n must lie in [" + std::to_string(scan_min_n) + ", " +
                       std::to_string(scan_max_n) + "], got " + std::to_string(n));
  GapReport report;
  report.kind = kind;
  report.n = n;
  report.omega = omega_set(n);
  auto [p, h] = psi_p_height(kind, n);
  report.p = p;
  report.h_psi_p = h.h;
  report.chain_witness = std::move(h.witness);
  report.criterion = report.omega.size() > report.h_psi_p;

  const auto& table = bound_table();
  if (auto row = table.hz_rows.find(n - p); row != table.hz_rows.end())
    report.bounds.push_back({"hz", row->second, report.h_psi_p <= row->second});
  if (auto range = hz2_range_of(n))
    report.bounds.push_back({"hz2", range->bound, report.h_psi_p <= range->bound});

  report.goldbach = goldbach_condition(n);
  report.psi_descent_ok = psi_strict_descent(kind, n).all_consistent;
  return report;
}

struct HzCheck {
  GroupKind kind = GroupKind::sym;
  std::uint32_t n = 0;
  std::uint32_t p = 0;
  std::uint32_t gap = 0; // n - p
  bool applicable = false;
  std::uint32_t bound = 0;
  std::size_t h = 0;
  bool ok = true; // vacuously true when not applicable
};

/// Checks the row of the n - p table that applies to n. An n whose gap is not
/// a key is reported as inapplicable, not as an error.
inline HzCheck verify_hz(std::uint32_t n, GroupKind kind)
{
  if (n < 5)
    throw domain_error("verify_hz: n must be >= 5");
  HzCheck check;
  check.kind = kind;
  check.n = n;
  check.p = static_cast<std::uint32_t>(largest_prime_leq(n));
  check.gap = n - check.p;
  const auto& rows = bound_table().hz_rows;
  auto row = rows.find(check.gap);
  if (row == rows.end())
    return check;
  check.applicable = true;
  check.bound = row->second;
  check.h = psi_p_height(kind, n).second.h;
  check.ok = check.h <= check.bound;
  return check;
}

struct Hz2KindResult {
  GroupKind kind = GroupKind::sym;
  std::size_t max_h = 0;
  std::vector<std::uint32_t> bound_failures;     // h > bound
  std::vector<std::uint32_t> criterion_failures; // |Omega| <= h
};

struct Hz2RangeReport {
  Hz2Range range;
  std::vector<Hz2KindResult> kinds;
  bool ok = true;
};

/// h(Psi_p) for every n of every tabulated range, both kinds.
inline std::vector<Hz2RangeReport> verify_hz2(unsigned jobs = 1,
                                              const std::vector<Hz2Range>& ranges = bound_table().hz2_ranges)
{
  struct Job {
    std::size_t range;
    GroupKind kind;
    std::uint32_t n;
  };
  std::vector<Job> work;
  for (std::size_t r = 0; r < ranges.size(); ++r)
    for (GroupKind kind : {GroupKind::sym, GroupKind::alt})
      for (std::uint32_t n = ranges[r].lo; n <= ranges[r].hi; ++n)
        work.push_back({r, kind, n});

  std::vector<std::size_t> heights(work.size());
  std::vector<std::size_t> omega_sizes(work.size());
  parallel_for(work.size(), jobs, [&](std::size_t i) {
    heights[i] = psi_p_height(work[i].kind, work[i].n).second.h;
    omega_sizes[i] = omega_set(work[i].n).size();
  });

  std::vector<Hz2RangeReport> reports(ranges.size());
  for (std::size_t r = 0; r < ranges.size(); ++r) {
    reports[r].range = ranges[r];
    reports[r].kinds = {Hz2KindResult{GroupKind::sym}, Hz2KindResult{GroupKind::alt}};
  }
  for (std::size_t i = 0; i < work.size(); ++i) {
    auto& report = reports[work[i].range];
    auto& result = report.kinds[work[i].kind == GroupKind::sym ? 0 : 1];
    result.max_h = std::max(result.max_h, heights[i]);
    if (heights[i] > report.range.bound) {
      result.bound_failures.push_back(work[i].n);
      report.ok = false;
    }
    if (omega_sizes[i] <= heights[i])
      result.criterion_failures.push_back(work[i].n);
  }
  return reports;
}

struct ScanReport {
  GroupKind kind = GroupKind::sym;
  std::uint32_t lo = 0;
  std::uint32_t hi = 0;
  std::vector<GapReport> entries;     // ascending n
  std::vector<std::uint32_t> failures; // n with |Omega| <= h(Psi_p)
};

inline ScanReport scan(GroupKind kind, std::uint32_t lo, std::uint32_t hi, unsigned jobs = 1)
{
  if (lo < scan_min_n || lo > hi || hi > scan_max_n)
    throw domain_error("scan: need " + std::to_string(scan_min_n) + " <= lo <= hi <= " +
                       std::to_string(scan_max_n) + ", got " + std::to_string(lo) + ".." + std::to_string(hi));
  ScanReport report;
  report.kind = kind;
  report.lo = lo;
  report.hi = hi;
  report.entries.resize(hi - lo + 1);
  parallel_for(report.entries.size(), jobs, [&](std::size_t i) {
    report.entries[i] = omega_gap_report(kind, lo + static_cast<std::uint32_t>(i));
  });
  for (const auto& e : report.entries)
    if (!e.criterion)
      report.failures.push_back(e.n);
  return report;
}

struct GoldbachScanReport {
  std::uint64_t lo = 0;
  std::uint64_t hi = 0;
  std::vector<std::uint64_t> failures;
};

inline GoldbachScanReport goldbach_scan(std::uint64_t lo, std::uint64_t hi)
{
  if (lo < 5 || lo > hi || hi > goldbach_scan_max)
    throw domain_error("goldbach_scan: need 5 <= lo <= hi <= " + std::to_string(goldbach_scan_max));
  shared_primes(hi);
  GoldbachScanReport report{lo, hi, {}};
  for (std::uint64_t n = lo; n <= hi; ++n)
    if (!goldbach_condition(n).holds)
      report.failures.push_back(n);
  return report;
}

} // namespace tgv
