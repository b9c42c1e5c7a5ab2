#pragma once

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"

#include "tgv/cache.hpp"
#include "tgv/divgraph.hpp"
#include "tgv/oracle.hpp"
#include "tgv/phipsi.hpp"
#include "tgv/report.hpp"
#include "tgv/verifier.hpp"

namespace tgv::cli {

enum ExitCode : int { ok = 0, check_failed = 1, usage = 2 };

struct Config {
  std::string cache_dir;
  std::string output = "json";
  unsigned jobs = 1;
  std::string kind;
  std::uint32_t n = 0;
  std::uint32_t t = 0;
  std::string range;
  std::string mode = "exact";
  std::string set = "psi";
  std::string values;
  std::string dot_path;
  std::string target;
  bool strict = false;
};

struct Range {
  std::uint64_t lo = 0;
  std::uint64_t hi = 0;
};

inline Range parse_range(const std::string& text)
{
  const auto dots = text.find("..");
  if (dots == std::string::npos)
    throw domain_error("range '" + text + "' is not of the form LO..HI");
  try {
    std::size_t used_lo = 0;
    std::size_t used_hi = 0;
    const std::string lo = text.substr(0, dots);
    const std::string hi = text.substr(dots + 2);
    Range r{std::stoull(lo, &used_lo), std::stoull(hi, &used_hi)};
    if (used_lo != lo.size() || used_hi != hi.size() || r.lo > r.hi)
      throw domain_error("");
    return r;
  } catch (const std::exception&) {
    throw domain_error("range '" + text + "' is not of the form LO..HI with LO <= HI");
  }
}

inline std::vector<GroupKind> kinds_of(const Config& cfg)
{
  if (cfg.kind.empty())
    return {GroupKind::sym, GroupKind::alt};
  return {parse_group_kind(cfg.kind)};
}

inline GroupKind single_kind(const Config& cfg)
{
  if (cfg.kind.empty())
    throw domain_error("--kind is required");
  return parse_group_kind(cfg.kind);
}

inline std::uint32_t require_n(const Config& cfg)
{
  if (cfg.n == 0)
    throw domain_error("--n is required");
  return cfg.n;
}

inline std::string lower_kind(GroupKind kind)
{
  return kind == GroupKind::sym ? "sym" : "alt";
}

/// Loads a cached JSON document or computes and stores it. The returned
/// text is identical on hit and miss.
template <class Compute>
std::string cached_document(const Config& cfg, const std::string& key, Compute&& compute)
{
  const CacheStore store(CacheStore::resolve_dir(cfg.cache_dir));
  if (auto hit = store.load(key)) {
    try {
      return json::parse(*hit).dump(2);
    } catch (const json::exception&) {
      // unreadable entry; recompute and overwrite
    }
  }
  const std::string text = compute().dump(2);
  store.store(key, text);
  return text;
}

inline ClassSpectrum load_classes(const Config& cfg, GroupKind kind, std::uint32_t n)
{
  const std::string key = "classes/" + lower_kind(kind) + "_" + std::to_string(n) + ".json";
  const std::string doc = cached_document(cfg, key, [&] { return to_json(class_size_set(kind, n)); });
  return ClassSpectrum::from_values(kind, n, factored_list_from_json(json::parse(doc)));
}

inline PhiPsiSet load_phipsi(const Config& cfg, SetFamily family, GroupKind kind, std::uint32_t n,
                             std::uint32_t t, PsiMode mode)
{
  std::string key;
  if (family == SetFamily::phi)
    key = "phi/" + lower_kind(kind) + "_" + std::to_string(n) + "_" + std::to_string(t) + ".json";
  else
    key = "psi/" + lower_kind(kind) + "_" + std::to_string(n) + "_" + std::to_string(t) + "_" +
          std::string(to_string(mode)) + ".json";
  const std::string doc = cached_document(cfg, key, [&] {
    return to_json(family == SetFamily::phi ? phi_set(kind, n, t) : psi_set(kind, n, t, mode));
  });
  return phipsi_from_json(json::parse(doc));
}

inline std::vector<FactoredNat> parse_value_list(const std::string& text)
{
  std::vector<FactoredNat> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty())
      continue;
    std::size_t used = 0;
    std::uint64_t v = 0;
    try {
      v = std::stoull(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != item.size() || v == 0)
      throw domain_error("--values: '" + item + "' is not a positive integer");
    out.push_back(factor(v));
  }
  return out;
}

/// The vertex set for `graph` and `height`: explicit --values, or one of the
/// computed sets selected by --set (t defaults to the largest prime <= n).
inline std::vector<FactoredNat> select_theta(const Config& cfg)
{
  if (!cfg.values.empty())
    return parse_value_list(cfg.values);
  const GroupKind kind = single_kind(cfg);
  const std::uint32_t n = require_n(cfg);
  if (cfg.set == "classes")
    return load_classes(cfg, kind, n).sorted;
  const std::uint32_t t = cfg.t != 0 ? cfg.t : static_cast<std::uint32_t>(largest_prime_leq(n));
  if (cfg.set == "phi")
    return load_phipsi(cfg, SetFamily::phi, kind, n, t, PsiMode::exact).values;
  if (cfg.set == "psi")
    return load_phipsi(cfg, SetFamily::psi, kind, n, t, parse_psi_mode(cfg.mode)).values;
  throw domain_error("--set must be psi, phi or classes");
}

inline void emit(std::ostream& out, const Config& cfg, const json& doc, const std::string& text)
{
  if (cfg.output == "text")
    out << text;
  else
    out << doc.dump(2) << '\n';
}

inline std::string decimal_list(const std::vector<FactoredNat>& values)
{
  std::string s;
  for (const auto& v : values)
    s += to_decimal(v) + "\n";
  return s;
}

inline std::string gap_text(const GapReport& r)
{
  std::ostringstream ss;
  ss << to_string(r.kind) << "_" << r.n << ": p=" << r.p << " |Omega|=" << r.omega.size()
     << " h(Psi_p)=" << r.h_psi_p << " criterion " << (r.criterion ? "holds" : "FAILS");
  for (const auto& b : r.bounds)
    ss << " " << b.source << "<=" << b.bound << (b.ok ? " ok" : " VIOLATED");
  ss << " goldbach=" << (r.goldbach.holds ? "yes" : "no") << " psi-descent=" << (r.psi_descent_ok ? "ok" : "BAD")
     << "\n";
  return ss.str();
}

inline int cmd_classes(const Config& cfg, std::ostream& out)
{
  const GroupKind kind = single_kind(cfg);
  const std::uint32_t n = require_n(cfg);
  const ClassSpectrum s = load_classes(cfg, kind, n);
  emit(out, cfg, to_json(s), decimal_list(s.sorted));
  return ok;
}

inline int cmd_phipsi(const Config& cfg, std::ostream& out, SetFamily family)
{
  const GroupKind kind = single_kind(cfg);
  const std::uint32_t n = require_n(cfg);
  if (cfg.t == 0)
    throw domain_error("--t is required");
  const PsiMode mode = family == SetFamily::phi ? PsiMode::exact : parse_psi_mode(cfg.mode);
  const PhiPsiSet s = load_phipsi(cfg, family, kind, n, cfg.t, mode);
  std::string text;
  for (std::size_t i = 0; i < s.size(); ++i) {
    text += to_decimal(s.values[i]);
    if (family == SetFamily::psi)
      text += "  i=" + std::to_string(s.witnesses[i].offset);
    text += "  g=" + s.witnesses[i].type.to_string() + "\n";
  }
  emit(out, cfg, to_json(s), text);
  return ok;
}

inline int cmd_graph(const Config& cfg, std::ostream& out)
{
  const DivGraph g = build_graph(select_theta(cfg), cfg.jobs);
  const std::string dot = export_dot(g);
  if (!cfg.dot_path.empty())
    write_atomic(std::filesystem::absolute(cfg.dot_path), dot);
  if (cfg.output == "dot") {
    out << dot;
    return ok;
  }
  json doc;
  doc["vertices"] = to_json(g.vertices);
  json edges = json::array();
  for (std::size_t u = 0; u < g.out_edges.size(); ++u)
    for (std::size_t v : g.out_edges[u])
      edges.push_back({u, v});
  doc["edges"] = std::move(edges);
  std::ostringstream text;
  text << g.vertices.size() << " vertices, " << g.edge_count() << " edges\n";
  emit(out, cfg, doc, text.str());
  return ok;
}

inline int cmd_height(const Config& cfg, std::ostream& out)
{
  const HeightResult h = height(select_theta(cfg));
  std::string text = "h = " + std::to_string(h.h) + " (vertices on a longest path)\nchain:";
  for (const auto& v : h.witness)
    text += " " + to_decimal(v);
  emit(out, cfg, to_json(h), text + "\n");
  return ok;
}

inline int cmd_gap(const Config& cfg, std::ostream& out)
{
  const GapReport r = omega_gap_report(single_kind(cfg), require_n(cfg));
  emit(out, cfg, to_json(r), gap_text(r));
  return (cfg.strict && !r.criterion) ? check_failed : ok;
}

inline int cmd_scan(const Config& cfg, std::ostream& out)
{
  const Range range = cfg.range.empty() ? Range{scan_min_n, default_scan_hi} : parse_range(cfg.range);
  if (range.hi > scan_max_n)
    throw domain_error("scan: range exceeds " + std::to_string(scan_max_n));
  const ScanReport r = scan(single_kind(cfg), static_cast<std::uint32_t>(range.lo),
                            static_cast<std::uint32_t>(range.hi), cfg.jobs);
  std::string text;
  for (const auto& e : r.entries)
    text += gap_text(e);
  text += "criterion failures:";
  for (auto n : r.failures)
    text += " " + std::to_string(n);
  emit(out, cfg, to_json(r), text + "\n");
  return (cfg.strict && !r.failures.empty()) ? check_failed : ok;
}

inline int cmd_verify_hz(const Config& cfg, std::ostream& out)
{
  Range range{scan_min_n, default_scan_hi};
  if (cfg.n != 0)
    range = {cfg.n, cfg.n};
  else if (!cfg.range.empty())
    range = parse_range(cfg.range);
  json checks = json::array();
  std::string text;
  bool all_ok = true;
  std::size_t applicable = 0;
  for (GroupKind kind : kinds_of(cfg)) {
    for (std::uint64_t n = range.lo; n <= range.hi; ++n) {
      const HzCheck c = verify_hz(static_cast<std::uint32_t>(n), kind);
      if (!c.applicable && cfg.n == 0)
        continue;
      applicable += c.applicable;
      all_ok = all_ok && c.ok;
      checks.push_back(to_json(c));
      if (!c.applicable)
        text += std::string(to_string(kind)) + "_" + std::to_string(n) + ": n-p=" + std::to_string(c.gap) +
                " has no row (inapplicable)\n";
      else if (!c.ok || cfg.n != 0)
        text += std::string(to_string(kind)) + "_" + std::to_string(n) + ": n-p=" + std::to_string(c.gap) +
                " h=" + std::to_string(c.h) + " bound=" + std::to_string(c.bound) + (c.ok ? " ok\n" : " VIOLATED\n");
    }
  }
  json doc{{"check", "hz"}, {"ok", all_ok}, {"applicable", applicable}, {"checks", std::move(checks)}};
  text += std::string("hz rows: ") + (all_ok ? "all hold" : "violations found") + " (" + std::to_string(applicable) +
          " applicable checks)\n";
  emit(out, cfg, doc, text);
  return all_ok ? ok : check_failed;
}

inline int cmd_verify_hz2(const Config& cfg, std::ostream& out)
{
  const auto reports = verify_hz2(cfg.jobs);
  json ranges = json::array();
  bool all_ok = true;
  std::string text;
  for (const auto& r : reports) {
    all_ok = all_ok && r.ok;
    ranges.push_back(to_json(r));
    text += std::to_string(r.range.lo) + ".." + std::to_string(r.range.hi) + " bound " + std::to_string(r.range.bound) +
            ":";
    for (const auto& k : r.kinds) {
      text += " " + std::string(to_string(k.kind)) + " max_h=" + std::to_string(k.max_h);
      if (!k.bound_failures.empty()) {
        text += " (exceeded at";
        for (auto n : k.bound_failures)
          text += " " + std::to_string(n);
        text += ")";
      }
    }
    text += r.ok ? "  PASS\n" : "  FAIL\n";
  }
  emit(out, cfg, json{{"check", "hz2"}, {"ok", all_ok}, {"ranges", std::move(ranges)}}, text);
  return all_ok ? ok : check_failed;
}

inline int cmd_verify_psi_lemma(const Config& cfg, std::ostream& out)
{
  Range range{scan_min_n, 200};
  if (cfg.n != 0)
    range = {cfg.n, cfg.n};
  else if (!cfg.range.empty())
    range = parse_range(cfg.range);
  json reports = json::array();
  bool all_ok = true;
  std::size_t pairs = 0;
  std::size_t empty_pairs = 0;
  std::string text;
  for (GroupKind kind : kinds_of(cfg)) {
    for (std::uint64_t n = range.lo; n <= range.hi; ++n) {
      const auto r = psi_strict_descent(kind, static_cast<std::uint32_t>(n));
      all_ok = all_ok && r.all_consistent;
      pairs += r.pairs.size();
      for (const auto& p : r.pairs)
        empty_pairs += p.difference_empty;
      if (!r.all_consistent || cfg.n != 0) {
        reports.push_back(to_json(r));
        text += std::string(to_string(kind)) + "_" + std::to_string(n) + (r.all_consistent ? ": ok\n" : ": MISMATCH\n");
      }
    }
  }
  text += "psi descent over n in [" + std::to_string(range.lo) + ", " + std::to_string(range.hi) + "]: " +
          std::to_string(pairs) + " pairs, " + std::to_string(empty_pairs) + " empty, " +
          (all_ok ? "consistent for every pair" : "mismatches found") + "\n";
  emit(out, cfg,
       json{{"check", "psi-lemma"},
            {"ok", all_ok},
            {"lo", range.lo},
            {"hi", range.hi},
            {"pairs", pairs},
            {"empty_pairs", empty_pairs},
            {"reports", std::move(reports)}},
       text);
  return all_ok ? ok : check_failed;
}

/// The fixed sample of (kind, n, t) used when no --n is given.
inline std::vector<std::tuple<GroupKind, std::uint32_t, std::uint32_t>> conclass_sample()
{
  return {{GroupKind::sym, 7, 5},   {GroupKind::alt, 7, 5},   {GroupKind::sym, 10, 7},  {GroupKind::alt, 12, 7},
          {GroupKind::sym, 13, 11}, {GroupKind::alt, 16, 13}, {GroupKind::sym, 19, 11}, {GroupKind::alt, 20, 17},
          {GroupKind::sym, 23, 19}, {GroupKind::alt, 24, 13}, {GroupKind::sym, 26, 23}, {GroupKind::alt, 27, 17},
          {GroupKind::sym, 30, 23}, {GroupKind::alt, 33, 31}, {GroupKind::sym, 36, 19}, {GroupKind::alt, 40, 29},
          {GroupKind::sym, 44, 43}, {GroupKind::alt, 50, 37}, {GroupKind::sym, 55, 53}, {GroupKind::alt, 60, 31}};
}

inline int cmd_verify_conclass(const Config& cfg, std::ostream& out)
{
  auto sample = conclass_sample();
  if (cfg.n != 0) {
    sample.clear();
    const auto omega = omega_set(cfg.n);
    for (GroupKind kind : kinds_of(cfg)) {
      if (cfg.t != 0)
        sample.emplace_back(kind, cfg.n, cfg.t);
      else
        for (auto t : omega)
          if (kind == GroupKind::sym || t % 2 == 1)
            sample.emplace_back(kind, cfg.n, static_cast<std::uint32_t>(t));
    }
  }
  json reports = json::array();
  bool all_ok = true;
  std::string text;
  for (const auto& [kind, n, t] : sample) {
    const auto r = conclass_cover_check(kind, n, t);
    all_ok = all_ok && r.holds;
    reports.push_back(to_json(r));
    text += std::string(to_string(kind)) + "_" + std::to_string(n) + " t=" + std::to_string(t) + ": " +
            (r.holds ? "covered" : std::to_string(r.violations.size()) + " violations") + "\n";
  }
  emit(out, cfg, json{{"check", "conclass"}, {"ok", all_ok}, {"reports", std::move(reports)}}, text);
  return all_ok ? ok : check_failed;
}

inline int cmd_goldbach(const Config& cfg, std::ostream& out)
{
  if (cfg.n != 0) {
    const auto r = goldbach_condition(cfg.n);
    std::string text = std::to_string(cfg.n) + ": ";
    if (r.holds)
      text += std::to_string(r.witness->target) + " = " + std::to_string(r.witness->smaller) + " + " +
              std::to_string(r.witness->larger) + "\n";
    else
      text += "neither n nor n-1 is a sum of two primes\n";
    emit(out, cfg, to_json(r), text);
    return r.holds ? ok : check_failed;
  }
  const Range range = cfg.range.empty() ? Range{scan_min_n, default_scan_hi} : parse_range(cfg.range);
  const auto r = goldbach_scan(range.lo, range.hi);
  std::string text = "goldbach " + std::to_string(r.lo) + ".." + std::to_string(r.hi) + ": " +
                     std::to_string(r.failures.size()) + " failures\n";
  emit(out, cfg, to_json(r), text);
  return r.failures.empty() ? ok : check_failed;
}

inline int cmd_oracle_check(const Config& cfg, std::ostream& out)
{
  std::vector<std::uint32_t> degrees;
  if (cfg.n != 0)
    degrees = {cfg.n};
  else
    for (std::uint32_t n = 1; n <= oracle::max_degree; ++n)
      degrees.push_back(n);
  json reports = json::array();
  bool all_ok = true;
  std::string text;
  for (GroupKind kind : kinds_of(cfg)) {
    for (auto n : degrees) {
      const auto r = oracle::compare_with_formula(kind, n);
      all_ok = all_ok && r.match;
      reports.push_back(to_json(r));
      text += std::string(to_string(kind)) + "_" + std::to_string(n) + ": " + std::to_string(r.brute_class_count) +
              " classes, " + (r.match ? "match" : "MISMATCH") + "\n";
      for (const auto& m : r.mismatches)
        text += "  " + m + "\n";
    }
  }
  emit(out, cfg, json{{"check", "oracle"}, {"ok", all_ok}, {"reports", std::move(reports)}}, text);
  return all_ok ? ok : check_failed;
}

/// Parses argv and dispatches. Exit codes: 0 all checks passed, 1 a check
/// failed (or --strict and a criterion failed), 2 usage or domain error.
inline int run(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr)
{
  Config cfg;
  CLI::App app{"Recomputes class-size spectra of Sym_n/Alt_n, the Phi/Psi sets, divisibility heights and "
               "the prime side conditions of the alternating-group recognition argument.",
               "tgv"};
  app.require_subcommand(1);

  auto add_kind = [&](CLI::App* sub) { sub->add_option("--kind", cfg.kind, "sym | alt"); };
  auto add_n = [&](CLI::App* sub) { sub->add_option("--n", cfg.n, "Degree n")->check(CLI::PositiveNumber); };
  auto add_t = [&](CLI::App* sub) { sub->add_option("--t", cfg.t, "Parameter t")->check(CLI::PositiveNumber); };
  auto add_range = [&](CLI::App* sub) { sub->add_option("--range", cfg.range, "LO..HI"); };
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--cache-dir", cfg.cache_dir, "Cache directory (default $TGV_CACHE_DIR or ./.tgv-cache)");
    sub->add_option("--output", cfg.output, "json | text | dot")->check(CLI::IsMember({"json", "text", "dot"}));
    sub->add_option("--jobs", cfg.jobs, "Worker threads")->check(CLI::PositiveNumber);
    sub->add_flag("--strict", cfg.strict, "Exit 1 when a gap criterion fails");
  };

  auto* classes = app.add_subcommand("classes", "N(V_n), the set of class sizes");
  add_kind(classes);
  add_n(classes);
  add_common(classes);

  auto* phi = app.add_subcommand("phi", "The set Phi_t");
  add_kind(phi);
  add_n(phi);
  add_t(phi);
  add_common(phi);

  auto* psi = app.add_subcommand("psi", "The set Psi_t");
  add_kind(psi);
  add_n(psi);
  add_t(psi);
  psi->add_option("--mode", cfg.mode, "exact | literal")->check(CLI::IsMember({"exact", "literal"}));
  add_common(psi);

  auto* graph = app.add_subcommand("graph", "Divisibility digraph of a set");
  auto* height_cmd = app.add_subcommand("height", "Longest divisibility chain of a set");
  for (auto* sub : {graph, height_cmd}) {
    add_kind(sub);
    add_n(sub);
    add_t(sub);
    sub->add_option("--set", cfg.set, "psi | phi | classes (default psi, t = largest prime <= n)")
        ->check(CLI::IsMember({"psi", "phi", "classes"}));
    sub->add_option("--mode", cfg.mode, "exact | literal")->check(CLI::IsMember({"exact", "literal"}));
    sub->add_option("--values", cfg.values, "Explicit comma-separated integers instead of a computed set");
    add_common(sub);
  }
  graph->add_option("--dot", cfg.dot_path, "Also write DOT to this file");

  auto* gap = app.add_subcommand("gap", "|Omega| versus h(Psi_p) for one n");
  add_kind(gap);
  add_n(gap);
  add_common(gap);

  auto* scan_cmd = app.add_subcommand("scan", "Gap reports over a range of n");
  add_kind(scan_cmd);
  add_range(scan_cmd);
  add_common(scan_cmd);

  auto* verify = app.add_subcommand("verify", "Run a tabulated bound or side-condition check");
  verify->add_option("target", cfg.target, "hz | hz2 | psi-lemma | conclass")
      ->required()
      ->check(CLI::IsMember({"hz", "hz2", "psi-lemma", "conclass"}));
  add_kind(verify);
  add_n(verify);
  add_t(verify);
  add_range(verify);
  add_common(verify);

  auto* goldbach = app.add_subcommand("goldbach", "Whether n or n-1 is a sum of two primes");
  add_n(goldbach);
  add_range(goldbach);
  add_common(goldbach);

  auto* oracle_cmd = app.add_subcommand("oracle-check", "Brute-force comparison for n <= 8");
  add_kind(oracle_cmd);
  add_n(oracle_cmd);
  add_common(oracle_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return ok;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return ok;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return usage;
  }

  try {
    if (cfg.output == "dot" && !graph->parsed())
      throw domain_error("--output dot is only available for the graph subcommand");
    if (classes->parsed())
      return cmd_classes(cfg, out);
    if (phi->parsed())
      return cmd_phipsi(cfg, out, SetFamily::phi);
    if (psi->parsed())
      return cmd_phipsi(cfg, out, SetFamily::psi);
    if (graph->parsed())
      return cmd_graph(cfg, out);
    if (height_cmd->parsed())
      return cmd_height(cfg, out);
    if (gap->parsed())
      return cmd_gap(cfg, out);
    if (scan_cmd->parsed())
      return cmd_scan(cfg, out);
    if (verify->parsed()) {
      if (cfg.target == "hz")
        return cmd_verify_hz(cfg, out);
      if (cfg.target == "hz2")
        return cmd_verify_hz2(cfg, out);
      if (cfg.target == "psi-lemma")
        return cmd_verify_psi_lemma(cfg, out);
      return cmd_verify_conclass(cfg, out);
    }
    if (goldbach->parsed())
      return cmd_goldbach(cfg, out);
    if (oracle_cmd->parsed())
      return cmd_oracle_check(cfg, out);
  } catch (const domain_error& e) {
    err << "error: " << e.what() << '\n';
    return usage;
  } catch (const resource_error& e) {
    err << "error: " << e.what() << '\n';
    return usage;
  } catch (const precondition_error& e) {
    err << "error: " << e.what() << '\n';
    return usage;
  }
  return usage;
}

} // namespace tgv::cli
