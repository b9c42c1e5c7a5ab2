#pragma once

// JSON forms of every result type. Field order is fixed (ordered_json) so
// that reports are byte-stable across runs.

#include <string>
#include <vector>

#include "json.hpp"

#include "tgv/divgraph.hpp"
#include "tgv/factored.hpp"
#include "tgv/oracle.hpp"
#include "tgv/phipsi.hpp"
#include "tgv/primes.hpp"
#include "tgv/symclasses.hpp"
#include "tgv/verifier.hpp"

namespace tgv {

using json = nlohmann::ordered_json;

inline json to_json(const CycleType& t)
{
  return json(t.parts());
}

inline json to_json(const std::vector<FactoredNat>& values)
{
  json arr = json::array();
  for (const auto& v : values)
    arr.push_back(to_json(v));
  return arr;
}

inline std::vector<FactoredNat> factored_list_from_json(const json& j)
{
  if (!j.is_array())
    throw domain_error("expected a JSON array of factored values");
  std::vector<FactoredNat> out;
  for (const auto& item : j)
    out.push_back(factored_from_json(item));
  return out;
}

inline json to_json(const GoldbachReport& g)
{
  json j;
  j["n"] = g.n;
  j["holds"] = g.holds;
  if (g.witness) {
    j["witness"] = {{"q1", g.witness->smaller}, {"q2", g.witness->larger}, {"target", g.witness->target}};
  } else {
    j["witness"] = nullptr;
  }
  return j;
}

inline json to_json(const GapReport& r)
{
  json j;
  j["kind"] = std::string(to_string(r.kind));
  j["n"] = r.n;
  j["p"] = r.p;
  j["omega"] = r.omega;
  j["h_psi_p"] = r.h_psi_p;
  j["chain_witness"] = to_json(r.chain_witness);
  j["criterion"] = r.criterion;
  json bounds = json::array();
  for (const auto& b : r.bounds)
    bounds.push_back({{"source", b.source}, {"bound", b.bound}, {"ok", b.ok}});
  j["bounds"] = std::move(bounds);
  j["goldbach"] = to_json(r.goldbach);
  j["psi_descent_ok"] = r.psi_descent_ok;
  return j;
}

inline json to_json(const ClassSpectrum& s)
{
  return to_json(s.sorted);
}

inline json to_json(const PhiPsiSet& s)
{
  json j;
  j["kind"] = std::string(to_string(s.kind));
  j["n"] = s.n;
  j["t"] = s.t;
  j["set"] = s.family == SetFamily::phi ? "phi" : "psi";
  j["mode"] = std::string(to_string(s.mode));
  j["values"] = to_json(s.values);
  json witnesses = json::array();
  for (const auto& w : s.witnesses) {
    json entry;
    if (s.family == SetFamily::psi)
      entry["i"] = w.offset;
    entry["type"] = to_json(w.type);
    witnesses.push_back(std::move(entry));
  }
  j["witnesses"] = std::move(witnesses);
  return j;
}

inline PhiPsiSet phipsi_from_json(const json& j)
{
  PhiPsiSet set;
  set.family = j.at("set").get<std::string>() == "phi" ? SetFamily::phi : SetFamily::psi;
  set.kind = parse_group_kind(j.at("kind").get<std::string>());
  set.n = j.at("n").get<std::uint32_t>();
  set.t = j.at("t").get<std::uint32_t>();
  set.mode = parse_psi_mode(j.at("mode").get<std::string>());
  const auto values = factored_list_from_json(j.at("values"));
  const auto& witnesses = j.at("witnesses");
  if (!witnesses.is_array() || witnesses.size() != values.size())
    throw domain_error("phipsi_from_json: witnesses do not align with values");
  std::vector<std::pair<FactoredNat, SetWitness>> collected;
  for (std::size_t i = 0; i < values.size(); ++i) {
    SetWitness w;
    w.offset = witnesses[i].value("i", 0u);
    w.type = CycleType(witnesses[i].at("type").get<std::vector<std::uint32_t>>());
    collected.emplace_back(values[i], std::move(w));
  }
  set.finalize(std::move(collected));
  return set;
}

inline json to_json(const HeightResult& h)
{
  json j;
  j["h"] = h.h;
  j["convention"] = "vertices";
  j["witness"] = to_json(h.witness);
  return j;
}

inline json to_json(const ConClassReport& r)
{
  json j;
  j["kind"] = std::string(to_string(r.kind));
  j["n"] = r.n;
  j["t"] = r.t;
  j["holds"] = r.holds;
  j["violations"] = to_json(r.violations);
  j["types_checked"] = r.types_checked;
  j["coprime_types"] = r.coprime_types;
  j["covered_by_phi"] = r.covered_by_phi;
  j["covered_by_psi"] = r.covered_by_psi;
  j["identity"] = r.identity;
  return j;
}

inline json to_json(const PsiDescentReport& r)
{
  json j;
  j["kind"] = std::string(to_string(r.kind));
  j["n"] = r.n;
  j["all_consistent"] = r.all_consistent;
  json pairs = json::array();
  for (const auto& p : r.pairs) {
    json e;
    e["t_lower"] = p.lower;
    e["t_upper"] = p.upper;
    e["difference_empty"] = p.difference_empty;
    e["predicted_empty"] = p.predicted_empty;
    e["consistent"] = p.consistent;
    if (p.witness) {
      e["witness"] = {{"value", to_json(*p.witness_value)}, {"i", p.witness->offset}, {"type", to_json(p.witness->type)}};
    } else {
      e["witness"] = nullptr;
    }
    pairs.push_back(std::move(e));
  }
  j["pairs"] = std::move(pairs);
  return j;
}

inline json to_json(const HzCheck& c)
{
  json j;
  j["kind"] = std::string(to_string(c.kind));
  j["n"] = c.n;
  j["p"] = c.p;
  j["gap"] = c.gap;
  j["applicable"] = c.applicable;
  if (c.applicable) {
    j["bound"] = c.bound;
    j["h_psi_p"] = c.h;
  }
  j["ok"] = c.ok;
  return j;
}

inline json to_json(const Hz2RangeReport& r)
{
  json j;
  j["lo"] = r.range.lo;
  j["hi"] = r.range.hi;
  j["bound"] = r.range.bound;
  j["ok"] = r.ok;
  json kinds = json::array();
  for (const auto& k : r.kinds) {
    kinds.push_back({{"kind", std::string(to_string(k.kind))},
                     {"max_h", k.max_h},
                     {"bound_failures", k.bound_failures},
                     {"criterion_failures", k.criterion_failures}});
  }
  j["kinds"] = std::move(kinds);
  return j;
}

inline json to_json(const ScanReport& r)
{
  json j;
  j["kind"] = std::string(to_string(r.kind));
  j["lo"] = r.lo;
  j["hi"] = r.hi;
  j["failures"] = r.failures;
  json entries = json::array();
  for (const auto& e : r.entries)
    entries.push_back(to_json(e));
  j["entries"] = std::move(entries);
  return j;
}

inline json to_json(const GoldbachScanReport& r)
{
  return {{"lo", r.lo}, {"hi", r.hi}, {"failures", r.failures}};
}

inline json to_json(const oracle::OracleReport& r)
{
  json j;
  j["kind"] = std::string(to_string(r.kind));
  j["n"] = r.n;
  j["brute_classes"] = r.brute_class_count;
  j["types"] = r.type_count;
  j["match"] = r.match;
  j["mismatches"] = r.mismatches;
  return j;
}

} // namespace tgv
