#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "invariants.hpp"
#include "verify.hpp"

namespace biphole {

using ordered_json = nlohmann::ordered_json;

// Reports hold only integers, booleans and strings, in a fixed key
// order, so identical runs serialize to identical bytes.

inline ordered_json to_json(const InvariantReport& r) {
  ordered_json j;
  j["n"] = r.n;
  j["m"] = r.m;
  j["delta"] = r.delta;
  if (r.sigma2)
    j["sigma2"] = *r.sigma2;
  else
    j["sigma2"] = "infinity";
  j["alpha"] = r.alpha;
  j["tialpha"] = r.tialpha;
  j["kappa"] = r.kappa;
  j["is_connected"] = r.is_connected;
  j["is_2_connected"] = r.is_2_connected;
  j["has_triangle"] = r.has_triangle;
  j["is_bipartite"] = r.is_bipartite;
  j["is_balanced_complete_bipartite"] = r.is_balanced_complete_bipartite;
  j["is_hamiltonian"] = r.is_hamiltonian;
  j["is_pancyclic"] = r.is_pancyclic;
  if (r.tialpha_definitional) j["tialpha_definitional"] = *r.tialpha_definitional;
  if (r.kappa_oracle) j["kappa_oracle"] = *r.kappa_oracle;
  if (r.routes_agree) j["routes_agree"] = *r.routes_agree;
  return j;
}

inline ordered_json to_json(const Finding& f) {
  ordered_json j;
  j["index"] = f.index;
  j["graph6"] = f.graph6;
  j["check"] = f.check;
  j["detail"] = f.detail;
  return j;
}

inline ordered_json findings_json(const std::vector<Finding>& fs) {
  ordered_json arr = ordered_json::array();
  for (const Finding& f : fs) arr.push_back(to_json(f));
  return arr;
}

inline ordered_json suite_report(const SearchResult& res, const std::vector<TheoremId>& ids,
                                 const std::string& source_desc) {
  ordered_json j;
  j["schema"] = 1;
  j["command"] = "check";
  j["source"] = source_desc;
  ordered_json checks = ordered_json::array();
  for (TheoremId id : ids) checks.push_back(to_string(id));
  j["checks"] = checks;
  j["scanned"] = res.scanned;
  j["violation_count"] = res.violations.size();
  j["flag_count"] = res.flags.size();
  j["violations"] = findings_json(res.violations);
  j["flags"] = findings_json(res.flags);
  return j;
}

inline ordered_json search_report(const SearchResult& res, const std::string& source_desc) {
  ordered_json j;
  j["schema"] = 1;
  j["command"] = "search-q54";
  j["source"] = source_desc;
  j["scanned"] = res.scanned;
  j["candidate_count"] = res.flags.size();
  j["violation_count"] = res.violations.size();
  j["candidates"] = findings_json(res.flags);
  j["violations"] = findings_json(res.violations);
  return j;
}

inline ordered_json invariants_report(const std::vector<std::pair<std::string, InvariantReport>>&
                                          entries) {
  ordered_json j;
  j["schema"] = 1;
  j["command"] = "invariants";
  ordered_json arr = ordered_json::array();
  for (const auto& [name, rep] : entries) {
    ordered_json e;
    e["graph"] = name;
    e["invariants"] = to_json(rep);
    arr.push_back(e);
  }
  j["graphs"] = arr;
  return j;
}

}  // namespace biphole
