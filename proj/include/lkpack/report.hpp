#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "lkpack/bounds.hpp"
#include "lkpack/campaign.hpp"
#include "lkpack/extremal.hpp"
#include "lkpack/profile.hpp"
#include "lkpack/solvers.hpp"

namespace lkpack {

inline constexpr const char* kToolVersion = "1.0.0";

using Json = nlohmann::ordered_json;

inline Json to_json(VertexSet s) {
  Json out = Json::array();
  for (int v : s) out.push_back(v);
  return out;
}

inline Json to_json(const Length& len) { return len.finite() ? Json(len.value()) : Json("inf"); }

inline Json to_json(const GraphProfile& p) {
  return Json{{"order", p.order},
              {"edges", p.edge_count},
              {"connected", p.connected},
              {"is_tree", p.is_tree},
              {"components", p.component_count},
              {"max_degree", p.max_degree},
              {"min_degree", p.min_degree},
              {"min_nonleaf_degree", p.min_nonleaf_degree ? Json(*p.min_nonleaf_degree) : Json(nullptr)},
              {"diameter", to_json(p.diameter)},
              {"girth", to_json(p.girth)},
              {"cut_vertices", to_json(p.cut_vertices)},
              {"every_edge_on_triangle", p.every_edge_on_triangle},
              {"regular", p.regular}};
}

inline Json to_json(const SolveResult& r) {
  return Json{{"value", r.value},
              {"witness", to_json(r.witness)},
              {"nodes_explored", r.nodes_explored},
              {"method", to_string(r.method)}};
}

inline Json to_json(const BoundEntry& e) {
  return Json{{"id", e.id},
              {"direction", to_string(e.direction)},
              {"applicable", e.applicable()},
              {"value", e.value ? Json(*e.value) : Json("not applicable")},
              {"raw", e.raw ? Json(e.raw->to_string()) : Json(nullptr)},
              {"hypothesis", e.hypothesis},
              {"source", e.source}};
}

inline Json to_json(const BoundReport& r) {
  Json entries = Json::array();
  for (const auto& e : r.entries) entries.push_back(to_json(e));
  Json violations = Json::array();
  for (const auto& e : r.violations()) violations.push_back(e.id);
  return Json{{"graph_id", r.graph_id},
              {"k", r.k},
              {"exact", r.exact ? Json(*r.exact) : Json(nullptr)},
              {"entries", entries},
              {"violations", violations}};
}

inline Json to_json(const NGReport& r) {
  return Json{{"graph_id", r.graph_id},
              {"k", r.k},
              {"n", r.n},
              {"lk_graph", r.lk_graph},
              {"lk_complement", r.lk_complement},
              {"sum", r.sum},
              {"lower_bound", r.lower_bound},
              {"lower_applicable", r.lower_applicable},
              {"upper_bound", r.upper_bound},
              {"upper_case", to_string(r.upper_case)},
              {"k2_upper", r.k2_upper ? Json(*r.k2_upper) : Json(nullptr)},
              {"within_bounds", r.within_bounds()}};
}

inline Json to_json(const TheoremVerdict& v) {
  Json violations = Json::array();
  for (const auto& x : v.violations)
    violations.push_back(Json{{"graph6", x.graph6}, {"k", x.k ? Json(*x.k) : Json(nullptr)}, {"details", x.details}});
  return Json{{"theorem_id", v.theorem_id},
              {"status", to_string(v.status())},
              {"graphs_checked", v.graphs_checked},
              {"substantive_checks", v.substantive_checks},
              {"positive_cases", v.positive_cases},
              {"violation_count", v.violation_count},
              {"violations", violations}};
}

inline Json campaign_report(const CampaignResult& result, const std::string& corpus_spec,
                            const std::vector<int>& ks, std::uint64_t seed) {
  Json verdicts = Json::array();
  for (const auto& v : result.verdicts) verdicts.push_back(to_json(v));
  return Json{{"tool_version", kToolVersion},
              {"corpus_spec", corpus_spec},
              {"seed", seed},
              {"k_range", ks},
              {"corpus_graphs", result.corpus_graphs},
              {"verdicts", verdicts}};
}

}  // namespace lkpack
