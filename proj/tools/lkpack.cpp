// Command-line front end: exact solves, bound reports and theorem campaigns.
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "lkpack/lkpack.hpp"
#include "lkpack/report.hpp"

namespace {

using namespace lkpack;

Graph load_graph(const std::string& arg) {
  if (!arg.empty() && arg.front() == '@') {
    auto graphs = read_graph_file(arg.substr(1));
    if (graphs.size() != 1)
      throw std::invalid_argument(arg.substr(1) + " holds " + std::to_string(graphs.size()) +
                                  " graphs; expected exactly one");
    return graphs.front();
  }
  return parse_graph6(arg);
}

int run_solve(const std::string& graph, int k, const std::string& method, bool witness) {
  const Graph g = load_graph(graph);
  const SolveMethod m = method == "oracle" ? SolveMethod::oracle : SolveMethod::branch_and_bound;
  const SolveResult r = limited_packing_number(g, k, m);
  std::cout << r.value << "\n";
  if (witness) {
    bool first = true;
    for (int v : r.witness) {
      std::cout << (first ? "" : " ") << v;
      first = false;
    }
    std::cout << "\n";
  }
  return 0;
}

int run_params(const std::string& graph) {
  const Graph g = load_graph(graph);
  Json out;
  out["graph6"] = emit_graph6(g);
  for (int k = 1; k <= 3; ++k) out["L_" + std::to_string(k)] = limited_packing_bb(g, k).value;
  out["rho0"] = open_packing_number(g).value;
  out["gamma"] = domination_number(g).value;
  try {
    out["gamma_t"] = total_domination_number(g).value;
  } catch (const undefined_parameter_error&) {
    out["gamma_t"] = nullptr;
  }
  out["profile"] = to_json(profile(g));
  std::cout << out.dump(2) << "\n";
  return 0;
}

int run_bounds(const std::string& graph, int k, bool exact) {
  const Graph g = load_graph(graph);
  BoundReport report = exact ? bound_report(g, k, solve_aux(g), limited_packing_bb(g, k).value)
                             : bound_report(g, k);
  std::cout << to_json(report).dump(2) << "\n";
  return report.violations().empty() ? 0 : 1;
}

int run_ng(const std::string& graph, int k) {
  const NGReport r = nordhaus_gaddum(load_graph(graph), k);
  std::cout << to_json(r).dump(2) << "\n";
  return r.within_bounds() ? 0 : 1;
}

int run_recognize(const std::string& graph, const std::string& family, int k) {
  const Graph g = load_graph(graph);
  Json out;
  out["graph6"] = emit_graph6(g);
  out["family"] = family;
  if (family == "classG") {
    const auto w = recognize_class_G(g);
    out["member"] = w.has_value();
    out["witness"] = w ? Json{{"A0", to_json(w->a0)}, {"B0", to_json(w->b0)}} : Json(nullptr);
    out["L_2"] = limited_packing_bb(g, 2).value;
    out["n_plus_1_minus_Delta"] = g.order() + 1 - g.max_degree();
  } else if (family == "spider") {
    const auto s = recognize_spider(g);
    out["member"] = s && s->t < g.max_degree();
    out["shape"] = s ? Json{{"center", s->center}, {"t", s->t}, {"s", s->s}} : Json(nullptr);
    out["L_1"] = limited_packing_bb(g, 1).value;
    out["L_2"] = limited_packing_bb(g, 2).value;
  } else if (family == "classT") {
    const auto w = recognize_class_T(g);
    out["member"] = w.has_value();
    out["witness"] = w ? Json{{"S0", to_json(w->s0)}, {"R0", to_json(w->r0)}} : Json(nullptr);
    out["rho0"] = open_packing_number(g).value;
    out["L_2"] = limited_packing_bb(g, 2).value;
  } else if (family == "lk-eq-k") {
    out["k"] = k;
    out["member"] = check_Lk_equals_k(g, k);
    out["L_k"] = limited_packing_bb(g, k).value;
  } else {
    throw std::invalid_argument("unknown family \"" + family + "\"");
  }
  std::cout << out.dump(2) << "\n";
  return 0;
}

int run_verify(const std::string& ids, const std::string& corpus_spec, const std::string& k_text,
               std::uint64_t seed, const std::string& json_path, bool allow_seven) {
  const auto theorems = select_theorems(ids);
  const Corpus corpus = parse_corpus(corpus_spec, seed, allow_seven);
  const auto ks = parse_k_range(k_text);
  const CampaignResult result = run_campaign(theorems, corpus, ks);
  for (const auto& v : result.verdicts) {
    std::cout << v.theorem_id << ": " << to_string(v.status()) << " (graphs " << v.graphs_checked
              << ", substantive " << v.substantive_checks << ", positive " << v.positive_cases << ", violations "
              << v.violation_count << ")\n";
    for (const auto& x : v.violations)
      std::cout << "  " << x.graph6 << (x.k ? " k=" + std::to_string(*x.k) : std::string()) << ": " << x.details
                << "\n";
  }
  std::cout << "corpus graphs: " << result.corpus_graphs << "\n";
  if (!json_path.empty()) {
    std::ofstream out(json_path);
    if (!out) throw std::runtime_error("cannot write " + json_path);
    out << campaign_report(result, corpus_spec, ks, seed).dump(2) << "\n";
  }
  return result.passed() ? 0 : 1;
}

int run_replay(const std::string& id, const std::string& graph, int k) {
  const Theorem& t = find_theorem(id);
  const Evaluation e = replay(t, load_graph(graph), k > 0 ? std::optional<int>(k) : std::nullopt);
  Json out{{"theorem_id", id},
           {"substantive", e.substantive},
           {"positive", e.positive},
           {"failures", e.failures}};
  std::cout << out.dump(2) << "\n";
  return e.failures.empty() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact k-limited packing solver and theorem checker"};
  app.require_subcommand(1);

  std::string graph;
  int k = 2;
  auto graph_option = [&](CLI::App* sub) {
    sub->add_option("--graph", graph, "graph6 string or @file")->required();
  };

  auto* solve = app.add_subcommand("solve", "Exact L_k(G)");
  graph_option(solve);
  solve->add_option("--k", k, "packing limit")->required()->check(CLI::PositiveNumber);
  std::string method = "bb";
  solve->add_option("--method", method)->check(CLI::IsMember({"oracle", "bb"}));
  bool witness = false;
  solve->add_flag("--witness", witness, "also print an optimal set");

  auto* params = app.add_subcommand("params", "L_1, L_2, L_3, rho0, gamma, gamma_t and the profile as JSON");
  graph_option(params);

  auto* bounds = app.add_subcommand("bounds", "Bound report as JSON");
  graph_option(bounds);
  bounds->add_option("--k", k)->required()->check(CLI::PositiveNumber);
  bool exact = false;
  bounds->add_flag("--exact", exact, "solve exactly and include solver-backed bounds");

  auto* ng = app.add_subcommand("ng", "Nordhaus-Gaddum report as JSON");
  graph_option(ng);
  ng->add_option("--k", k)->required()->check(CLI::PositiveNumber);

  auto* recognize = app.add_subcommand("recognize", "Family membership with witness");
  graph_option(recognize);
  std::string family;
  recognize->add_option("--family", family)->required()->check(
      CLI::IsMember({"classG", "spider", "classT", "lk-eq-k"}));
  recognize->add_option("--k", k)->check(CLI::PositiveNumber);

  auto* generate = app.add_subcommand("generate", "graph6 of a constructed family member");
  std::string family_spec;
  generate->add_option("--family", family_spec, "e.g. spider:3,2 or diam2:4 or path:3+cycle:5")->required();

  auto* verify = app.add_subcommand("verify", "Run a theorem campaign");
  std::string ids = "all";
  std::string corpus_spec;
  std::string k_text = "1..3";
  std::uint64_t seed = 1;
  std::string json_path;
  bool allow_seven = false;
  verify->add_option("--theorems", ids, "comma-separated ids or all");
  verify->add_option("--corpus", corpus_spec)->required();
  verify->add_option("--k", k_text, "range A..B or list");
  verify->add_option("--seed", seed, "seed for random corpus parts without their own");
  verify->add_option("--json", json_path, "write the report here");
  verify->add_flag("--allow-n7", allow_seven, "permit all_labeled(7)");

  auto* replay_cmd = app.add_subcommand("replay", "Re-check one theorem on one graph");
  std::string theorem_id;
  replay_cmd->add_option("--theorem", theorem_id)->required();
  graph_option(replay_cmd);
  int replay_k = 0;
  replay_cmd->add_option("--k", replay_k);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*solve) return run_solve(graph, k, method, witness);
    if (*params) return run_params(graph);
    if (*bounds) return run_bounds(graph, k, exact);
    if (*ng) return run_ng(graph, k);
    if (*recognize) return run_recognize(graph, family, k);
    if (*generate) {
      std::cout << emit_graph6(construct_family(family_spec)) << "\n";
      return 0;
    }
    if (*verify) return run_verify(ids, corpus_spec, k_text, seed, json_path, allow_seven);
    if (*replay_cmd) return run_replay(theorem_id, graph, replay_k);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
