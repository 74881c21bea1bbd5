// Acceptance suite: one PASS/FAIL line per criterion.
//
// usage: acceptance <path to lkpack CLI> <scratch directory>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <sys/wait.h>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "lkpack/lkpack.hpp"
#include "lkpack/report.hpp"

using namespace lkpack;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Outcome {
  bool ok = true;
  std::string detail;

  void fail(const std::string& why) {
    if (ok) detail = why;
    ok = false;
  }
};

int failures = 0;

void report(int id, const std::string& title, const Outcome& o, double secs) {
  std::ostringstream line;
  line << (o.ok ? "PASS" : "FAIL") << " criterion " << id << ": " << title;
  line.setf(std::ios::fixed);
  line.precision(1);
  line << " [" << secs << " s]";
  if (!o.detail.empty()) line << " -- " << o.detail;
  std::cout << line.str() << std::endl;
  if (!o.ok) ++failures;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

const std::string kCampaignCorpus = "all_labeled(6)+trees(\xE2\x89\xA4" "9)+random_connected(n=8..12,1000,seed=42)";

int run_cli_verify(const std::string& cli, const std::string& json_path, const std::string& log_path) {
  const std::string cmd = "\"" + cli + "\" verify --theorems all --corpus '" + kCampaignCorpus +
                          "' --json \"" + json_path + "\" > \"" + log_path + "\" 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

Outcome formula_agreement() {
  Outcome o;
  auto expect = [&](const std::string& what, long formula, int oracle) {
    if (formula != oracle) o.fail(what + ": formula " + std::to_string(formula) + ", oracle " + std::to_string(oracle));
  };
  for (int k = 1; k <= 4; ++k) {
    const std::string ks = " k=" + std::to_string(k);
    for (int n = 3; n <= 12; ++n) {
      expect("P_" + std::to_string(n) + ks, closed_form(Family::path, n, k), limited_packing_oracle(make_path(n), k).value);
      expect("C_" + std::to_string(n) + ks, closed_form(Family::cycle, n, k), limited_packing_oracle(make_cycle(n), k).value);
    }
    for (int n = 1; n <= 10; ++n)
      expect("K_" + std::to_string(n) + ks, closed_form(Family::complete, n, k),
             limited_packing_oracle(make_complete(n), k).value);
    for (int m = 1; m <= 9; ++m)
      for (int n = m; m + n <= 10; ++n)
        expect("K_{" + std::to_string(m) + "," + std::to_string(n) + "}" + ks,
               closed_form(Family::complete_bipartite, m, k, n),
               limited_packing_oracle(make_complete_bipartite(m, n), k).value);
  }
  return o;
}

Outcome oracle_bb_agreement() {
  Outcome o;
  std::size_t graphs = 0;
  for_each_labeled_graph(6, [&](const Graph& g) {
    ++graphs;
    for (int k = 1; k <= 3; ++k) {
      const int a = limited_packing_oracle(g, k).value;
      const int b = limited_packing_bb(g, k).value;
      if (a != b) o.fail(emit_graph6(g) + " k=" + std::to_string(k) + ": oracle " + std::to_string(a) + ", bb " + std::to_string(b));
    }
  });
  if (graphs != 32768) o.fail("enumerated " + std::to_string(graphs) + " graphs");
  return o;
}

Outcome construction_certification() {
  Outcome o;
  for (int a = 2; a <= 6; ++a) {
    const Graph g = construct_diam2(a);
    const auto start = Clock::now();
    const int l2 = limited_packing_bb(g, 2).value;
    const double secs = seconds_since(start);
    if (profile(g).diameter != Length(2)) o.fail("diam2(" + std::to_string(a) + ") diameter is not 2");
    if (l2 != a) o.fail("diam2(" + std::to_string(a) + ") has L_2 = " + std::to_string(l2));
    if (secs >= 60) o.fail("diam2(" + std::to_string(a) + ") took " + std::to_string(secs) + " s");
  }
  if (construct_diam2(6).order() != 21) o.fail("diam2(6) does not have 21 vertices");
  std::vector<std::pair<int, int>> cases;
  for (int a = 2; a <= 5; ++a)
    for (int b = a + 1; b <= 2 * a; ++b) cases.emplace_back(a, b);
  cases.emplace_back(8, 12);
  for (auto [a, b] : cases) {
    const Graph t = construct_tree_prescribed(a, b);
    const std::string label = "prescribed(" + std::to_string(a) + "," + std::to_string(b) + ")";
    if (!is_tree(t)) o.fail(label + " is not a tree");
    const int rho0 = open_packing_number(t).value;
    const int l1 = limited_packing_oracle(t, 1).value;
    const int l2 = limited_packing_oracle(t, 2).value;
    if (rho0 != a || l1 != a || l2 != b)
      o.fail(label + ": rho0 " + std::to_string(rho0) + ", L_1 " + std::to_string(l1) + ", L_2 " + std::to_string(l2));
  }
  return o;
}

Outcome ng_tightness() {
  Outcome o;
  for (int n = 3; n <= 8; ++n) {
    const NGReport r = nordhaus_gaddum(make_complete_minus_edge(n), 1);
    if (r.sum != n) o.fail("K_" + std::to_string(n) + "-e: sum " + std::to_string(r.sum));
  }
  const NGReport mixed = nordhaus_gaddum(disjoint_union({make_complete(2), make_complete(1)}), 2);
  if (mixed.sum != 2 * 3 - 1) o.fail("K_2+K_1: sum " + std::to_string(mixed.sum));
  if (mixed.upper_case != NGCase::mixed) o.fail("K_2+K_1 is not the mixed case");
  const NGReport k2 = nordhaus_gaddum(make_complete(2), 2);
  if (k2.sum != 4) o.fail("K_2: sum " + std::to_string(k2.sum));
  return o;
}

Outcome tree_identities() {
  Outcome o;
  std::size_t trees = 0;
  for (int n = 2; n <= 9; ++n)
    for_each_labeled_tree(n, [&](const Graph& t) {
      ++trees;
      if (limited_packing_bb(t, 1).value != domination_number(t).value) o.fail(emit_graph6(t) + ": L_1 != gamma");
      if (open_packing_number(t).value != total_domination_number(t).value) o.fail(emit_graph6(t) + ": rho0 != gamma_t");
    });
  std::size_t cayley = 0;
  for (std::size_t n = 2; n <= 9; ++n) {
    std::size_t c = 1;
    for (std::size_t i = 0; i + 2 < n; ++i) c *= n;
    cayley += c;
  }
  if (trees != cayley) o.fail("enumerated " + std::to_string(trees) + " trees, expected " + std::to_string(cayley));
  return o;
}

Outcome saturation_suite() {
  Outcome o;
  SplitMix64 rng(2024);
  for (int trial = 0; trial < 10000; ++trial) {
    const int n = 1 + static_cast<int>(rng.below(12));
    const Graph g = random_graph(n, 0.1 + 0.8 * rng.unit(), rng);
    const Graph h = random_graph(1 + static_cast<int>(rng.below(6)), 0.5, rng);
    const Graph u = disjoint_union({g, h});
    const int delta = g.max_degree();
    std::vector<int> lk(6);
    for (int k = 1; k <= 5; ++k) lk[k] = limited_packing_bb(g, k).value;
    for (int k = 1; k <= 4; ++k) {
      const std::string tag = emit_graph6(g) + " k=" + std::to_string(k);
      if ((lk[k] == n) != (delta < k)) o.fail(tag + ": saturation");
      if (k <= delta && lk[k + 1] < lk[k] + 1) o.fail(tag + ": monotonicity");
      if (limited_packing_bb(u, k).value != lk[k] + limited_packing_bb(h, k).value) o.fail(tag + ": additivity");
    }
  }
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 3) {
    std::cerr << "usage: acceptance <lkpack CLI> <scratch dir>\n";
    return 2;
  }
  const std::string cli = argv[1];
  const std::string scratch = argv[2];

  auto timed = [](int id, const std::string& title, double limit, const std::function<Outcome()>& body) {
    const auto start = Clock::now();
    Outcome o;
    try {
      o = body();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const double secs = seconds_since(start);
    if (limit > 0 && secs >= limit) o.fail("took " + std::to_string(secs) + " s, limit " + std::to_string(limit) + " s");
    report(id, title, o, secs);
  };

  timed(1, "closed forms agree with the oracle on paths, cycles, complete and complete bipartite graphs", 10,
        formula_agreement);
  timed(2, "oracle and branch-and-bound agree on all 32768 labeled graphs of order 6, k = 1..3", 300,
        oracle_bb_agreement);

  const std::string json_a = scratch + "/acceptance_report_a.json";
  const std::string json_b = scratch + "/acceptance_report_b.json";
  Json campaign;
  timed(3, "full campaign over all_labeled(6)+trees(<=9)+random_connected(n=8..12,1000,seed=42) has no violations",
        1800, [&] {
          Outcome o;
          const int code = run_cli_verify(cli, json_a, scratch + "/acceptance_verify_a.log");
          if (code != 0) o.fail("verify exited with " + std::to_string(code));
          campaign = Json::parse(slurp(json_a));
          if (campaign["verdicts"].size() != theorem_registry().size()) o.fail("report does not cover the registry");
          for (const auto& v : campaign["verdicts"]) {
            if (v["violation_count"] != 0)
              o.fail(v["theorem_id"].get<std::string>() + " has " + v["violation_count"].dump() + " violations");
            if (v["status"] == "vacuous") o.fail(v["theorem_id"].get<std::string>() + " is vacuous");
          }
          return o;
        });

  timed(4, "characterizations pass with at least 50 positive cases each", 0, [&] {
    Outcome o;
    for (const char* id : {"th-lk-eq-k-characterization", "cor-classG", "th-spider-characterization",
                           "th-classT-characterization"}) {
      bool found = false;
      for (const auto& v : campaign.value("verdicts", Json::array())) {
        if (v["theorem_id"] != id) continue;
        found = true;
        if (v["status"] != "pass") o.fail(std::string(id) + " status " + v["status"].get<std::string>());
        if (v["violation_count"] != 0) o.fail(std::string(id) + " has violations");
        if (v["positive_cases"].get<std::uint64_t>() < 50)
          o.fail(std::string(id) + " has only " + v["positive_cases"].dump() + " positive cases");
      }
      if (!found) o.fail(std::string(id) + " missing from the campaign report");
    }
    return o;
  });

  timed(5, "diameter-2 and prescribed-tree constructions have their stated parameters", 0,
        construction_certification);
  timed(6, "Nordhaus-Gaddum tightness examples", 0, ng_tightness);
  timed(7, "L_1 = gamma and rho0 = gamma_t on every labeled tree of order <= 9", 0, tree_identities);
  timed(8, "saturation, monotonicity and additivity on 10^4 random graphs of order <= 12", 0, saturation_suite);

  timed(9, "two identical campaign runs give byte-identical JSON", 0, [&] {
    Outcome o;
    const int code = run_cli_verify(cli, json_b, scratch + "/acceptance_verify_b.log");
    if (code != 0) o.fail("second verify exited with " + std::to_string(code));
    const std::string a = slurp(json_a);
    const std::string b = slurp(json_b);
    if (a.empty()) o.fail("first report is empty");
    if (a != b) o.fail("reports differ");
    return o;
  });

  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << std::endl;
  return failures == 0 ? 0 : 1;
}
