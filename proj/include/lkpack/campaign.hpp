#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "lkpack/bounds.hpp"
#include "lkpack/corpus.hpp"
#include "lkpack/extremal.hpp"
#include "lkpack/graph.hpp"
#include "lkpack/graph6.hpp"
#include "lkpack/profile.hpp"
#include "lkpack/solvers.hpp"

namespace lkpack {

namespace detail {

template <typename... Args>
std::string cat(const Args&... args) {
  std::ostringstream out;
  (out << ... << args);
  return out.str();
}

}  // namespace detail

/// Lazily computed parameters of one graph, shared by every theorem check on it.
class GraphFacts {
 public:
  explicit GraphFacts(Graph g) : g_(std::move(g)) {}

  const Graph& graph() const { return g_; }
  int order() const { return g_.order(); }

  const GraphProfile& profile() {
    if (!profile_) profile_ = lkpack::profile(g_);
    return *profile_;
  }

  const std::string& graph6() {
    if (!graph6_) graph6_ = emit_graph6(g_);
    return *graph6_;
  }

  const Graph& complement() {
    if (!complement_) complement_ = lkpack::complement(g_);
    return *complement_;
  }

  /// Δ of the complement, n - 1 - δ(G).
  int complement_max_degree() { return order() == 0 ? 0 : order() - 1 - g_.min_degree(); }

  int lk(int k) { return memo_lk(lk_, g_, k); }
  int lk_complement(int k) { return memo_lk(lk_co_, complement(), k); }

  int rho0() {
    if (!rho0_) rho0_ = open_packing_number(g_).value;
    return *rho0_;
  }
  int gamma() {
    if (!gamma_) gamma_ = domination_number(g_).value;
    return *gamma_;
  }
  /// γ_t(G), absent when G has an isolated vertex.
  std::optional<int> gamma_t() {
    if (!gamma_t_done_) {
      gamma_t_done_ = true;
      if (order() > 0 && g_.min_degree() > 0) gamma_t_ = total_domination_number(g_).value;
    }
    return gamma_t_;
  }

  const std::optional<ClassGWitness>& class_g_structural() {
    if (!class_g_structural_) class_g_structural_ = recognize_class_G_structural(g_);
    return *class_g_structural_;
  }
  const std::optional<ClassGWitness>& class_g_exhaustive() {
    if (!class_g_exhaustive_) class_g_exhaustive_ = recognize_class_G_exhaustive(g_);
    return *class_g_exhaustive_;
  }

  const std::optional<ClassTWitness>& class_t_structural() {
    if (!class_t_structural_) class_t_structural_ = recognize_class_T_structural(g_, rho0());
    return *class_t_structural_;
  }
  const std::optional<ClassTWitness>& class_t_exhaustive() {
    if (!class_t_exhaustive_) class_t_exhaustive_ = recognize_class_T_exhaustive(g_);
    return *class_t_exhaustive_;
  }

  /// Part sizes (m <= n') when G is a complete bipartite graph K_{m,n'}.
  std::optional<std::pair<int, int>> complete_bipartite_parts() {
    const int n = order();
    if (n < 2 || !profile().connected) return std::nullopt;
    const auto dist = detail::bfs_distances(g_, 0);
    VertexSet side;
    VertexSet other;
    for (int v = 0; v < n; ++v) (dist[v] % 2 == 0 ? side : other).insert(v);
    const int a = side.size();
    const int b = other.size();
    if (b == 0) return std::nullopt;
    if (g_.edge_count() != a * b) return std::nullopt;
    for (int v : side)
      if (g_.neighbours(v) != other) return std::nullopt;
    return std::pair{std::min(a, b), std::max(a, b)};
  }

 private:
  static int memo_lk(std::vector<int>& memo, const Graph& g, int k) {
    if (k >= static_cast<int>(memo.size())) memo.resize(static_cast<std::size_t>(k) + 1, -1);
    int& slot = memo[static_cast<std::size_t>(k)];
    if (slot < 0) slot = limited_packing_bb(g, k).value;
    return slot;
  }

  Graph g_;
  std::optional<GraphProfile> profile_;
  std::optional<std::string> graph6_;
  std::optional<Graph> complement_;
  std::vector<int> lk_;
  std::vector<int> lk_co_;
  std::optional<int> rho0_;
  std::optional<int> gamma_;
  std::optional<int> gamma_t_;
  bool gamma_t_done_ = false;
  std::optional<std::optional<ClassGWitness>> class_g_structural_;
  std::optional<std::optional<ClassGWitness>> class_g_exhaustive_;
  std::optional<std::optional<ClassTWitness>> class_t_structural_;
  std::optional<std::optional<ClassTWitness>> class_t_exhaustive_;
};

// ---------------------------------------------------------------------------
// Theorems and verdicts
// ---------------------------------------------------------------------------

/// Result of checking one statement on one graph (and one k, where relevant).
struct Evaluation {
  bool substantive = false;  // the hypothesis held
  bool positive = false;     // a family member / equality case was seen
  std::vector<std::string> failures;

  template <typename Details>
  void require(bool ok, Details&& details) {
    if (!ok) failures.push_back(details());
  }
};

/// `graph`: checked once per graph at parameters fixed by the statement.
/// `graph_k`: checked once per graph for every k in the campaign range.
/// `construction`: checked on a fixed list of constructed graphs.
enum class Scope { graph, graph_k, construction };

struct ConstructionCase {
  std::string label;
  Graph graph;
  std::function<void(GraphFacts&, Evaluation&)> check;
};

struct Theorem {
  std::string id;
  std::string statement;
  Scope scope = Scope::graph;
  /// k is 0 for Scope::graph.
  std::function<void(GraphFacts&, int k, Evaluation&)> check;
  /// Constructed graphs checked in addition to the corpus (may be empty).
  std::function<std::vector<Graph>()> supplements;
  /// Scope::construction only.
  std::function<std::vector<ConstructionCase>()> cases;
};

enum class VerdictStatus { pass, fail, vacuous };

inline const char* to_string(VerdictStatus s) {
  switch (s) {
    case VerdictStatus::pass: return "pass";
    case VerdictStatus::fail: return "fail";
    case VerdictStatus::vacuous: return "vacuous";
  }
  return "?";
}

struct Violation {
  std::string graph6;
  std::optional<int> k;
  std::string details;

  auto operator<=>(const Violation&) const = default;
};

inline constexpr std::size_t kStoredViolations = 50;

struct TheoremVerdict {
  std::string theorem_id;
  std::uint64_t graphs_checked = 0;
  std::uint64_t substantive_checks = 0;
  std::uint64_t positive_cases = 0;
  std::uint64_t violation_count = 0;
  /// The first kStoredViolations violations, sorted.
  std::vector<Violation> violations;

  VerdictStatus status() const {
    if (violation_count > 0) return VerdictStatus::fail;
    if (substantive_checks == 0) return VerdictStatus::vacuous;
    return VerdictStatus::pass;
  }

  void record(Evaluation&& e, GraphFacts& facts, std::optional<int> k, const std::string& prefix = {}) {
    if (e.substantive) ++substantive_checks;
    if (e.positive) ++positive_cases;
    for (auto& f : e.failures) {
      ++violation_count;
      if (violations.size() < kStoredViolations)
        violations.push_back({facts.graph6(), k, prefix.empty() ? std::move(f) : prefix + ": " + f});
    }
  }
};

namespace detail {

/// Runs a check and turns an escaping exception into a failure.
template <typename Fn>
Evaluation guarded(Fn&& fn) {
  Evaluation e;
  try {
    fn(e);
  } catch (const std::exception& ex) {
    e.failures.push_back(std::string("evaluation error: ") + ex.what());
  }
  return e;
}

inline std::string set_string(VertexSet s) {
  std::string out = "{";
  bool first = true;
  for (int v : s) {
    if (!first) out += ",";
    out += std::to_string(v);
    first = false;
  }
  return out + "}";
}

inline bool is_path_graph(GraphFacts& f) { return f.profile().is_tree && f.profile().max_degree <= 2; }

inline bool is_cycle_graph(GraphFacts& f) {
  const auto& p = f.profile();
  return f.order() >= 3 && p.connected && p.max_degree == 2 && p.min_degree == 2;
}

inline bool is_complete_graph(GraphFacts& f) {
  const int n = f.order();
  return n >= 1 && f.graph().edge_count() == n * (n - 1) / 2;
}

inline std::vector<Graph> paths(int lo, int hi) {
  std::vector<Graph> out;
  for (int n = lo; n <= hi; ++n) out.push_back(make_path(n));
  return out;
}

inline std::vector<Graph> spiders(int max_order) {
  std::vector<Graph> out;
  for (int t = 0; 1 + 2 * t <= max_order; ++t)
    for (int s = 0; 1 + 2 * t + s <= max_order; ++s)
      if (t + s >= 1) out.push_back(make_spider(t, s));
  return out;
}

// --- individual statements --------------------------------------------------

using Check = std::function<void(GraphFacts&, int, Evaluation&)>;

inline void check_path_formula(GraphFacts& f, int k, Evaluation& e) {
  if (!is_path_graph(f)) return;
  e.substantive = e.positive = true;
  const long want = closed_form(Family::path, f.order(), k);
  e.require(f.lk(k) == want, [&] { return cat("L_k(P_", f.order(), ") = ", f.lk(k), ", formula gives ", want); });
}

inline void check_cycle_formula(GraphFacts& f, int k, Evaluation& e) {
  if (!is_cycle_graph(f)) return;
  e.substantive = e.positive = true;
  const long want = closed_form(Family::cycle, f.order(), k);
  e.require(f.lk(k) == want, [&] { return cat("L_k(C_", f.order(), ") = ", f.lk(k), ", formula gives ", want); });
}

inline void check_complete_formula(GraphFacts& f, int k, Evaluation& e) {
  if (!is_complete_graph(f)) return;
  e.substantive = e.positive = true;
  const long want = closed_form(Family::complete, f.order(), k);
  e.require(f.lk(k) == want, [&] { return cat("L_k(K_", f.order(), ") = ", f.lk(k), ", formula gives ", want); });
}

inline void check_bipartite_formula(GraphFacts& f, int k, Evaluation& e) {
  const auto parts = f.complete_bipartite_parts();
  if (!parts) return;
  e.substantive = e.positive = true;
  const long want = closed_form(Family::complete_bipartite, parts->first, k, parts->second);
  e.require(f.lk(k) == want, [&] {
    return cat("L_k(K_{", parts->first, ",", parts->second, "}) = ", f.lk(k), ", formula gives ", want);
  });
}

inline void check_kgamma(GraphFacts& f, int k, Evaluation& e) {
  if (f.order() < 1) return;
  e.substantive = true;
  e.positive = f.lk(k) == k * f.gamma();
  e.require(f.lk(k) <= k * f.gamma(), [&] { return cat("L_k = ", f.lk(k), " > k*gamma = ", k * f.gamma()); });
}

inline void check_delta_upper(GraphFacts& f, int k, Evaluation& e) {
  const int n = f.order();
  if (n < 1) return;
  e.substantive = true;
  const long lhs = static_cast<long>(f.lk(k)) * (f.profile().min_degree + 1);
  e.positive = lhs == static_cast<long>(k) * n;
  e.require(lhs <= static_cast<long>(k) * n, [&] {
    return cat("L_k = ", f.lk(k), " exceeds k*n/(delta+1) = ", k * n, "/", f.profile().min_degree + 1);
  });
}

inline void check_monotone_chain(GraphFacts& f, int k, Evaluation& e) {
  if (f.order() < 1) return;
  e.substantive = true;
  const int lk = f.lk(k);
  const int next = f.lk(k + 1);
  e.require(lk <= next, [&] { return cat("L_k = ", lk, " > L_{k+1} = ", next); });
  if (k <= f.profile().max_degree) {
    e.require(next >= lk + 1, [&] { return cat("k <= Delta but L_{k+1} = ", next, " < L_k + 1 = ", lk + 1); });
    e.require(lk >= f.lk(1) + k - 1, [&] { return cat("L_k = ", lk, " < L_1 + k - 1 = ", f.lk(1) + k - 1); });
    e.positive = next == lk + 1;
  }
}

inline void check_l1_eq_1_iff_diam2(GraphFacts& f, int, Evaluation& e) {
  if (f.order() < 1) return;
  e.substantive = true;
  const bool diam2 = f.profile().diameter.at_most(2);
  e.positive = diam2;
  e.require((f.lk(1) == 1) == diam2, [&] {
    return cat("L_1 = ", f.lk(1), " but diam = ", f.profile().diameter.to_string());
  });
}

inline void check_open_packing_diam2(GraphFacts& f, int, Evaluation& e) {
  if (f.order() < 1) return;
  const auto& p = f.profile();
  const bool diam2 = p.diameter.at_most(2);
  if (diam2) {
    e.substantive = true;
    e.require(f.rho0() <= 2, [&] { return cat("diam <= 2 but rho0 = ", f.rho0()); });
  }
  if (f.order() >= 3) {
    e.substantive = true;
    const bool rhs = diam2 && p.every_edge_on_triangle;
    e.positive = rhs;
    e.require((f.rho0() == 1) == rhs, [&] {
      return cat("rho0 = ", f.rho0(), ", diam = ", p.diameter.to_string(),
                 ", every edge on a triangle = ", p.every_edge_on_triangle);
    });
  }
}

inline void check_rho_eq_gammat_trees(GraphFacts& f, int, Evaluation& e) {
  if (!f.profile().is_tree || f.order() < 2) return;
  e.substantive = e.positive = true;
  e.require(f.rho0() == *f.gamma_t(), [&] { return cat("rho0 = ", f.rho0(), ", gamma_t = ", *f.gamma_t()); });
}

inline void check_l1_eq_gamma_trees(GraphFacts& f, int, Evaluation& e) {
  if (!f.profile().is_tree) return;
  e.substantive = e.positive = true;
  e.require(f.lk(1) == f.gamma(), [&] { return cat("L_1 = ", f.lk(1), ", gamma = ", f.gamma()); });
}

inline void check_diam_lower_k12(GraphFacts& f, int k, Evaluation& e) {
  const auto& p = f.profile();
  if (k > 2 || f.order() < 1 || !p.connected) return;
  e.substantive = true;
  const long bound = ceil_div(k + static_cast<long>(k) * p.diameter.value(), 3);
  e.positive = f.lk(k) == bound;
  e.require(f.lk(k) >= bound, [&] { return cat("L_k = ", f.lk(k), " < ceil((k + k*diam)/3) = ", bound); });
}

inline void check_ng_l2(GraphFacts& f, int, Evaluation& e) {
  const int n = f.order();
  if (n < 1) return;
  e.substantive = true;
  const int sum = f.lk(2) + f.lk_complement(2);
  e.positive = sum == n + 2;
  e.require(sum <= n + 2, [&] { return cat("L_2(G) + L_2(co-G) = ", sum, " > n + 2 = ", n + 2); });
}

inline void check_l1_maxdeg_lower(GraphFacts& f, int, Evaluation& e) {
  const long n = f.order();
  if (n < 1) return;
  e.substantive = true;
  const long d = f.profile().max_degree;
  const long lhs = static_cast<long>(f.lk(1)) * (d * d + 1);
  e.positive = lhs == n;
  e.require(lhs >= n, [&] { return cat("L_1 = ", f.lk(1), " < n/(Delta^2 + 1) = ", n, "/", d * d + 1); });
}

inline void check_small_order(GraphFacts& f, int k, Evaluation& e) {
  const int n = f.order();
  if (n < 1) return;
  const int delta = f.profile().max_degree;
  if (n <= k) {
    e.substantive = e.positive = true;
    e.require(f.lk(k) == n, [&] { return cat("n <= k but L_k = ", f.lk(k), " != n = ", n); });
  }
  // Saturation: L_k = n exactly when Δ < k.
  e.substantive = true;
  if (delta < k) e.positive = true;
  e.require((f.lk(k) == n) == (delta < k), [&] {
    return cat("L_k = ", f.lk(k), ", n = ", n, ", Delta = ", delta, ", k = ", k);
  });
}

inline void check_order_kplus1(GraphFacts& f, int k, Evaluation& e) {
  if (f.order() != k + 1) return;
  e.substantive = true;
  const int delta = f.profile().max_degree;
  const int want = delta == k ? k : k + 1;
  e.positive = delta == k;
  e.require(f.lk(k) == want, [&] { return cat("n = k + 1, Delta = ", delta, ", L_k = ", f.lk(k), " != ", want); });
}

inline void check_lk_geq_k(GraphFacts& f, int k, Evaluation& e) {
  if (f.order() < k + 2) return;
  e.substantive = true;
  e.positive = f.lk(k) == k;
  e.require(f.lk(k) >= k, [&] { return cat("n >= k + 2 but L_k = ", f.lk(k), " < k"); });
}

inline void check_lk_eq_k(GraphFacts& f, int k, Evaluation& e) {
  if (f.order() < 1) return;
  e.substantive = true;
  const bool exact = f.lk(k) == k;
  const bool predicted = check_Lk_equals_k(f.graph(), k);
  e.positive = exact;
  e.require(exact == predicted, [&] {
    return cat("L_k = ", f.lk(k), " but the subset condition says ", predicted ? "L_k = k" : "L_k != k");
  });
}

inline void check_diam_le_2(GraphFacts& f, int k, Evaluation& e) {
  if (f.order() < k + 1 || f.lk(k) != k) return;
  e.substantive = e.positive = true;
  e.require(f.profile().diameter.at_most(2),
            [&] { return cat("L_k = k but diam = ", f.profile().diameter.to_string()); });
}

inline void check_diam_lower_k3(GraphFacts& f, int k, Evaluation& e) {
  const auto& p = f.profile();
  if (k < 3 || f.order() < 1 || !p.connected || p.max_degree < k) return;
  e.substantive = true;
  const int bound = p.diameter.value() + k - 2;
  e.positive = f.lk(k) == bound;
  e.require(f.lk(k) >= bound, [&] { return cat("L_k = ", f.lk(k), " < diam + k - 2 = ", bound); });
}

inline void check_girth_l1(GraphFacts& f, int, Evaluation& e) {
  const auto& p = f.profile();
  if (!p.girth.finite()) return;
  e.substantive = true;
  const int bound = p.girth.value() / 3;
  e.positive = f.lk(1) == bound;
  e.require(f.lk(1) >= bound, [&] { return cat("L_1 = ", f.lk(1), " < floor(g/3) = ", bound); });
}

inline void check_girth_l2_lk(GraphFacts& f, int k, Evaluation& e) {
  const auto& p = f.profile();
  if (!p.girth.finite()) return;
  const int g = p.girth.value();
  if (k == 2) {
    e.substantive = true;
    e.positive = f.lk(2) == 2 * g / 3;
    e.require(f.lk(2) >= 2 * g / 3, [&] { return cat("L_2 = ", f.lk(2), " < floor(2g/3) = ", 2 * g / 3); });
  } else if (k >= 3 && p.max_degree >= k) {
    e.substantive = true;
    e.positive = f.lk(k) == g + k - 3;
    e.require(f.lk(k) >= g + k - 3, [&] { return cat("L_k = ", f.lk(k), " < g + k - 3 = ", g + k - 3); });
  }
}

inline void check_order_degree_upper(GraphFacts& f, int k, Evaluation& e) {
  const int n = f.order();
  if (n < 1) return;
  e.substantive = true;
  const int bound = n + k - 1 - f.profile().max_degree;
  e.positive = f.lk(k) == bound;
  e.require(f.lk(k) <= bound, [&] { return cat("L_k = ", f.lk(k), " > n + k - 1 - Delta = ", bound); });
}

inline void check_class_g(GraphFacts& f, int, Evaluation& e) {
  const int n = f.order();
  if (n < 1) return;
  e.substantive = true;
  const int bound = n + 1 - f.profile().max_degree;
  const int l2 = f.lk(2);
  e.require(l2 <= bound, [&] { return cat("L_2 = ", l2, " > n + 1 - Delta = ", bound); });
  std::optional<ClassGWitness> witness = f.class_g_structural();
  if (!witness && n <= kExhaustiveFallbackOrder) {
    witness = f.class_g_exhaustive();
    e.require(!witness, [&] {
      return cat("exhaustive search found A0 = ", set_string(witness->a0), ", B0 = ", set_string(witness->b0),
                 " missed by the structural search");
    });
  }
  const bool member = witness.has_value();
  e.positive = l2 == bound;
  if (witness)
    e.require(is_class_G_witness(f.graph(), *witness), [] { return std::string("invalid class G witness"); });
  e.require(member == (l2 == bound), [&] {
    return cat("L_2 = ", l2, ", n + 1 - Delta = ", bound, ", class G membership ", member);
  });
}

inline void check_regular_half(GraphFacts& f, int k, Evaluation& e) {
  const auto& p = f.profile();
  if (f.order() < 1 || !p.regular || k > p.max_degree) return;
  e.substantive = true;
  const int n = f.order();
  const int d = p.max_degree;
  if (f.lk(k) == n + k - 1 - d) {
    e.positive = true;
    e.require(2 * d >= n, [&] { return cat("L_k = n + k - 1 - d = ", f.lk(k), " with d = ", d, " < n/2"); });
  }
}

inline void check_ng_lower(GraphFacts& f, int k, Evaluation& e) {
  const int n = f.order();
  if (n < k) return;
  e.substantive = true;
  const int sum = f.lk(k) + f.lk_complement(k);
  e.require(sum >= 2 * k, [&] { return cat("L_k(G) + L_k(co-G) = ", sum, " < 2k"); });
  const bool tight = sum == 2 * k;
  const bool predicted = ng_lower_equality_condition(f.graph(), k);
  e.positive = tight;
  e.require(tight == predicted, [&] {
    return cat("sum = ", sum, ", 2k = ", 2 * k, ", literal equality condition ", predicted);
  });
}

inline void check_ng_upper(GraphFacts& f, int k, Evaluation& e) {
  const int n = f.order();
  if (n < 1) return;
  e.substantive = true;
  const auto [bound, which] = ng_upper_bound(n, k, f.profile().max_degree, f.complement_max_degree());
  const int sum = f.lk(k) + f.lk_complement(k);
  e.positive = sum == bound;
  e.require(sum <= bound, [&, bound = bound, which = which] {
    return cat("L_k(G) + L_k(co-G) = ", sum, " > ", bound, " (", to_string(which), ")");
  });
}

inline void check_45_upper(GraphFacts& f, int, Evaluation& e) {
  const int n = f.order();
  if (n < 3 || !f.profile().connected) return;
  e.substantive = true;
  e.positive = 5 * f.lk(2) == 4 * n;
  e.require(5 * f.lk(2) <= 4 * n, [&] { return cat("L_2 = ", f.lk(2), " > 4n/5 with n = ", n); });
}

inline void check_kk1_upper(GraphFacts& f, int k, Evaluation& e) {
  const int n = f.order();
  if (n < 1 || !f.profile().connected || f.profile().min_degree < k) return;
  e.substantive = true;
  e.positive = (k + 1) * f.lk(k) == k * n;
  e.require((k + 1) * f.lk(k) <= k * n, [&] { return cat("L_k = ", f.lk(k), " > kn/(k+1) with n = ", n); });
}

inline void check_tree_deltaprime(GraphFacts& f, int, Evaluation& e) {
  const auto& p = f.profile();
  if (!p.is_tree || !p.min_nonleaf_degree || *p.min_nonleaf_degree < 4) return;
  e.substantive = true;
  const int n = f.order();
  e.positive = 3 * f.lk(2) == 2 * n;
  e.require(3 * f.lk(2) <= 2 * n, [&] { return cat("L_2 = ", f.lk(2), " > 2n/3 with n = ", n); });
}

inline void check_maxdeg_n1(GraphFacts& f, int, Evaluation& e) {
  const int n = f.order();
  if (n < 2 || f.profile().max_degree != n - 1) return;
  e.substantive = e.positive = true;
  e.require(f.lk(2) == 2, [&] { return cat("Delta = n - 1 but L_2 = ", f.lk(2)); });
}

inline void check_cutvertex_diam2(GraphFacts& f, int, Evaluation& e) {
  const auto& p = f.profile();
  if (!(p.diameter == Length(2)) || p.cut_vertices.empty()) return;
  e.substantive = e.positive = true;
  e.require(f.lk(2) == 2, [&] { return cat("diam = 2 with a cut vertex but L_2 = ", f.lk(2)); });
}

inline void check_improved_diam_upper(GraphFacts& f, int, Evaluation& e) {
  const auto& p = f.profile();
  const int n = f.order();
  if (n < 1 || !p.connected) return;
  e.substantive = true;
  const long bound = n + 1 - p.max_degree - floor_div(p.diameter.value() - 4, 3);
  e.positive = f.lk(2) == bound;
  e.require(f.lk(2) <= bound, [&] { return cat("L_2 = ", f.lk(2), " > n + 1 - Delta - floor((diam-4)/3) = ", bound); });
}

inline void check_openpack_sandwich(GraphFacts& f, int, Evaluation& e) {
  if (f.order() < 1) return;
  e.substantive = true;
  const int l1 = f.lk(1);
  const int rho0 = f.rho0();
  e.positive = rho0 == 2 * l1;
  e.require(l1 <= rho0 && rho0 <= 2 * l1, [&] { return cat("L_1 = ", l1, ", rho0 = ", rho0); });
}

inline void check_l1_l2_sandwich(GraphFacts& f, int, Evaluation& e) {
  if (f.graph().edge_count() == 0) return;
  e.substantive = true;
  const long l1 = f.lk(1);
  const long l2 = f.lk(2);
  const long dmax = f.profile().max_degree;
  const long dmin = f.profile().min_degree;
  e.positive = l2 == l1 + 1;
  e.require(l1 + 1 <= l2, [&] { return cat("L_2 = ", l2, " < L_1 + 1 = ", l1 + 1); });
  e.require(l2 * (dmin + 1) <= 2 * (dmax * dmax + 1) * l1, [&] {
    return cat("L_2 = ", l2, " > 2(Delta^2 + 1)/(delta + 1) * L_1 with Delta = ", dmax, ", delta = ", dmin,
               ", L_1 = ", l1);
  });
}

inline void check_spider(GraphFacts& f, int, Evaluation& e) {
  if (!f.profile().is_tree || f.order() < 2) return;
  e.substantive = true;
  const int l1 = f.lk(1);
  const int l2 = f.lk(2);
  e.require(l1 + 1 <= l2 && l2 <= 2 * l1, [&] { return cat("L_1 = ", l1, ", L_2 = ", l2); });
  const auto shape = recognize_spider(f.graph());
  const bool small = shape && shape->t < f.profile().max_degree;
  e.positive = l2 == l1 + 1;
  e.require(small == (l2 == l1 + 1), [&] {
    return cat("L_1 = ", l1, ", L_2 = ", l2, ", spider ",
               shape ? cat("t = ", shape->t, ", s = ", shape->s) : std::string("none"), ", Delta = ",
               f.profile().max_degree);
  });
  e.require((l2 == 2 * l1) == (l2 == 2 * f.gamma()),
            [&] { return cat("L_2 = ", l2, ", L_1 = ", l1, ", gamma = ", f.gamma()); });
}

inline void check_class_t(GraphFacts& f, int, Evaluation& e) {
  if (!f.profile().is_tree || f.order() < 2) return;
  e.substantive = true;
  const int rho0 = f.rho0();
  const int l2 = f.lk(2);
  e.require(rho0 <= l2 && l2 <= 2 * rho0, [&] { return cat("rho0 = ", rho0, ", L_2 = ", l2); });
  std::optional<ClassTWitness> witness = f.class_t_structural();
  if (!witness && f.order() <= kExhaustiveFallbackOrder) {
    witness = f.class_t_exhaustive();
    e.require(!witness, [&] {
      return cat("exhaustive search found S0 = ", set_string(witness->s0), " missed by the structural search");
    });
  }
  const bool member = witness.has_value();
  e.positive = rho0 == l2;
  if (witness)
    e.require(is_class_T_witness(f.graph(), *witness), [] { return std::string("invalid class T witness"); });
  e.require(member == (rho0 == l2),
            [&] { return cat("rho0 = ", rho0, ", L_2 = ", l2, ", class T membership ", member); });
}

inline std::vector<ConstructionCase> diam2_cases() {
  std::vector<ConstructionCase> out;
  for (int a = 2; a <= 6; ++a) {
    out.push_back({cat("a=", a), construct_diam2(a), [a](GraphFacts& f, Evaluation& e) {
                     e.substantive = e.positive = true;
                     e.require(f.profile().diameter == Length(2),
                               [&] { return cat("diam = ", f.profile().diameter.to_string()); });
                     e.require(f.lk(2) == a, [&] { return cat("L_2 = ", f.lk(2), ", expected ", a); });
                   }});
  }
  return out;
}

inline std::vector<std::pair<int, int>> prescribed_parameters() {
  std::vector<std::pair<int, int>> out;
  for (int a = 2; a <= 5; ++a)
    for (int b = a + 1; b <= 2 * a; ++b) out.emplace_back(a, b);
  out.emplace_back(8, 12);
  return out;
}

inline std::vector<ConstructionCase> prescribed_cases() {
  std::vector<ConstructionCase> out;
  for (auto [a, b] : prescribed_parameters()) {
    out.push_back({cat("a=", a, ",b=", b), construct_tree_prescribed(a, b),
                   [a = a, b = b](GraphFacts& f, Evaluation& e) {
                     e.substantive = e.positive = true;
                     e.require(f.profile().is_tree, [] { return std::string("not a tree"); });
                     e.require(f.rho0() == a && f.lk(1) == a && f.lk(2) == b, [&] {
                       return cat("rho0 = ", f.rho0(), ", L_1 = ", f.lk(1), ", L_2 = ", f.lk(2), ", expected ", a,
                                  ", ", a, ", ", b);
                     });
                   }});
  }
  return out;
}

inline std::vector<Graph> lk_eq_k_supplements() {
  std::vector<Graph> out;
  for (int n = 1; n <= 10; ++n) out.push_back(make_complete(n));
  for (int n = 3; n <= 10; ++n) out.push_back(make_complete_minus_edge(n));
  for (int n = 2; n <= 12; ++n) out.push_back(make_star(n));
  for (int a = 2; a <= 4; ++a) out.push_back(construct_diam2(a));
  return out;
}

inline std::vector<Graph> class_g_supplements() {
  std::vector<Graph> out;
  for (int n = 2; n <= 12; ++n) out.push_back(make_star(n));
  for (int n = 2; n <= 10; ++n) out.push_back(make_complete(n));
  for (int a = 2; a <= 5; ++a) out.push_back(construct_diam2(a));
  for (auto [a, b] : prescribed_parameters())
    if (b < 2 * a && a + b - 1 <= 12) out.push_back(construct_tree_prescribed(a, b));
  for (int t = 0; t <= 5; ++t)
    for (int s = 1; s <= 4; ++s) out.push_back(make_spider(t, s));
  return out;
}

inline std::vector<Graph> class_t_supplements() {
  std::vector<Graph> out;
  for (int n = 2; n <= 12; ++n) out.push_back(make_star(n));
  for (auto& g : spiders(12)) out.push_back(std::move(g));
  return out;
}

inline std::vector<Graph> bipartite_supplements() {
  std::vector<Graph> out;
  for (int total = 2; total <= 12; ++total)
    for (int m = 1; 2 * m <= total; ++m) out.push_back(make_complete_bipartite(m, total - m));
  return out;
}

inline std::vector<Graph> complete_supplements() {
  std::vector<Graph> out;
  for (int n = 1; n <= 12; ++n) out.push_back(make_complete(n));
  return out;
}

inline std::vector<Graph> cycle_supplements() {
  std::vector<Graph> out;
  for (int n = 3; n <= 16; ++n) out.push_back(make_cycle(n));
  return out;
}

}  // namespace detail

/// Every statement the harness knows, in a fixed order.
inline const std::vector<Theorem>& theorem_registry() {
  using namespace detail;
  static const std::vector<Theorem> registry = [] {
    std::vector<Theorem> r;
    auto add = [&](std::string id, std::string statement, Scope scope, Check check,
                   std::function<std::vector<Graph>()> supplements = {}) {
      r.push_back(Theorem{std::move(id), std::move(statement), scope, std::move(check), std::move(supplements), {}});
    };
    add("lem-path-formula", "L_k(P_n) = ceil(kn/3) for k <= 2 and n for k >= 3", Scope::graph_k,
        check_path_formula, [] { return paths(1, 16); });
    add("lem-cycle-formula", "L_k(C_n) = floor(kn/3) for k <= 2 and n for k >= 3", Scope::graph_k,
        check_cycle_formula, cycle_supplements);
    add("lem-complete-formula", "L_k(K_n) = min(k, n)", Scope::graph_k, check_complete_formula,
        complete_supplements);
    add("lem-bipartite-formula", "L_k(K_{m,n}) = 1 for k = 1, min(k-1, m) + min(k-1, n) otherwise",
        Scope::graph_k, check_bipartite_formula, bipartite_supplements);
    add("lem-kgamma", "L_k(G) <= k*gamma(G)", Scope::graph_k, check_kgamma);
    add("lem-delta-upper", "L_k(G) <= kn/(delta(G) + 1)", Scope::graph_k, check_delta_upper);
    add("lem-monotone-chain",
        "L_k <= L_{k+1}; for k <= Delta also L_{k+1} >= L_k + 1 and L_k >= L_1 + k - 1", Scope::graph_k,
        check_monotone_chain);
    add("lem-l1-eq-1-iff-diam2", "L_1(G) = 1 iff diam(G) <= 2", Scope::graph, check_l1_eq_1_iff_diam2);
    add("lem-open-packing-diam2",
        "diam(G) <= 2 implies rho0(G) <= 2; for n >= 3, rho0(G) = 1 iff diam(G) <= 2 and every edge lies on a "
        "triangle",
        Scope::graph, check_open_packing_diam2);
    add("lem-rho-eq-gammat-trees", "rho0(T) = gamma_t(T) for trees of order >= 2", Scope::graph,
        check_rho_eq_gammat_trees);
    add("lem-l1-eq-gamma-trees", "L_1(T) = gamma(T) for trees", Scope::graph, check_l1_eq_gamma_trees);
    add("lem-diam-lower-k12", "L_k(G) >= ceil((k + k*diam(G))/3) for connected G and k in {1,2}", Scope::graph_k,
        check_diam_lower_k12);
    add("lem-ng-l2-n-plus-2", "L_2(G) + L_2(co-G) <= n + 2", Scope::graph, check_ng_l2);
    add("lem-l1-maxdeg-lower", "L_1(G) >= n/(Delta(G)^2 + 1)", Scope::graph, check_l1_maxdeg_lower);
    add("prop-small-order", "L_k(G) = n when n <= k; L_k(G) = n iff Delta(G) < k", Scope::graph_k,
        check_small_order);
    add("prop-order-kplus1", "for n = k + 1, L_k(G) = k if Delta(G) = k and k + 1 otherwise", Scope::graph_k,
        check_order_kplus1);
    add("prop-lk-geq-k", "L_k(G) >= k for n >= k + 2", Scope::graph_k, check_lk_geq_k);
    add("th-lk-eq-k-characterization",
        "L_k(G) = k iff n = k, or n = k + 1 and Delta = k, or every (k+1)-subset has a vertex of inner degree k "
        "or a common neighbour",
        Scope::graph_k, check_lk_eq_k, lk_eq_k_supplements);
    add("cor-diam-le-2", "n >= k + 1 and L_k(G) = k imply diam(G) <= 2", Scope::graph_k, check_diam_le_2,
        lk_eq_k_supplements);
    add("th-diam-lower-k3", "L_k(G) >= diam(G) + k - 2 for connected G with Delta >= k >= 3", Scope::graph_k,
        check_diam_lower_k3);
    add("th-girth-l1", "L_1(G) >= floor(g(G)/3)", Scope::graph, check_girth_l1, cycle_supplements);
    add("th-girth-l2-lk", "L_2(G) >= floor(2g(G)/3); L_k(G) >= g(G) + k - 3 for Delta >= k >= 3", Scope::graph_k,
        check_girth_l2_lk, cycle_supplements);
    add("th-order-degree-upper", "L_k(G) <= n + k - 1 - Delta(G)", Scope::graph_k, check_order_degree_upper);
    add("cor-classG", "L_2(G) <= n + 1 - Delta(G), with equality iff G is in class G", Scope::graph,
        check_class_g, class_g_supplements);
    add("cor-regular-half", "d-regular G with k <= d and L_k(G) = n + k - 1 - d has d >= n/2", Scope::graph_k,
        check_regular_half, complete_supplements);
    add("prop-ng-lower", "L_k(G) + L_k(co-G) >= 2k for n >= k, equality iff the stated subset condition",
        Scope::graph_k, check_ng_lower);
    add("th-ng-upper", "L_k(G) + L_k(co-G) <= 2n, 2n - 1 or n + 2k - 2 by degree case", Scope::graph_k,
        check_ng_upper);
    add("lem-45-upper", "L_2(G) <= 4n/5 for connected G with n >= 3", Scope::graph, check_45_upper);
    add("lem-kk1-upper", "L_k(G) <= kn/(k + 1) for connected G with delta >= k", Scope::graph_k, check_kk1_upper,
        cycle_supplements);
    add("th-tree-deltaprime", "L_2(T) <= 2n/3 for trees with minimum non-leaf degree >= 4", Scope::graph,
        check_tree_deltaprime);
    r.push_back(Theorem{"th-diam2-construction", "construct_diam2(a) has diameter 2 and L_2 = a",
                        Scope::construction, {}, {}, diam2_cases});
    add("lem-maxdeg-n1", "Delta(G) = n - 1 with n >= 2 implies L_2(G) = 2", Scope::graph, check_maxdeg_n1);
    add("lem-cutvertex-diam2", "diam(G) = 2 and a cut vertex imply L_2(G) = 2", Scope::graph,
        check_cutvertex_diam2);
    add("th-improved-diam-upper", "L_2(G) <= n + 1 - Delta(G) - floor((diam(G) - 4)/3) for connected G",
        Scope::graph, check_improved_diam_upper);
    add("lem-openpack-sandwich", "L_1(G) <= rho0(G) <= 2 L_1(G)", Scope::graph, check_openpack_sandwich);
    add("prop-l1-l2-sandwich", "L_1 + 1 <= L_2 <= 2(Delta^2 + 1)/(delta + 1) * L_1 for graphs with edges",
        Scope::graph, check_l1_l2_sandwich);
    add("th-spider-characterization",
        "L_1(T) + 1 <= L_2(T) <= 2 L_1(T); L_2 = L_1 + 1 iff T is a t-spider with t < Delta; L_2 = 2 L_1 iff "
        "L_2 = 2 gamma",
        Scope::graph, check_spider, [] { return spiders(14); });
    add("th-classT-characterization", "rho0(T) <= L_2(T) <= 2 rho0(T), with equality iff T is in class T",
        Scope::graph, check_class_t, class_t_supplements);
    r.push_back(Theorem{"th-prescribed-construction",
                        "construct_tree_prescribed(a, b) has rho0 = L_1 = a and L_2 = b", Scope::construction, {},
                        {}, prescribed_cases});
    return r;
  }();
  return registry;
}

inline const Theorem& find_theorem(std::string_view id) {
  for (const auto& t : theorem_registry())
    if (t.id == id) return t;
  throw std::invalid_argument("unknown theorem id \"" + std::string(id) + "\"");
}

/// "all" or a comma-separated list of ids.
inline std::vector<const Theorem*> select_theorems(std::string_view ids) {
  std::vector<const Theorem*> out;
  if (ids == "all") {
    for (const auto& t : theorem_registry()) out.push_back(&t);
    return out;
  }
  for (auto id : detail::split(ids, ','))
    if (!id.empty()) out.push_back(&find_theorem(id));
  if (out.empty()) throw std::invalid_argument("no theorem ids given");
  return out;
}

/// "1..3", "2" or "1,2,4".
inline std::vector<int> parse_k_range(std::string_view text) {
  std::vector<int> ks;
  auto number = [&](std::string_view s) {
    int v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size() || v < 1)
      throw std::invalid_argument("bad k value \"" + std::string(s) + "\"");
    return v;
  };
  const auto dots = text.find("..");
  if (dots != std::string_view::npos) {
    const int lo = number(text.substr(0, dots));
    const int hi = number(text.substr(dots + 2));
    if (hi < lo) throw std::invalid_argument("empty k range");
    for (int k = lo; k <= hi; ++k) ks.push_back(k);
  } else {
    for (auto part : detail::split(text, ',')) ks.push_back(number(part));
  }
  std::sort(ks.begin(), ks.end());
  ks.erase(std::unique(ks.begin(), ks.end()), ks.end());
  return ks;
}

struct CampaignResult {
  std::uint64_t corpus_graphs = 0;
  std::vector<TheoremVerdict> verdicts;

  bool passed() const {
    return std::none_of(verdicts.begin(), verdicts.end(),
                        [](const TheoremVerdict& v) { return v.status() == VerdictStatus::fail; });
  }
};

namespace detail {

inline void evaluate_on(const Theorem& t, GraphFacts& facts, const std::vector<int>& ks, TheoremVerdict& v) {
  ++v.graphs_checked;
  if (t.scope == Scope::graph) {
    v.record(guarded([&](Evaluation& e) { t.check(facts, 0, e); }), facts, std::nullopt);
    return;
  }
  for (int k : ks) v.record(guarded([&](Evaluation& e) { t.check(facts, k, e); }), facts, k);
}

inline void evaluate_construction(const Theorem& t, TheoremVerdict& v) {
  for (auto& c : t.cases()) {
    GraphFacts facts(c.graph);
    ++v.graphs_checked;
    v.record(guarded([&](Evaluation& e) { c.check(facts, e); }), facts, 2, c.label);
  }
}

}  // namespace detail

/// Check every theorem on every corpus graph (n >= 1) for each k in `ks`, then
/// on its supplements and constructions. Single-threaded and deterministic.
inline CampaignResult run_campaign(const std::vector<const Theorem*>& theorems, const Corpus& corpus,
                                   const std::vector<int>& ks, bool with_supplements = true) {
  if (ks.empty()) throw std::invalid_argument("empty k range");
  CampaignResult result;
  result.verdicts.resize(theorems.size());
  for (std::size_t i = 0; i < theorems.size(); ++i) result.verdicts[i].theorem_id = theorems[i]->id;

  corpus.for_each([&](const Graph& g) {
    if (g.order() == 0) return;
    ++result.corpus_graphs;
    GraphFacts facts(g);
    for (std::size_t i = 0; i < theorems.size(); ++i)
      if (theorems[i]->scope != Scope::construction)
        detail::evaluate_on(*theorems[i], facts, ks, result.verdicts[i]);
  });

  for (std::size_t i = 0; i < theorems.size(); ++i) {
    const Theorem& t = *theorems[i];
    if (t.scope == Scope::construction) {
      detail::evaluate_construction(t, result.verdicts[i]);
    } else if (with_supplements && t.supplements) {
      for (const Graph& g : t.supplements()) {
        GraphFacts facts(g);
        detail::evaluate_on(t, facts, ks, result.verdicts[i]);
      }
    }
  }
  for (auto& v : result.verdicts) std::sort(v.violations.begin(), v.violations.end());
  return result;
}

/// Re-check one theorem on one graph. For Scope::graph `k` is ignored; for
/// constructions every case whose graph matches is re-run.
inline Evaluation replay(const Theorem& t, const Graph& g, std::optional<int> k) {
  GraphFacts facts(g);
  if (t.scope == Scope::construction) {
    Evaluation merged;
    bool matched = false;
    for (auto& c : t.cases()) {
      if (!(c.graph == g)) continue;
      matched = true;
      Evaluation e = detail::guarded([&](Evaluation& ev) { c.check(facts, ev); });
      merged.substantive |= e.substantive;
      merged.positive |= e.positive;
      for (auto& f : e.failures) merged.failures.push_back(c.label + ": " + f);
    }
    if (!matched) throw std::invalid_argument("graph is not one of the constructions of " + t.id);
    return merged;
  }
  if (t.scope == Scope::graph_k && !k) throw std::invalid_argument(t.id + " needs k");
  return detail::guarded([&](Evaluation& e) { t.check(facts, t.scope == Scope::graph ? 0 : *k, e); });
}

}  // namespace lkpack
