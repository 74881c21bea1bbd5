#pragma once

#include <algorithm>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <tuple>
#include <string>
#include <vector>

#include "lkpack/graph.hpp"
#include "lkpack/graph6.hpp"
#include "lkpack/profile.hpp"
#include "lkpack/solvers.hpp"

namespace lkpack {

/// Non-negative rational num/den, kept in lowest terms.
struct Fraction {
  long num = 0;
  long den = 1;

  static Fraction of(long num, long den) {
    if (den <= 0) throw std::invalid_argument("fraction denominator must be positive");
    const long g = std::gcd(num, den);
    return g == 0 ? Fraction{0, 1} : Fraction{num / g, den / g};
  }
  long floor() const { return num >= 0 ? num / den : -((-num + den - 1) / den); }
  long ceil() const { return num >= 0 ? (num + den - 1) / den : -((-num) / den); }
  std::string to_string() const {
    return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
  }
  bool operator==(const Fraction&) const = default;
};

/// Integer floor division that rounds toward negative infinity.
constexpr long floor_div(long a, long b) {
  const long q = a / b;
  return (a % b != 0 && ((a < 0) != (b < 0))) ? q - 1 : q;
}

constexpr long ceil_div(long a, long b) { return -floor_div(-a, b); }

enum class BoundDirection { lower, upper, exact };

inline const char* to_string(BoundDirection d) {
  switch (d) {
    case BoundDirection::lower: return "lower";
    case BoundDirection::upper: return "upper";
    case BoundDirection::exact: return "exact";
  }
  return "?";
}

/// One inequality evaluated on one (G, k). `value` is present exactly when the
/// hypothesis holds; `raw` keeps the unrounded rational for fractional bounds.
struct BoundEntry {
  std::string id;
  BoundDirection direction = BoundDirection::lower;
  std::optional<long> value;
  std::optional<Fraction> raw;
  std::string hypothesis;
  std::string source;

  bool applicable() const { return value.has_value(); }

  /// Whether an exact L_k value is consistent with this entry.
  bool admits(long exact) const {
    if (!value) return true;
    switch (direction) {
      case BoundDirection::lower: return exact >= *value;
      case BoundDirection::upper: return exact <= *value;
      case BoundDirection::exact: return exact == *value;
    }
    return false;
  }
};

/// Exact solver outputs that some bounds take as inputs.
struct AuxValues {
  std::optional<int> domination;    // γ(G)
  std::optional<int> packing;       // L_1(G)
  std::optional<int> open_packing;  // ρ⁰(G)
};

struct BoundReport {
  std::string graph_id;
  int k = 1;
  std::vector<BoundEntry> entries;
  std::optional<int> exact;

  /// Applicable entries that contradict `exact` (empty when exact is unknown).
  std::vector<BoundEntry> violations() const {
    std::vector<BoundEntry> out;
    if (!exact) return out;
    for (const auto& e : entries)
      if (!e.admits(*exact)) out.push_back(e);
    return out;
  }
};

enum class Family { path, cycle, complete, complete_bipartite };

/// Closed forms for L_k on paths, cycles, complete and complete bipartite graphs.
/// For complete_bipartite, `n` and `m` are the two part sizes.
inline long closed_form(Family family, int n, int k, int m = 0) {
  detail::check_limit(k);
  switch (family) {
    case Family::path:
      if (n < 1) throw std::invalid_argument("path needs n >= 1");
      return k >= 3 ? n : ceil_div(static_cast<long>(k) * n, 3);
    case Family::cycle:
      if (n < 3) throw std::invalid_argument("cycle needs n >= 3");
      return k >= 3 ? n : floor_div(static_cast<long>(k) * n, 3);
    case Family::complete:
      if (n < 1) throw std::invalid_argument("complete graph needs n >= 1");
      return std::min(k, n);
    case Family::complete_bipartite:
      if (n < 1 || m < 1) throw std::invalid_argument("complete bipartite needs both parts >= 1");
      if (k == 1) return 1;
      return std::min(k - 1, n) + std::min(k - 1, m);
  }
  throw std::invalid_argument("unknown family");
}

/// L_k for orders n <= k + 1, where it is determined by n and Δ alone.
inline std::optional<int> small_order_value(const Graph& g, int k) {
  detail::check_limit(k);
  const int n = g.order();
  if (n <= k) return n;
  if (n == k + 1) return g.max_degree() == k ? k : k + 1;
  return std::nullopt;
}

namespace detail {

inline BoundEntry make_entry(std::string id, BoundDirection dir, std::string hypothesis,
                             std::string source) {
  return BoundEntry{std::move(id), dir, std::nullopt, std::nullopt, std::move(hypothesis),
                    std::move(source)};
}

inline void sort_entries(std::vector<BoundEntry>& entries) {
  std::sort(entries.begin(), entries.end(),
            [](const BoundEntry& a, const BoundEntry& b) { return a.id < b.id; });
}

}  // namespace detail

inline std::vector<BoundEntry> lower_bounds([[maybe_unused]] const Graph& g, int k, const GraphProfile& p,
                                            const AuxValues& aux = {}) {
  detail::check_limit(k);
  using detail::make_entry;
  const long n = p.order;
  const long delta_max = p.max_degree;
  std::vector<BoundEntry> out;

  {
    auto e = make_entry("lem-diam-lower-k12", BoundDirection::lower, "connected and k in {1,2}",
                        "L_k(G) >= ceil((k + k*diam(G))/3)");
    if (p.connected && n >= 1 && (k == 1 || k == 2)) {
      e.raw = Fraction::of(k + static_cast<long>(k) * p.diameter.value(), 3);
      e.value = e.raw->ceil();
    }
    out.push_back(std::move(e));
  }
  {
    auto e = make_entry("th-diam-lower-k3", BoundDirection::lower, "connected and Delta >= k >= 3",
                        "L_k(G) >= diam(G) + k - 2");
    if (p.connected && n >= 1 && k >= 3 && delta_max >= k) e.value = p.diameter.value() + k - 2;
    out.push_back(std::move(e));
  }
  {
    auto e = make_entry("th-girth-l1", BoundDirection::lower, "k = 1 and G has a cycle",
                        "L_1(G) >= floor(g(G)/3)");
    if (k == 1 && p.girth.finite()) e.value = p.girth.value() / 3;
    out.push_back(std::move(e));
  }
  {
    auto e = make_entry("th-girth-l2", BoundDirection::lower, "k = 2 and G has a cycle",
                        "L_2(G) >= floor(2*g(G)/3)");
    if (k == 2 && p.girth.finite()) e.value = 2 * p.girth.value() / 3;
    out.push_back(std::move(e));
  }
  {
    auto e = make_entry("th-girth-lk", BoundDirection::lower,
                        "Delta >= k >= 3 and G has a cycle", "L_k(G) >= g(G) + k - 3");
    if (k >= 3 && delta_max >= k && p.girth.finite()) e.value = p.girth.value() + k - 3;
    out.push_back(std::move(e));
  }
  {
    auto e = make_entry("lem-l1-maxdeg-lower", BoundDirection::lower, "k = 1 and n >= 1",
                        "L_1(G) >= n/(Delta(G)^2 + 1)");
    if (k == 1 && n >= 1) {
      e.raw = Fraction::of(n, delta_max * delta_max + 1);
      e.value = e.raw->ceil();
    }
    out.push_back(std::move(e));
  }
  {
    auto e = make_entry("prop-lk-geq-k", BoundDirection::lower, "n >= k + 2", "L_k(G) >= k");
    if (n >= k + 2) e.value = k;
    out.push_back(std::move(e));
  }
  {
    auto e = make_entry("lem-lk-l1-chain", BoundDirection::lower, "k <= Delta and L_1 known",
                        "L_k(G) >= L_1(G) + k - 1");
    if (k <= delta_max && aux.packing) e.value = *aux.packing + k - 1;
    out.push_back(std::move(e));
  }
  {
    auto e = make_entry("prop-l1-l2-lower", BoundDirection::lower,
                        "k = 2, G has an edge and L_1 known", "L_2(G) >= L_1(G) + 1");
    if (k == 2 && p.edge_count > 0 && aux.packing) e.value = *aux.packing + 1;
    out.push_back(std::move(e));
  }
  {
    auto e = make_entry("lem-openpack-l1-lower", BoundDirection::lower, "k = 1 and rho0 known",
                        "L_1(G) >= rho0(G)/2");
    if (k == 1 && aux.open_packing) {
      e.raw = Fraction::of(*aux.open_packing, 2);
      e.value = e.raw->ceil();
    }
    out.push_back(std::move(e));
  }
  {
    auto e = make_entry("th-openpack-l2-lower", BoundDirection::lower, "k = 2 and rho0 known",
                        "L_2(G) >= rho0(G)");
    if (k == 2 && aux.open_packing) e.value = *aux.open_packing;
    out.push_back(std::move(e));
  }
  detail::sort_entries(out);
  return out;
}

inline std::vector<BoundEntry> upper_bounds(const Graph& g, int k, const GraphProfile& p,
                                            const AuxValues& aux = {}) {
  detail::check_limit(k);
  using detail::make_entry;
  const long n = p.order;
  const long delta_max = p.max_degree;
  const long delta_min = p.min_degree;
  std::vector<BoundEntry> out;

  {
    auto e = make_entry("lem-kgamma", BoundDirection::upper, "gamma known",
                        "L_k(G) <= k*gamma(G)");
    if (aux.domination) e.value = static_cast<long>(k) * *aux.domination;
    out.push_back(std::move(e));
  }
  {
    auto e = make_entry("lem-delta-upper", BoundDirection::upper, "n >= 1",
                        "L_k(G) <= k*n/(delta(G) + 1)");
    if (n >= 1) {
      e.raw = Fraction::of(k * n, delta_min + 1);
      e.value = e.raw->floor();
    }
    out.push_back(std::move(e));
  }
  {
    auto e = make_entry("th-order-degree-upper", BoundDirection::upper, "n >= 1",
                        "L_k(G) <= n + k - 1 - Delta(G)");
    if (n >= 1) e.value = n + k - 1 - delta_max;
    out.push_back(std::move(e));
  }
  {
    auto e = make_entry("cor-l2-order-degree-upper", BoundDirection::upper, "k = 2 and n >= 1",
                        "L_2(G) <= n + 1 - Delta(G)");
    if (k == 2 && n >= 1) e.value = n + 1 - delta_max;
    out.push_back(std::move(e));
  }
  {
    auto e = make_entry("th-improved-diam-upper", BoundDirection::upper, "k = 2 and connected",
                        "L_2(G) <= n + 1 - Delta(G) - floor((diam(G) - 4)/3)");
    if (k == 2 && p.connected && n >= 1)
      e.value = n + 1 - delta_max - floor_div(p.diameter.value() - 4, 3);
    out.push_back(std::move(e));
  }
  {
    auto e = make_entry("lem-45-upper", BoundDirection::upper, "k = 2, connected and n >= 3",
                        "L_2(G) <= 4n/5");
    if (k == 2 && p.connected && n >= 3) {
      e.raw = Fraction::of(4 * n, 5);
      e.value = e.raw->floor();
    }
    out.push_back(std::move(e));
  }
  {
    auto e = make_entry("lem-kk1-upper", BoundDirection::upper, "connected and delta >= k",
                        "L_k(G) <= k*n/(k + 1)");
    if (p.connected && n >= 1 && delta_min >= k) {
      e.raw = Fraction::of(k * n, k + 1);
      e.value = e.raw->floor();
    }
    out.push_back(std::move(e));
  }
  {
    auto e = make_entry("th-tree-deltaprime", BoundDirection::upper,
                        "k = 2, tree and minimum non-leaf degree >= 4", "L_2(T) <= 2n/3");
    if (k == 2 && p.is_tree && p.min_nonleaf_degree && *p.min_nonleaf_degree >= 4) {
      e.raw = Fraction::of(2 * n, 3);
      e.value = e.raw->floor();
    }
    out.push_back(std::move(e));
  }
  {
    auto e = make_entry("prop-l1-l2-upper", BoundDirection::upper,
                        "k = 2, G has an edge and L_1 known",
                        "L_2(G) <= 2(Delta(G)^2 + 1)/(delta(G) + 1) * L_1(G)");
    if (k == 2 && p.edge_count > 0 && aux.packing) {
      e.raw = Fraction::of(2 * (delta_max * delta_max + 1) * *aux.packing, delta_min + 1);
      e.value = e.raw->floor();
    }
    out.push_back(std::move(e));
  }
  {
    auto e = make_entry("lem-openpack-l1-upper", BoundDirection::upper, "k = 1 and rho0 known",
                        "L_1(G) <= rho0(G)");
    if (k == 1 && aux.open_packing) e.value = *aux.open_packing;
    out.push_back(std::move(e));
  }
  {
    auto e = make_entry("th-tree-l2-2l1", BoundDirection::upper, "k = 2, tree and L_1 known",
                        "L_2(T) <= 2*L_1(T)");
    if (k == 2 && p.is_tree && aux.packing) e.value = 2L * *aux.packing;
    out.push_back(std::move(e));
  }
  {
    auto e = make_entry("th-tree-l2-2rho0", BoundDirection::upper, "k = 2, tree and rho0 known",
                        "L_2(T) <= 2*rho0(T)");
    if (k == 2 && p.is_tree && aux.open_packing) e.value = 2L * *aux.open_packing;
    out.push_back(std::move(e));
  }
  {
    auto e = make_entry("lem-maxdeg-n1", BoundDirection::exact, "k = 2, n >= 2 and Delta = n - 1",
                        "L_2(G) = 2");
    if (k == 2 && n >= 2 && delta_max == n - 1) e.value = 2;
    out.push_back(std::move(e));
  }
  {
    auto e = make_entry("lem-cutvertex-diam2", BoundDirection::exact,
                        "k = 2, diam(G) = 2 and G has a cut vertex", "L_2(G) = 2");
    if (k == 2 && p.diameter == Length(2) && !p.cut_vertices.empty()) e.value = 2;
    out.push_back(std::move(e));
  }
  {
    auto e = make_entry("prop-small-order", BoundDirection::exact, "n <= k + 1",
                        "L_k(G) = n if n <= k; k if n = k+1 and Delta = k; else k+1");
    if (auto v = small_order_value(g, k)) e.value = *v;
    out.push_back(std::move(e));
  }
  {
    auto e = make_entry("rem-saturation", BoundDirection::exact, "Delta(G) + 1 <= k",
                        "L_k(G) = n");
    if (delta_max + 1 <= k) e.value = n;
    out.push_back(std::move(e));
  }
  detail::sort_entries(out);
  return out;
}

/// All lower, upper and exact entries for (G, k), sorted by id.
inline BoundReport bound_report(const Graph& g, int k, const AuxValues& aux = {},
                                std::optional<int> exact = std::nullopt) {
  const GraphProfile p = profile(g);
  BoundReport report;
  report.graph_id = emit_graph6(g);
  report.k = k;
  report.entries = lower_bounds(g, k, p, aux);
  auto upper = upper_bounds(g, k, p, aux);
  report.entries.insert(report.entries.end(), upper.begin(), upper.end());
  detail::sort_entries(report.entries);
  report.exact = exact;
  return report;
}

/// Solver-backed auxiliary values (γ, L_1, ρ⁰) for graphs within the oracle guard.
inline AuxValues solve_aux(const Graph& g) {
  AuxValues aux;
  aux.packing = limited_packing_bb(g, 1).value;
  if (g.order() <= kOracleMaxOrder) {
    aux.domination = domination_number(g).value;
    aux.open_packing = open_packing_number(g).value;
  }
  return aux;
}

enum class NGCase { both_small_degree, mixed, both_large_degree };

inline const char* to_string(NGCase c) {
  switch (c) {
    case NGCase::both_small_degree: return "both-small-Delta";
    case NGCase::mixed: return "mixed";
    case NGCase::both_large_degree: return "both-large-Delta";
  }
  return "?";
}

struct NGReport {
  std::string graph_id;
  int k = 1;
  int n = 0;
  int lk_graph = 0;
  int lk_complement = 0;
  int sum = 0;
  int lower_bound = 0;
  bool lower_applicable = false;
  int upper_bound = 0;
  NGCase upper_case = NGCase::both_small_degree;
  /// n + 2, reported only for k = 2.
  std::optional<int> k2_upper;

  bool within_bounds() const {
    if (lower_applicable && sum < lower_bound) return false;
    if (sum > upper_bound) return false;
    return !k2_upper || sum <= *k2_upper;
  }
};

/// Upper bound on L_k(G) + L_k(complement) selected by the degree case.
inline std::pair<int, NGCase> ng_upper_bound(int n, int k, int max_degree,
                                             int complement_max_degree) {
  if (k >= std::max(max_degree, complement_max_degree) + 1)
    return {2 * n, NGCase::both_small_degree};
  if (k <= std::min(max_degree, complement_max_degree))
    return {n + 2 * k - 2, NGCase::both_large_degree};
  return {2 * n - 1, NGCase::mixed};
}

inline NGReport nordhaus_gaddum(const Graph& g, int k) {
  detail::check_limit(k);
  const Graph co = complement(g);
  NGReport r;
  r.graph_id = emit_graph6(g);
  r.k = k;
  r.n = g.order();
  r.lk_graph = limited_packing_bb(g, k).value;
  r.lk_complement = limited_packing_bb(co, k).value;
  r.sum = r.lk_graph + r.lk_complement;
  r.lower_bound = 2 * k;
  r.lower_applicable = r.n >= k;
  std::tie(r.upper_bound, r.upper_case) = ng_upper_bound(r.n, k, g.max_degree(), co.max_degree());
  if (k == 2) r.k2_upper = r.n + 2;
  return r;
}

/// The stated condition for L_k(G) + L_k(complement) = 2k, read literally:
/// (i) n = k, or (ii) for every (k+1)-subset X one of
///   - G[X] has maximum degree k and some vertex outside X has no neighbour in X,
///   - some vertex outside X is adjacent to all of X and G[X] has an isolated vertex,
///   - some vertex outside X is adjacent to all of X and another has no neighbour in X.
inline bool ng_lower_equality_condition(const Graph& g, int k) {
  detail::check_limit(k);
  const int n = g.order();
  if (n == k) return true;
  if (n < k + 1) return false;
  const std::uint64_t all = VertexSet::first(n).bits();
  const std::uint64_t stop = std::uint64_t{1} << n;
  for (std::uint64_t x = (std::uint64_t{1} << (k + 1)) - 1; x && x < stop; x = next_same_size(x)) {
    const VertexSet xs = VertexSet::from_bits(x);
    bool max_degree_k = false;
    bool has_isolated = false;
    for (int v : xs) {
      const int inner = (g.neighbours(v) & xs).size();
      if (inner == k) max_degree_k = true;
      if (inner == 0) has_isolated = true;
    }
    bool full_outside = false;
    bool empty_outside = false;
    for (int w : VertexSet::from_bits(all & ~x)) {
      const VertexSet nw = g.neighbours(w);
      if (xs.is_subset_of(nw)) full_outside = true;
      if (!nw.intersects(xs)) empty_outside = true;
    }
    const bool ok = (max_degree_k && empty_outside) || (full_outside && has_isolated) ||
                    (full_outside && empty_outside);
    if (!ok) return false;
  }
  return true;
}

struct RegularVerdict {
  bool applicable = false;      // G is d-regular with k <= d
  bool hypothesis_held = false;  // L_k(G) = n + k - 1 - d
  bool conclusion_held = false;  // d >= n/2
  int degree = 0;
  int lk = 0;

  bool passed() const { return !hypothesis_held || conclusion_held; }
};

/// For d-regular G with k <= d: L_k(G) = n + k - 1 - d forces d >= n/2.
inline RegularVerdict regular_equality_check(const Graph& g, int k) {
  detail::check_limit(k);
  RegularVerdict v;
  const int n = g.order();
  if (n == 0 || g.max_degree() != g.min_degree()) return v;
  v.degree = g.max_degree();
  if (k > v.degree) return v;
  v.applicable = true;
  v.lk = limited_packing_bb(g, k).value;
  v.hypothesis_held = v.lk == n + k - 1 - v.degree;
  v.conclusion_held = 2 * v.degree >= n;
  return v;
}

}  // namespace lkpack
