#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

#include "lkpack/graph.hpp"

namespace lkpack {

inline constexpr int kOracleMaxOrder = 24;

enum class SolveMethod { oracle, branch_and_bound };

inline const char* to_string(SolveMethod m) {
  return m == SolveMethod::oracle ? "oracle" : "branch-and-bound";
}

/// Optimum of one exact solve. `witness` is an optimal set and |witness| == value.
struct SolveResult {
  int value = 0;
  VertexSet witness;
  std::uint64_t nodes_explored = 0;
  SolveMethod method = SolveMethod::oracle;
};

/// Raised when subset enumeration is asked to run beyond kOracleMaxOrder.
class oracle_guard_error : public std::domain_error {
 public:
  explicit oracle_guard_error(int n)
      : std::domain_error("subset enumeration refused for n = " + std::to_string(n) +
                          " (limit " + std::to_string(kOracleMaxOrder) +
                          "); use the branch-and-bound solver") {}
};

/// Raised when a parameter is undefined on the input (total domination with an isolated vertex).
class undefined_parameter_error : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

namespace detail {

inline void check_limit(int k) {
  if (k < 1) throw std::invalid_argument("packing limit k must be >= 1, got " + std::to_string(k));
}

inline void check_oracle_order(const Graph& g) {
  if (g.order() > kOracleMaxOrder) throw oracle_guard_error(g.order());
}

inline std::array<std::uint64_t, kMaxVertices> closed_rows(const Graph& g) {
  std::array<std::uint64_t, kMaxVertices> rows{};
  for (int v = 0; v < g.order(); ++v) rows[v] = g.closed_neighbours(v).bits();
  return rows;
}

inline std::array<std::uint64_t, kMaxVertices> open_rows(const Graph& g) {
  std::array<std::uint64_t, kMaxVertices> rows{};
  for (int v = 0; v < g.order(); ++v) rows[v] = g.neighbours(v).bits();
  return rows;
}

/// Every row meets `mask` in at most `limit` vertices.
inline bool rows_within(const std::array<std::uint64_t, kMaxVertices>& rows, int n,
                        std::uint64_t mask, int limit) {
  for (int v = 0; v < n; ++v)
    if (std::popcount(rows[v] & mask) > limit) return false;
  return true;
}

/// Every row meets `mask`.
inline bool rows_hit(const std::array<std::uint64_t, kMaxVertices>& rows, int n,
                     std::uint64_t mask) {
  for (int v = 0; v < n; ++v)
    if ((rows[v] & mask) == 0) return false;
  return true;
}

/// Scan all 2^n subsets in increasing numeric order and keep the first one of
/// best size; the result is the numerically smallest optimal set.
template <typename Feasible>
SolveResult enumerate_subsets(int n, bool maximize, Feasible&& feasible) {
  SolveResult best;
  best.method = SolveMethod::oracle;
  bool found = false;
  const std::uint64_t limit = std::uint64_t{1} << n;
  for (std::uint64_t mask = 0; mask < limit; ++mask) {
    ++best.nodes_explored;
    const int size = std::popcount(mask);
    if (found && (maximize ? size <= best.value : size >= best.value)) continue;
    if (!feasible(mask)) continue;
    best.value = size;
    best.witness = VertexSet::from_bits(mask);
    found = true;
  }
  return best;
}

}  // namespace detail

inline bool is_k_limited_packing(const Graph& g, int k, VertexSet b) {
  detail::check_limit(k);
  for (int v = 0; v < g.order(); ++v)
    if ((g.closed_neighbours(v) & b).size() > k) return false;
  return b.is_subset_of(g.vertices());
}

inline bool is_open_packing(const Graph& g, VertexSet s) {
  for (int v = 0; v < g.order(); ++v)
    if ((g.neighbours(v) & s).size() > 1) return false;
  return s.is_subset_of(g.vertices());
}

inline bool is_dominating_set(const Graph& g, VertexSet d) {
  for (int v = 0; v < g.order(); ++v)
    if (!g.closed_neighbours(v).intersects(d)) return false;
  return d.is_subset_of(g.vertices());
}

inline bool is_total_dominating_set(const Graph& g, VertexSet d) {
  for (int v = 0; v < g.order(); ++v)
    if (!g.neighbours(v).intersects(d)) return false;
  return d.is_subset_of(g.vertices());
}

/// L_k(G) by enumerating every subset. The witness is the numerically
/// smallest maximum k-limited packing.
inline SolveResult limited_packing_oracle(const Graph& g, int k) {
  detail::check_limit(k);
  detail::check_oracle_order(g);
  const auto rows = detail::closed_rows(g);
  const int n = g.order();
  return detail::enumerate_subsets(
      n, true, [&](std::uint64_t mask) { return detail::rows_within(rows, n, mask, k); });
}

/// L_k(G) by include/exclude branching over vertices in descending-degree order.
///
/// Each vertex w carries a residual capacity k - |N[w] ∩ chosen|. A vertex is
/// eligible while every member of its closed neighbourhood has capacity left;
/// a branch is cut once chosen + |undecided eligible vertices| <= best.
inline SolveResult limited_packing_bb(const Graph& g, int k) {
  detail::check_limit(k);
  const int n = g.order();
  SolveResult result;
  result.method = SolveMethod::branch_and_bound;
  if (k > g.max_degree()) {
    result.value = n;
    result.witness = g.vertices();
    return result;
  }

  std::array<int, kMaxVertices> order{};
  std::iota(order.begin(), order.begin() + n, 0);
  std::stable_sort(order.begin(), order.begin() + n,
                   [&](int a, int b) { return g.degree(a) > g.degree(b); });

  const auto rows = detail::closed_rows(g);
  std::array<int, kMaxVertices> capacity;
  capacity.fill(k);

  struct Search {
    const std::array<std::uint64_t, kMaxVertices>& rows;
    const std::array<int, kMaxVertices>& order;
    std::array<int, kMaxVertices>& capacity;
    int n;
    int best = -1;
    std::uint64_t best_set = 0;
    std::uint64_t nodes = 0;

    // `undecided` holds vertices order[i..n-1]; `blocked` holds vertices whose
    // closed neighbourhood contains a saturated vertex.
    void run(int i, std::uint64_t chosen, int chosen_count, std::uint64_t undecided,
             std::uint64_t blocked) {
      ++nodes;
      const int eligible = std::popcount(undecided & ~blocked);
      if (chosen_count + eligible <= best) return;
      if (eligible == 0) {
        best = chosen_count;
        best_set = chosen;
        return;
      }
      while (i < n && ((blocked >> order[i]) & 1)) ++i;
      const int u = order[i];
      const std::uint64_t u_bit = std::uint64_t{1} << u;
      const std::uint64_t rest = undecided & ~u_bit;

      std::uint64_t newly_blocked = 0;
      for (std::uint64_t m = rows[u]; m; m &= m - 1) {
        const int w = std::countr_zero(m);
        if (--capacity[w] == 0) newly_blocked |= rows[w];
      }
      run(i + 1, chosen | u_bit, chosen_count + 1, rest, blocked | newly_blocked);
      for (std::uint64_t m = rows[u]; m; m &= m - 1) ++capacity[std::countr_zero(m)];

      run(i + 1, chosen, chosen_count, rest, blocked);
    }
  };

  // Blocked vertices are never branched on; they leave `undecided` only
  // implicitly because the eligible count already excludes them.
  Search search{rows, order, capacity, n};
  search.run(0, 0, 0, VertexSet::first(n).bits(), 0);
  result.value = search.best;
  result.witness = VertexSet::from_bits(search.best_set);
  result.nodes_explored = search.nodes;
  return result;
}

/// Exact L_k(G); branch-and-bound is the default route.
inline SolveResult limited_packing_number(const Graph& g, int k,
                                          SolveMethod method = SolveMethod::branch_and_bound) {
  return method == SolveMethod::oracle ? limited_packing_oracle(g, k) : limited_packing_bb(g, k);
}

/// ρ⁰(G): largest S with |N(v) ∩ S| <= 1 for every v.
inline SolveResult open_packing_number(const Graph& g) {
  detail::check_oracle_order(g);
  const auto rows = detail::open_rows(g);
  const int n = g.order();
  return detail::enumerate_subsets(
      n, true, [&](std::uint64_t mask) { return detail::rows_within(rows, n, mask, 1); });
}

/// γ(G): smallest D with N[D] = V.
inline SolveResult domination_number(const Graph& g) {
  detail::check_oracle_order(g);
  const auto rows = detail::closed_rows(g);
  const int n = g.order();
  return detail::enumerate_subsets(
      n, false, [&](std::uint64_t mask) { return detail::rows_hit(rows, n, mask); });
}

/// γ_t(G): smallest D with N(D) = V. Undefined when G has an isolated vertex.
inline SolveResult total_domination_number(const Graph& g) {
  for (int v = 0; v < g.order(); ++v)
    if (g.degree(v) == 0)
      throw undefined_parameter_error("total domination number undefined: vertex " +
                                      std::to_string(v) + " is isolated");
  detail::check_oracle_order(g);
  const auto rows = detail::open_rows(g);
  const int n = g.order();
  return detail::enumerate_subsets(
      n, false, [&](std::uint64_t mask) { return detail::rows_hit(rows, n, mask); });
}

}  // namespace lkpack
