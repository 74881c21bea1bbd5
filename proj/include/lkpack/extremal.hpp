#pragma once

#include <charconv>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "lkpack/graph.hpp"
#include "lkpack/profile.hpp"
#include "lkpack/solvers.hpp"

namespace lkpack {

// ---------------------------------------------------------------------------
// L_k(G) = k
// ---------------------------------------------------------------------------

/// Structural test for L_k(G) = k: n = k; or n = k + 1 and Δ = k; or n >= k + 2
/// and every (k+1)-subset X either contains a vertex adjacent to the other k
/// vertices of X or has a common neighbour.
inline bool check_Lk_equals_k(const Graph& g, int k) {
  detail::check_limit(k);
  const int n = g.order();
  if (n <= k) return n == k;
  if (n == k + 1) return g.max_degree() == k;
  const std::uint64_t stop = std::uint64_t{1} << n;
  for (std::uint64_t x = (std::uint64_t{1} << (k + 1)) - 1; x && x < stop; x = next_same_size(x)) {
    const VertexSet xs = VertexSet::from_bits(x);
    bool covered = false;
    for (int v : xs) {
      if ((g.neighbours(v) & xs).size() == k) {
        covered = true;
        break;
      }
    }
    if (covered) continue;
    for (int w = 0; w < n && !covered; ++w) covered = xs.is_subset_of(g.neighbours(w));
    if (!covered) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Class G: L_2(G) = n + 1 - Δ(G)
// ---------------------------------------------------------------------------

struct ClassGWitness {
  VertexSet a0;
  VertexSet b0;
  bool operator==(const ClassGWitness&) const = default;
};

/// |A0 ∩ B0| = 2, A0 ∪ B0 = V, G[A0] has a spanning star, G[B0] has maximum
/// degree <= 1, and every vertex outside B0 has at most two neighbours in B0.
inline bool is_class_G_witness(const Graph& g, const ClassGWitness& w) {
  if ((w.a0 | w.b0) != g.vertices()) return false;
  if ((w.a0 & w.b0).size() != 2) return false;
  bool star = false;
  for (int c : w.a0) {
    if ((w.a0 - VertexSet::single(c)).is_subset_of(g.neighbours(c))) {
      star = true;
      break;
    }
  }
  if (!star) return false;
  for (int v : w.b0)
    if ((g.neighbours(v) & w.b0).size() > 1) return false;
  for (int v : g.vertices() - w.b0)
    if ((g.neighbours(v) & w.b0).size() > 2) return false;
  return true;
}

namespace detail {

/// Try B0 = (V \ A0) ∪ {p, q} for every pair p < q of A0, in increasing pair order.
inline std::optional<ClassGWitness> class_G_with_a0(const Graph& g, VertexSet a0) {
  const VertexSet outside = g.vertices() - a0;
  for (int v : outside)
    if ((g.neighbours(v) & outside).size() > 1) return std::nullopt;
  for (int q : a0) {
    for (int p : a0) {
      if (p >= q) break;
      ClassGWitness w{a0, outside | VertexSet{p, q}};
      if (is_class_G_witness(g, w)) return w;
    }
  }
  return std::nullopt;
}

}  // namespace detail

/// Search restricted to A0 = N[v0] for maximum-degree vertices v0.
inline std::optional<ClassGWitness> recognize_class_G_structural(const Graph& g) {
  const int delta = g.max_degree();
  for (int v = 0; v < g.order(); ++v) {
    if (g.degree(v) != delta) continue;
    if (auto w = detail::class_G_with_a0(g, g.closed_neighbours(v))) return w;
  }
  return std::nullopt;
}

/// Every A0 that has a spanning star: A0 ⊆ N[c] with c ∈ A0, for every centre c.
inline std::optional<ClassGWitness> recognize_class_G_exhaustive(const Graph& g) {
  for (int c = 0; c < g.order(); ++c) {
    const std::vector<int> leaves = g.neighbours(c).to_vector();
    const std::uint64_t count = std::uint64_t{1} << leaves.size();
    for (std::uint64_t pick = 1; pick < count; ++pick) {
      VertexSet a0 = VertexSet::single(c);
      for (std::size_t i = 0; i < leaves.size(); ++i)
        if ((pick >> i) & 1) a0.insert(leaves[i]);
      if (auto w = detail::class_G_with_a0(g, a0)) return w;
    }
  }
  return std::nullopt;
}

inline constexpr int kExhaustiveFallbackOrder = 10;

/// Class G membership with a witness. The structural search is tried first;
/// graphs of order <= 10 fall back to the exhaustive search.
inline std::optional<ClassGWitness> recognize_class_G(const Graph& g) {
  if (auto w = recognize_class_G_structural(g)) return w;
  if (g.order() <= kExhaustiveFallbackOrder) return recognize_class_G_exhaustive(g);
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Spiders
// ---------------------------------------------------------------------------

/// A star with `t` of its edges subdivided once and `s` edges left as pendant leaves.
struct SpiderShape {
  int center = 0;
  int t = 0;
  int s = 0;
  bool operator==(const SpiderShape&) const = default;
};

inline void require_tree(const Graph& g, const char* what) {
  if (!is_tree(g)) throw std::invalid_argument(std::string(what) + " requires a tree");
}

/// Spider representation of a tree, if any. A tree can be a spider around
/// several centres (P_3, P_4); the one with the fewest subdivided legs is
/// returned, ties broken by lowest centre index.
inline std::optional<SpiderShape> recognize_spider(const Graph& tree) {
  require_tree(tree, "recognize_spider");
  std::optional<SpiderShape> best;
  for (int c = 0; c < tree.order(); ++c) {
    SpiderShape shape{c, 0, 0};
    bool valid = true;
    for (int u : tree.neighbours(c)) {
      const int d = tree.degree(u);
      if (d == 1) {
        ++shape.s;
      } else if (d == 2 && tree.degree((tree.neighbours(u) - VertexSet::single(c)).lowest()) == 1) {
        ++shape.t;
      } else {
        valid = false;
        break;
      }
    }
    if (valid && (!best || shape.t < best->t)) best = shape;
  }
  return best;
}

/// Spider with fewer subdivided legs than Δ(T).
inline bool is_small_spider(const Graph& tree) {
  const auto shape = recognize_spider(tree);
  return shape && shape->t < tree.max_degree();
}

// ---------------------------------------------------------------------------
// Class T: trees with ρ⁰(T) = L_2(T)
// ---------------------------------------------------------------------------

struct ClassTWitness {
  VertexSet s0;
  VertexSet r0;
  bool operator==(const ClassTWitness&) const = default;
};

/// S0 and R0 partition V; T[S0] is a nonempty perfect matching whose edges each
/// contain a leaf of T; every vertex of R0 has exactly one neighbour in S0.
inline bool is_class_T_witness(const Graph& tree, const ClassTWitness& w) {
  if ((w.s0 | w.r0) != tree.vertices() || w.s0.intersects(w.r0)) return false;
  if (w.s0.empty()) return false;
  for (int v : w.s0) {
    const VertexSet inner = tree.neighbours(v) & w.s0;
    if (inner.size() != 1) return false;
    const int mate = inner.lowest();
    if (tree.degree(v) != 1 && tree.degree(mate) != 1) return false;
  }
  for (int r : w.r0)
    if ((tree.neighbours(r) & w.s0).size() != 1) return false;
  return true;
}

/// Search with S0 ranging over maximum open packings (numeric order). A known
/// ρ⁰(T) may be passed to skip recomputing it.
inline std::optional<ClassTWitness> recognize_class_T_structural(const Graph& tree,
                                                                 std::optional<int> known_rho0 = {}) {
  require_tree(tree, "recognize_class_T");
  detail::check_oracle_order(tree);
  const int n = tree.order();
  const int rho0 = known_rho0 ? *known_rho0 : open_packing_number(tree).value;
  const std::uint64_t stop = std::uint64_t{1} << n;
  for (std::uint64_t s = (std::uint64_t{1} << rho0) - 1; s && s < stop; s = next_same_size(s)) {
    const VertexSet s0 = VertexSet::from_bits(s);
    if (!is_open_packing(tree, s0)) continue;
    ClassTWitness w{s0, tree.vertices() - s0};
    if (is_class_T_witness(tree, w)) return w;
  }
  return std::nullopt;
}

inline std::optional<ClassTWitness> recognize_class_T_exhaustive(const Graph& tree) {
  require_tree(tree, "recognize_class_T");
  const int n = tree.order();
  const std::uint64_t stop = std::uint64_t{1} << n;
  for (std::uint64_t s = 1; s < stop; ++s) {
    ClassTWitness w{VertexSet::from_bits(s), tree.vertices() - VertexSet::from_bits(s)};
    if (is_class_T_witness(tree, w)) return w;
  }
  return std::nullopt;
}

inline std::optional<ClassTWitness> recognize_class_T(const Graph& tree) {
  if (auto w = recognize_class_T_structural(tree)) return w;
  if (tree.order() <= kExhaustiveFallbackOrder) return recognize_class_T_exhaustive(tree);
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Constructions
// ---------------------------------------------------------------------------

inline void require_order(long n) {
  if (n > kMaxVertices)
    throw std::length_error("construction needs " + std::to_string(n) + " vertices, limit is " +
                            std::to_string(kMaxVertices));
}

inline Graph make_path(int n) {
  if (n < 1) throw std::invalid_argument("path needs n >= 1");
  Graph g(n);
  for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

inline Graph make_cycle(int n) {
  if (n < 3) throw std::invalid_argument("cycle needs n >= 3");
  Graph g = make_path(n);
  g.add_edge(n - 1, 0);
  return g;
}

inline Graph make_complete(int n) {
  if (n < 1) throw std::invalid_argument("complete graph needs n >= 1");
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

inline Graph make_empty(int n) {
  if (n < 1) throw std::invalid_argument("empty graph needs n >= 1");
  return Graph(n);
}

/// Parts {0..m-1} and {m..m+n-1}.
inline Graph make_complete_bipartite(int m, int n) {
  if (m < 1 || n < 1) throw std::invalid_argument("complete bipartite needs both parts >= 1");
  require_order(static_cast<long>(m) + n);
  Graph g(m + n);
  for (int u = 0; u < m; ++u)
    for (int v = m; v < m + n; ++v) g.add_edge(u, v);
  return g;
}

/// K_{1,n-1}: centre 0, leaves 1..n-1.
inline Graph make_star(int n) {
  if (n < 2) throw std::invalid_argument("star needs n >= 2");
  return make_complete_bipartite(1, n - 1);
}

/// Centre 0; subdivided legs 0-i-(t+i) for i = 1..t; pendant leaves 2t+1..2t+s.
inline Graph make_spider(int t, int s) {
  if (t < 0 || s < 0) throw std::invalid_argument("spider needs t, s >= 0");
  require_order(1L + 2L * t + s);
  Graph g(1 + 2 * t + s);
  for (int i = 1; i <= t; ++i) {
    g.add_edge(0, i);
    g.add_edge(i, t + i);
  }
  for (int j = 1; j <= s; ++j) g.add_edge(0, 2 * t + j);
  return g;
}

/// K_n without the edge {0, 1}.
inline Graph make_complete_minus_edge(int n) {
  if (n < 2) throw std::invalid_argument("complete_minus_edge needs n >= 2");
  Graph g = make_complete(n);
  g.remove_edge(0, 1);
  return g;
}

/// Diameter-2 graph with L_2 = a: an independent set X = {0..a-1} and a clique Y
/// of a(a-1)/2 vertices; the pair {x_i, x_j} (i < j) shares exactly the Y-vertex
/// a + j(j-1)/2 + i, i.e. pairs are assigned in colexicographic order.
inline Graph construct_diam2(int a) {
  if (a < 2) throw std::invalid_argument("construct_diam2 needs a >= 2");
  const long y_count = static_cast<long>(a) * (a - 1) / 2;
  require_order(a + y_count);
  Graph g(a + static_cast<int>(y_count));
  for (int y = a; y < g.order(); ++y)
    for (int z = y + 1; z < g.order(); ++z) g.add_edge(y, z);
  for (int j = 1; j < a; ++j) {
    for (int i = 0; i < j; ++i) {
      const int y = a + j * (j - 1) / 2 + i;
      g.add_edge(i, y);
      g.add_edge(j, y);
    }
  }
  return g;
}

/// Tree with ρ⁰ = L_1 = a and L_2 = b, for a >= 2 and a + 1 <= b <= 2a.
///
/// b = 2a: paths x_i y_i z_i (labels 3i, 3i+1, 3i+2) joined along y_1..y_a.
/// b = a + r, r < a: star with centre 0 and leaves v_1..v_a (labels 1..a);
/// v_i gets pendant w_i (label a + i) for i <= a - 1 and a second pendant w'_i
/// (label 2a - 1 + i) for i <= r - 1.
inline Graph construct_tree_prescribed(int a, int b) {
  if (a < 2 || b < a + 1 || b > 2 * a)
    throw std::invalid_argument("construct_tree_prescribed needs a >= 2 and a+1 <= b <= 2a");
  if (b == 2 * a) {
    require_order(3L * a);
    Graph g(3 * a);
    for (int i = 0; i < a; ++i) {
      g.add_edge(3 * i, 3 * i + 1);
      g.add_edge(3 * i + 1, 3 * i + 2);
      if (i + 1 < a) g.add_edge(3 * i + 1, 3 * i + 4);
    }
    return g;
  }
  const int r = b - a;
  require_order(2L * a + r - 1);
  Graph g(2 * a + r - 1);
  for (int i = 1; i <= a; ++i) g.add_edge(0, i);
  for (int i = 1; i <= a - 1; ++i) g.add_edge(i, a + i);
  for (int i = 1; i <= r - 1; ++i) g.add_edge(i, 2 * a - 1 + i);
  return g;
}

// ---------------------------------------------------------------------------
// Family spec grammar: "name:p1,p2" terms joined by '+' (disjoint union)
// ---------------------------------------------------------------------------

namespace detail {

inline std::vector<int> parse_int_list(std::string_view text, std::string_view whole) {
  std::vector<int> out;
  while (!text.empty()) {
    const auto comma = text.find(',');
    const std::string_view item = text.substr(0, comma);
    int value = 0;
    const auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
    if (ec != std::errc{} || ptr != item.data() + item.size() || item.empty())
      throw std::invalid_argument("family spec \"" + std::string(whole) + "\": bad integer \"" +
                                  std::string(item) + "\"");
    out.push_back(value);
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
    if (text.empty())
      throw std::invalid_argument("family spec \"" + std::string(whole) + "\": trailing comma");
  }
  return out;
}

inline Graph construct_term(std::string_view term) {
  const auto colon = term.find(':');
  if (colon == std::string_view::npos)
    throw std::invalid_argument("family spec \"" + std::string(term) + "\": expected name:params");
  const std::string_view name = term.substr(0, colon);
  const std::vector<int> p = parse_int_list(term.substr(colon + 1), term);
  auto need = [&](std::size_t count) {
    if (p.size() != count)
      throw std::invalid_argument("family spec \"" + std::string(term) + "\": expected " +
                                  std::to_string(count) + " parameter(s)");
  };
  if (name == "path") return need(1), make_path(p[0]);
  if (name == "cycle") return need(1), make_cycle(p[0]);
  if (name == "complete") return need(1), make_complete(p[0]);
  if (name == "empty") return need(1), make_empty(p[0]);
  if (name == "complete_bipartite") return need(2), make_complete_bipartite(p[0], p[1]);
  if (name == "star") return need(1), make_star(p[0]);
  if (name == "spider") return need(2), make_spider(p[0], p[1]);
  if (name == "complete_minus_edge") return need(1), make_complete_minus_edge(p[0]);
  if (name == "diam2") return need(1), construct_diam2(p[0]);
  if (name == "prescribed") return need(2), construct_tree_prescribed(p[0], p[1]);
  throw std::invalid_argument("unknown family \"" + std::string(name) + "\"");
}

}  // namespace detail

/// Build a graph from a family spec such as "spider:3,2", "diam2:4",
/// "prescribed:8,12", "path:7" or "complete:2+empty:1".
inline Graph construct_family(std::string_view spec) {
  std::vector<Graph> parts;
  while (true) {
    const auto plus = spec.find('+');
    parts.push_back(detail::construct_term(spec.substr(0, plus)));
    if (plus == std::string_view::npos) break;
    spec.remove_prefix(plus + 1);
  }
  return parts.size() == 1 ? parts.front() : disjoint_union(parts);
}

}  // namespace lkpack
