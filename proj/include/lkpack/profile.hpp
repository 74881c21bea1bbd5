#pragma once

#include <algorithm>
#include <array>
#include <optional>
#include <stdexcept>
#include <string>

#include "lkpack/graph.hpp"

namespace lkpack {

/// A non-negative length that may be infinite (diameter of a disconnected
/// graph, girth of a forest). The value is only reachable after checking
/// finite(), so "infinity" never enters arithmetic.
class Length {
 public:
  static constexpr Length infinite() { return Length{}; }
  constexpr explicit Length(int value) : value_(value) {}

  constexpr bool finite() const { return value_ >= 0; }
  constexpr int value() const {
    if (!finite()) throw std::logic_error("value() of an infinite length");
    return value_;
  }
  /// True when finite and at most `bound`.
  constexpr bool at_most(int bound) const { return finite() && value_ <= bound; }

  constexpr bool operator==(const Length&) const = default;

  std::string to_string() const { return finite() ? std::to_string(value_) : "inf"; }

 private:
  constexpr Length() = default;
  int value_ = -1;
};

struct GraphProfile {
  int order = 0;
  int edge_count = 0;
  bool connected = true;
  bool is_tree = false;
  int component_count = 0;
  int max_degree = 0;
  int min_degree = 0;
  /// Minimum degree over vertices of degree >= 2; absent when there are none.
  std::optional<int> min_nonleaf_degree;
  Length diameter = Length(0);
  Length girth = Length::infinite();
  VertexSet cut_vertices;
  bool every_edge_on_triangle = true;
  bool regular = true;
};

namespace detail {

/// Eccentricity-style BFS from `root`; returns the distance array (-1 when unreachable).
inline std::array<int, kMaxVertices> bfs_distances(const Graph& g, int root) {
  std::array<int, kMaxVertices> dist;
  dist.fill(-1);
  dist[root] = 0;
  VertexSet seen = VertexSet::single(root);
  VertexSet frontier = seen;
  for (int d = 1; !frontier.empty(); ++d) {
    VertexSet next;
    for (int v : frontier) next |= g.neighbours(v);
    next -= seen;
    for (int v : next) dist[v] = d;
    seen |= next;
    frontier = next;
  }
  return dist;
}

/// Shortest cycle through BFS trees rooted at every vertex.
inline Length girth_of(const Graph& g) {
  int best = -1;
  for (int root = 0; root < g.order(); ++root) {
    std::array<int, kMaxVertices> dist;
    std::array<int, kMaxVertices> parent;
    dist.fill(-1);
    parent.fill(-1);
    std::array<int, kMaxVertices> queue{};
    int head = 0, tail = 0;
    queue[tail++] = root;
    dist[root] = 0;
    while (head < tail) {
      const int u = queue[head++];
      if (best >= 0 && 2 * dist[u] + 1 >= best) break;
      for (int w : g.neighbours(u)) {
        if (dist[w] < 0) {
          dist[w] = dist[u] + 1;
          parent[w] = u;
          queue[tail++] = w;
        } else if (parent[u] != w) {
          const int len = dist[u] + dist[w] + 1;
          if (best < 0 || len < best) best = len;
        }
      }
    }
  }
  return best < 0 ? Length::infinite() : Length(best);
}

inline VertexSet articulation_points(const Graph& g) {
  const int n = g.order();
  std::array<int, kMaxVertices> disc;
  std::array<int, kMaxVertices> low{};
  disc.fill(-1);
  VertexSet cut;
  int timer = 0;

  struct Frame {
    int v;
    int parent;
    VertexSet pending;
    int children;
  };
  std::array<Frame, kMaxVertices> stack{};

  for (int root = 0; root < n; ++root) {
    if (disc[root] >= 0) continue;
    int top = 0;
    stack[0] = {root, -1, g.neighbours(root), 0};
    disc[root] = low[root] = timer++;
    while (top >= 0) {
      Frame& f = stack[top];
      if (!f.pending.empty()) {
        const int w = f.pending.lowest();
        f.pending.erase(w);
        if (w == f.parent) continue;
        if (disc[w] >= 0) {
          low[f.v] = std::min(low[f.v], disc[w]);
        } else {
          disc[w] = low[w] = timer++;
          ++f.children;
          stack[++top] = {w, f.v, g.neighbours(w), 0};
        }
        continue;
      }
      const Frame done = f;
      --top;
      if (top >= 0) {
        Frame& up = stack[top];
        low[up.v] = std::min(low[up.v], low[done.v]);
        if (up.parent >= 0 && low[done.v] >= disc[up.v]) cut.insert(up.v);
      } else if (done.children >= 2) {
        cut.insert(done.v);
      }
    }
  }
  return cut;
}

}  // namespace detail

inline bool is_connected(const Graph& g) {
  if (g.order() == 0) return true;
  VertexSet seen = VertexSet::single(0);
  VertexSet frontier = seen;
  while (!frontier.empty()) {
    VertexSet next;
    for (int v : frontier) next |= g.neighbours(v);
    frontier = next - seen;
    seen |= next;
  }
  return seen == g.vertices();
}

inline bool is_tree(const Graph& g) {
  return g.order() >= 1 && g.edge_count() == g.order() - 1 && is_connected(g);
}

inline GraphProfile profile(const Graph& g) {
  GraphProfile p;
  const int n = g.order();
  p.order = n;
  p.edge_count = g.edge_count();
  p.max_degree = g.max_degree();
  p.min_degree = g.min_degree();
  for (int v = 0; v < n; ++v) {
    const int d = g.degree(v);
    if (d >= 2 && (!p.min_nonleaf_degree || d < *p.min_nonleaf_degree)) p.min_nonleaf_degree = d;
  }
  p.regular = p.max_degree == p.min_degree;

  int diameter = 0;
  VertexSet unseen = g.vertices();
  while (!unseen.empty()) {
    const int root = unseen.lowest();
    const auto dist = detail::bfs_distances(g, root);
    for (int v = 0; v < n; ++v)
      if (dist[v] >= 0) unseen.erase(v);
    ++p.component_count;
  }
  p.connected = p.component_count <= 1;
  if (p.connected) {
    for (int root = 0; root < n; ++root) {
      const auto dist = detail::bfs_distances(g, root);
      for (int v = 0; v < n; ++v) diameter = std::max(diameter, dist[v]);
    }
    p.diameter = Length(diameter);
  } else {
    p.diameter = Length::infinite();
  }

  p.girth = detail::girth_of(g);
  p.is_tree = n >= 1 && p.connected && p.edge_count == n - 1;
  p.cut_vertices = detail::articulation_points(g);
  for (auto [u, v] : g.edges()) {
    if (!g.neighbours(u).intersects(g.neighbours(v))) {
      p.every_edge_on_triangle = false;
      break;
    }
  }
  return p;
}

}  // namespace lkpack
