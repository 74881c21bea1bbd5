#pragma once

#include <algorithm>
#include <array>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "lkpack/vertex_set.hpp"

namespace lkpack {

/// Simple undirected graph on vertices 0..n-1 with one adjacency word per vertex.
///
/// Edges are only added through add_edge, which keeps the adjacency
/// symmetric and loop-free.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n) : n_(n) {
    if (n < 0 || n > kMaxVertices)
      throw std::length_error("graph order " + std::to_string(n) + " outside 0.." +
                              std::to_string(kMaxVertices));
  }

  static Graph from_edges(int n, std::span<const std::pair<int, int>> edges) {
    Graph g(n);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
  }
  static Graph from_edges(int n, std::initializer_list<std::pair<int, int>> edges) {
    return from_edges(n, std::span<const std::pair<int, int>>(edges.begin(), edges.size()));
  }

  int order() const { return n_; }
  VertexSet vertices() const { return VertexSet::first(n_); }

  void add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
    adj_[u].insert(v);
    adj_[v].insert(u);
  }
  void remove_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    adj_[u].erase(v);
    adj_[v].erase(u);
  }

  bool has_edge(int u, int v) const { return adj_[u].contains(v); }
  VertexSet neighbours(int v) const { return adj_[v]; }
  VertexSet closed_neighbours(int v) const { return adj_[v] | VertexSet::single(v); }
  int degree(int v) const { return adj_[v].size(); }

  int edge_count() const {
    int twice = 0;
    for (int v = 0; v < n_; ++v) twice += adj_[v].size();
    return twice / 2;
  }

  std::vector<std::pair<int, int>> edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n_; ++u)
      for (int v : adj_[u])
        if (u < v) out.emplace_back(u, v);
    return out;
  }

  int max_degree() const {
    int best = 0;
    for (int v = 0; v < n_; ++v) best = std::max(best, degree(v));
    return best;
  }
  int min_degree() const {
    if (n_ == 0) return 0;
    int best = n_;
    for (int v = 0; v < n_; ++v) best = std::min(best, degree(v));
    return best;
  }

  bool operator==(const Graph& other) const {
    if (n_ != other.n_) return false;
    for (int v = 0; v < n_; ++v)
      if (adj_[v] != other.adj_[v]) return false;
    return true;
  }

 private:
  void check_vertex(int v) const {
    if (v < 0 || v >= n_)
      throw std::out_of_range("vertex " + std::to_string(v) + " not in graph of order " +
                              std::to_string(n_));
  }

  int n_ = 0;
  std::array<VertexSet, kMaxVertices> adj_{};
};

inline Graph complement(const Graph& g) {
  Graph out(g.order());
  for (int u = 0; u < g.order(); ++u)
    for (int v = u + 1; v < g.order(); ++v)
      if (!g.has_edge(u, v)) out.add_edge(u, v);
  return out;
}

/// Vertices of `keep` are renumbered 0..|keep|-1 in increasing order.
inline Graph induced_subgraph(const Graph& g, VertexSet keep) {
  if (!keep.is_subset_of(g.vertices())) throw std::out_of_range("vertex set exceeds graph order");
  std::array<int, kMaxVertices> index{};
  int next = 0;
  for (int v : keep) index[v] = next++;
  Graph out(next);
  for (int u : keep)
    for (int v : g.neighbours(u) & keep)
      if (u < v) out.add_edge(index[u], index[v]);
  return out;
}

/// Block-diagonal union; the i-th graph's vertices follow those of graphs 0..i-1.
inline Graph disjoint_union(std::span<const Graph> parts) {
  int total = 0;
  for (const Graph& g : parts) total += g.order();
  if (total > kMaxVertices)
    throw std::length_error("disjoint union has " + std::to_string(total) + " vertices, limit is " +
                            std::to_string(kMaxVertices));
  Graph out(total);
  int offset = 0;
  for (const Graph& g : parts) {
    for (auto [u, v] : g.edges()) out.add_edge(u + offset, v + offset);
    offset += g.order();
  }
  return out;
}

inline Graph disjoint_union(std::initializer_list<Graph> parts) {
  return disjoint_union(std::span<const Graph>(parts.begin(), parts.size()));
}

}  // namespace lkpack
