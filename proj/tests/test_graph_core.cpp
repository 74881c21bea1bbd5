#include <gtest/gtest.h>

#include <sstream>

#include "lkpack/corpus.hpp"
#include "lkpack/extremal.hpp"
#include "lkpack/graph.hpp"
#include "lkpack/graph6.hpp"
#include "lkpack/profile.hpp"
#include "support/brute.hpp"

using namespace lkpack;

namespace {

Graph petersen() {
  Graph g(10);
  for (int i = 0; i < 5; ++i) {
    g.add_edge(i, (i + 1) % 5);
    g.add_edge(i, i + 5);
    g.add_edge(i + 5, (i + 2) % 5 + 5);
  }
  return g;
}

}  // namespace

TEST(VertexSet, BasicOperations) {
  VertexSet s{1, 4, 7};
  EXPECT_EQ(s.size(), 3);
  EXPECT_TRUE(s.contains(4));
  EXPECT_FALSE(s.contains(5));
  EXPECT_EQ(s.lowest(), 1);
  EXPECT_EQ(s.highest(), 7);
  EXPECT_EQ(s.to_vector(), (std::vector<int>{1, 4, 7}));
  s.erase(4);
  EXPECT_EQ(s, (VertexSet{1, 7}));
  EXPECT_EQ(VertexSet::first(3), (VertexSet{0, 1, 2}));
  EXPECT_EQ(VertexSet::first(64).size(), 64);
  EXPECT_THROW(s.insert(64), std::out_of_range);
}

TEST(VertexSet, FromBitsIsNotAMemberList) {
  EXPECT_EQ(VertexSet::from_bits(5), (VertexSet{0, 2}));
  EXPECT_EQ(VertexSet{5}, VertexSet::from_bits(32));
}

TEST(VertexSet, GosperVisitsEveryKSubsetOnce) {
  int count = 0;
  for (std::uint64_t x = 0b111; x < (1U << 6); x = next_same_size(x)) {
    EXPECT_EQ(std::popcount(x), 3);
    ++count;
  }
  EXPECT_EQ(count, 20);
  EXPECT_EQ(next_same_size(~std::uint64_t{0}), 0U);
}

TEST(Graph, RejectsLoopsAndBadOrders) {
  Graph g(3);
  EXPECT_THROW(g.add_edge(1, 1), std::invalid_argument);
  EXPECT_THROW(g.add_edge(0, 3), std::out_of_range);
  EXPECT_THROW(Graph(65), std::length_error);
  EXPECT_THROW(Graph(-1), std::length_error);
}

TEST(Graph, SymmetryAndHandshake) {
  brute::Rng rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const Graph g = brute::random_graph(rng, 1 + rng.below(12), 40);
    int degree_sum = 0;
    for (int v = 0; v < g.order(); ++v) {
      EXPECT_FALSE(g.neighbours(v).contains(v));
      for (int u : g.neighbours(v)) EXPECT_TRUE(g.neighbours(u).contains(v));
      degree_sum += g.degree(v);
    }
    EXPECT_EQ(degree_sum % 2, 0);
    EXPECT_EQ(degree_sum, 2 * g.edge_count());
  }
}

TEST(Graph6, KnownStrings) {
  const Graph k2 = parse_graph6("A_");
  EXPECT_EQ(k2.order(), 2);
  EXPECT_EQ(k2.edge_count(), 1);
  // "BW" has edges {0,2} and {1,2}: a P_3 centred at vertex 2.
  const Graph bw = parse_graph6("BW");
  EXPECT_EQ(bw, Graph::from_edges(3, {{0, 2}, {1, 2}}));
  EXPECT_TRUE(brute::isomorphic(bw, make_path(3)));
  EXPECT_EQ(emit_graph6(make_path(3)), "Bg");
  EXPECT_EQ(emit_graph6(petersen()), "IheA@GUAo");
  EXPECT_EQ(parse_graph6("?").order(), 0);
}

TEST(Graph6, Errors) {
  EXPECT_THROW(parse_graph6(""), parse_error);
  EXPECT_THROW(parse_graph6("A"), parse_error);     // truncated
  EXPECT_THROW(parse_graph6("A_x"), parse_error);   // trailing byte
  EXPECT_THROW(parse_graph6("A\x20"), parse_error); // byte below 63
  EXPECT_THROW(parse_graph6("A`"), parse_error);    // nonzero padding bits
  try {
    parse_graph6("A_x");
    FAIL();
  } catch (const parse_error& e) {
    EXPECT_EQ(e.offset(), 2U);
  }
  // n = 66 in the long form.
  EXPECT_THROW(parse_graph6(std::string("~?@A") + std::string(400, '?')), parse_error);
}

TEST(Graph6, RoundTripAllOrders) {
  brute::Rng rng(11);
  for (int n = 0; n <= 64; ++n) {
    const Graph g = brute::random_graph(rng, n, 30);
    const std::string text = emit_graph6(g);
    EXPECT_EQ(parse_graph6(text), g) << n;
    EXPECT_EQ(emit_graph6(parse_graph6(text)), text);
    EXPECT_EQ(text.front() == '~', n >= 63);
  }
}

TEST(EdgeList, ParsesAndRejects) {
  const Graph g = parse_edge_list("4 3\n0 1\n1 2\n2 3\n");
  EXPECT_EQ(g, make_path(4));
  EXPECT_THROW(parse_edge_list("3 1\n0 3\n"), std::exception);
  EXPECT_THROW(parse_edge_list("3 2\n0 1\n"), std::invalid_argument);
  EXPECT_THROW(parse_edge_list("2 1\n0 1\n9"), std::invalid_argument);
}

TEST(Complement, Examples) {
  EXPECT_EQ(complement(make_complete(3)), Graph(3));
  EXPECT_EQ(complement(complement(make_path(4))), make_path(4));
  EXPECT_NE(complement(make_cycle(5)), make_cycle(5));
  EXPECT_TRUE(brute::isomorphic(complement(make_cycle(5)), make_cycle(5)));
}

TEST(Complement, InvolutionAndDegrees) {
  brute::Rng rng(3);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 1 + rng.below(14);
    const Graph g = brute::random_graph(rng, n, rng.below(101));
    const Graph co = complement(g);
    EXPECT_EQ(complement(co), g);
    EXPECT_EQ(g.max_degree() + co.min_degree(), n - 1);
    for (int u = 0; u < n; ++u)
      for (int v = 0; v < n; ++v) EXPECT_EQ(co.has_edge(u, v), u != v && !g.has_edge(u, v));
  }
}

TEST(InducedSubgraph, Examples) {
  EXPECT_EQ(induced_subgraph(make_cycle(5), VertexSet{0, 1, 2}), make_path(3));
  EXPECT_EQ(induced_subgraph(make_cycle(5), VertexSet{}).order(), 0);
  EXPECT_EQ(induced_subgraph(make_complete(5), VertexSet{1, 3, 4}), make_complete(3));
  // Relabeling keeps sorted order: {1, 3} of P_4 is two isolated vertices.
  EXPECT_EQ(induced_subgraph(make_path(4), VertexSet{1, 2}), make_path(2));
  EXPECT_THROW(induced_subgraph(make_path(3), VertexSet{5}), std::out_of_range);
}

TEST(DisjointUnion, Examples) {
  const Graph u = disjoint_union({make_complete(2), make_complete(1)});
  EXPECT_EQ(u.order(), 3);
  EXPECT_EQ(u.edge_count(), 1);
  const Graph three = disjoint_union({make_complete(2), make_complete(2), make_complete(2)});
  EXPECT_EQ(profile(three).component_count, 3);
  EXPECT_EQ(three.edge_count(), 3);
  EXPECT_THROW(disjoint_union({Graph(40), Graph(30)}), std::length_error);
}

TEST(Profile, Path6) {
  const GraphProfile p = profile(make_path(6));
  EXPECT_EQ(p.diameter, Length(5));
  EXPECT_FALSE(p.girth.finite());
  EXPECT_EQ(p.max_degree, 2);
  EXPECT_EQ(p.min_degree, 1);
  EXPECT_EQ(p.min_nonleaf_degree, 2);
  EXPECT_EQ(p.cut_vertices, (VertexSet{1, 2, 3, 4}));
  EXPECT_TRUE(p.is_tree);
}

TEST(Profile, PetersenAndK4) {
  const GraphProfile p = profile(petersen());
  EXPECT_EQ(p.diameter, Length(2));
  EXPECT_EQ(p.girth, Length(5));
  EXPECT_EQ(p.max_degree, 3);
  EXPECT_EQ(p.min_degree, 3);
  EXPECT_TRUE(p.regular);
  const GraphProfile k4 = profile(make_complete(4));
  EXPECT_TRUE(k4.every_edge_on_triangle);
  EXPECT_EQ(k4.diameter, Length(1));
}

TEST(Profile, Conventions) {
  EXPECT_EQ(profile(Graph(0)).diameter, Length(0));
  EXPECT_FALSE(profile(Graph(0)).girth.finite());
  EXPECT_EQ(profile(Graph(1)).diameter, Length(0));
  EXPECT_FALSE(profile(Graph(3)).diameter.finite());
  EXPECT_FALSE(profile(make_complete(2)).min_nonleaf_degree.has_value());
  EXPECT_THROW((void)Length::infinite().value(), std::logic_error);
}

TEST(Profile, PathsAndCycles) {
  for (int n = 3; n <= 12; ++n) {
    EXPECT_EQ(profile(make_path(n)).diameter, Length(n - 1));
    EXPECT_EQ(profile(make_cycle(n)).girth, Length(n));
  }
}

TEST(Profile, AgreesWithReference) {
  brute::Rng rng(5);
  for (int trial = 0; trial < 400; ++trial) {
    const int n = 1 + rng.below(11);
    const Graph g = brute::random_graph(rng, n, 10 + rng.below(60));
    const GraphProfile p = profile(g);
    const int d = brute::diameter(g);
    EXPECT_EQ(p.diameter.finite(), d >= 0);
    if (d >= 0) {
      EXPECT_EQ(p.diameter.value(), d);
    }
    EXPECT_EQ(p.connected, d >= 0);
    const int girth = brute::girth(g);
    EXPECT_EQ(p.girth.finite(), girth >= 0);
    if (girth >= 0) {
      EXPECT_EQ(p.girth.value(), girth);
    }
    for (int v = 0; v < n; ++v) EXPECT_EQ(p.cut_vertices.contains(v), brute::is_cut_vertex(g, v)) << v;
    EXPECT_EQ(p.is_tree, p.connected && p.edge_count == n - 1);
    EXPECT_LE(p.min_degree * n, 2 * p.edge_count);
    EXPECT_LE(2 * p.edge_count, p.max_degree * n);
  }
}

TEST(Profile, EdgesOnTriangles) {
  for (int n = 3; n <= 10; ++n) EXPECT_TRUE(profile(make_complete(n)).every_edge_on_triangle);
  brute::Rng rng(9);
  for (int trial = 0; trial < 200; ++trial) {
    const Graph g = brute::random_graph(rng, 2 + rng.below(9), 50);
    bool pendant_edge = false;
    for (int v = 0; v < g.order(); ++v) pendant_edge |= g.degree(v) == 1;
    if (pendant_edge) {
      EXPECT_FALSE(profile(g).every_edge_on_triangle);
    }
  }
}

TEST(Profile, TreeCutVerticesAreInternalVertices) {
  brute::Rng rng(13);
  for (int trial = 0; trial < 200; ++trial) {
    const Graph t = brute::random_tree(rng, 3 + rng.below(20));
    VertexSet internal;
    for (int v = 0; v < t.order(); ++v)
      if (t.degree(v) >= 2) internal.insert(v);
    EXPECT_EQ(profile(t).cut_vertices, internal);
  }
}
