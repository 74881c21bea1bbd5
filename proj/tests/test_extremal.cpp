#include <gtest/gtest.h>

#include "lkpack/bounds.hpp"
#include "lkpack/corpus.hpp"
#include "lkpack/extremal.hpp"
#include "support/brute.hpp"

using namespace lkpack;

namespace {

bool in_class_G_exact(const Graph& g) {
  return limited_packing_bb(g, 2).value == g.order() + 1 - g.max_degree();
}

// Connected samples used by the L_k = k and class G sweeps.
std::vector<Graph> connected_samples() {
  std::vector<Graph> out;
  for (int n = 7; n <= 9; ++n) {
    for (double p : {0.3, 0.6, 0.85}) {
      auto batch = random_connected(n, 60, 500 + n, p);
      out.insert(out.end(), batch.begin(), batch.end());
    }
  }
  return out;
}

}  // namespace

TEST(LkEqualsK, Examples) {
  EXPECT_TRUE(check_Lk_equals_k(make_complete(4), 2));
  EXPECT_FALSE(check_Lk_equals_k(make_cycle(6), 1));
  EXPECT_TRUE(check_Lk_equals_k(make_cycle(4), 1));
  EXPECT_TRUE(check_Lk_equals_k(make_complete(2), 2));
  EXPECT_FALSE(check_Lk_equals_k(make_complete(2), 3));
  EXPECT_THROW(check_Lk_equals_k(make_path(3), 0), std::invalid_argument);
}

TEST(LkEqualsK, MatchesExactOnAllLabeledUpTo6) {
  for (int n = 1; n <= 6; ++n)
    for_each_labeled_graph(n, [](const Graph& g) {
      for (int k = 1; k <= 3; ++k) {
        const bool eq = limited_packing_bb(g, k).value == k;
        ASSERT_EQ(check_Lk_equals_k(g, k), eq) << emit_graph6(g) << " k=" << k;
        if (eq && g.order() >= k + 1) {
          const GraphProfile p = profile(g);
          EXPECT_TRUE(p.diameter.at_most(2) && p.connected) << emit_graph6(g);
        }
      }
    });
}

TEST(LkEqualsK, MatchesExactOnConnectedSamples) {
  for (const Graph& g : connected_samples())
    for (int k = 1; k <= 3; ++k) {
      const bool eq = limited_packing_bb(g, k).value == k;
      ASSERT_EQ(check_Lk_equals_k(g, k), eq) << emit_graph6(g) << " k=" << k;
      if (eq) {
        EXPECT_TRUE(profile(g).diameter.at_most(2)) << emit_graph6(g);
      }
    }
}

TEST(ClassG, Examples) {
  const Graph star = make_star(5);
  const auto w = recognize_class_G(star);
  ASSERT_TRUE(w);
  EXPECT_TRUE(is_class_G_witness(star, *w));
  EXPECT_EQ(w->a0, star.vertices());
  EXPECT_TRUE(in_class_G_exact(star));

  EXPECT_FALSE(recognize_class_G(make_cycle(6)));
  EXPECT_FALSE(in_class_G_exact(make_cycle(6)));

  const auto k2 = recognize_class_G(make_complete(2));
  ASSERT_TRUE(k2);
  EXPECT_EQ(k2->a0, (VertexSet{0, 1}));
  EXPECT_EQ(k2->b0, (VertexSet{0, 1}));
}

TEST(ClassG, WitnessValidator) {
  const Graph p4 = make_path(4);
  EXPECT_FALSE(is_class_G_witness(p4, {VertexSet{0, 1, 2}, VertexSet{0, 1, 2, 3}}));
  EXPECT_FALSE(is_class_G_witness(p4, {VertexSet{0, 1}, VertexSet{2, 3}}));
}

TEST(ClassG, MatchesExactOnAllLabeledUpTo6) {
  for (int n = 1; n <= 6; ++n)
    for_each_labeled_graph(n, [](const Graph& g) {
      const auto w = recognize_class_G(g);
      ASSERT_EQ(w.has_value(), in_class_G_exact(g)) << emit_graph6(g);
      if (w) {
        EXPECT_TRUE(is_class_G_witness(g, *w));
      }
      EXPECT_EQ(recognize_class_G_structural(g).has_value(), w.has_value()) << emit_graph6(g);
    });
}

TEST(ClassG, MatchesExactOnConnectedSamples) {
  for (const Graph& g : connected_samples()) {
    ASSERT_EQ(recognize_class_G(g).has_value(), in_class_G_exact(g)) << emit_graph6(g);
    EXPECT_EQ(recognize_class_G_structural(g).has_value(), recognize_class_G_exhaustive(g).has_value());
  }
}

TEST(Spider, Examples) {
  const auto p3 = recognize_spider(make_path(3));
  ASSERT_TRUE(p3);
  EXPECT_EQ(*p3, (SpiderShape{1, 0, 2}));
  EXPECT_TRUE(is_small_spider(make_path(3)));

  const auto p5 = recognize_spider(make_path(5));
  ASSERT_TRUE(p5);
  EXPECT_EQ(p5->t, 2);
  EXPECT_EQ(p5->s, 0);
  EXPECT_FALSE(is_small_spider(make_path(5)));

  const Graph double_star = Graph::from_edges(6, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {1, 5}});
  EXPECT_FALSE(recognize_spider(double_star));
  EXPECT_THROW(recognize_spider(make_cycle(4)), std::invalid_argument);
}

TEST(Spider, ConstructedShapesRoundTrip) {
  for (int t = 0; t <= 5; ++t)
    for (int s = 0; s <= 5; ++s) {
      if (t + s < 2) continue;
      const Graph g = make_spider(t, s);
      const auto shape = recognize_spider(g);
      ASSERT_TRUE(shape);
      EXPECT_EQ(shape->t + shape->s, t + s);
      EXPECT_LE(shape->t, t);
      EXPECT_EQ(g.order(), 1 + 2 * t + s);
    }
}

TEST(ClassT, Examples) {
  const auto star = recognize_class_T(make_star(4));
  ASSERT_TRUE(star);
  EXPECT_EQ(star->s0, (VertexSet{0, 1}));
  EXPECT_EQ(star->r0, (VertexSet{2, 3}));

  EXPECT_FALSE(recognize_class_T(make_path(4)));
  EXPECT_EQ(open_packing_number(make_path(4)).value, 2);
  EXPECT_EQ(limited_packing_bb(make_path(4), 2).value, 3);

  const auto k2 = recognize_class_T(make_complete(2));
  ASSERT_TRUE(k2);
  EXPECT_EQ(k2->s0, (VertexSet{0, 1}));
  EXPECT_TRUE(k2->r0.empty());
  EXPECT_THROW(recognize_class_T(make_complete(3)), std::invalid_argument);
}

TEST(Trees, CharacterizationsOnAllTreesUpTo10) {
  int trees = 0;
  for (int n = 2; n <= 10; ++n)
    for_each_tree(n, true, [&](const Graph& t) {
      ++trees;
      const int l1 = limited_packing_bb(t, 1).value;
      const int l2 = limited_packing_bb(t, 2).value;
      const int rho0 = open_packing_number(t).value;
      const int gamma = domination_number(t).value;
      ASSERT_EQ(is_small_spider(t), l2 == l1 + 1) << emit_graph6(t);
      EXPECT_LE(l1 + 1, l2);
      EXPECT_LE(l2, 2 * l1);
      const auto w = recognize_class_T(t);
      ASSERT_EQ(w.has_value(), rho0 == l2) << emit_graph6(t);
      if (w) {
        EXPECT_TRUE(is_class_T_witness(t, *w));
      }
      EXPECT_EQ(recognize_class_T_structural(t).has_value(), recognize_class_T_exhaustive(t).has_value());
      EXPECT_LE(rho0, l2);
      EXPECT_LE(l2, 2 * rho0);
      EXPECT_EQ(l2 == 2 * l1, l2 == 2 * gamma);
    });
  // Unlabeled trees on 2..10 vertices: 1 1 2 3 6 11 23 47 106.
  EXPECT_EQ(trees, 200);
}

TEST(Constructions, Diam2) {
  EXPECT_TRUE(brute::isomorphic(construct_diam2(2), make_path(3)));
  const int expected_order[] = {3, 6, 10, 15, 21};
  for (int a = 2; a <= 6; ++a) {
    const Graph g = construct_diam2(a);
    EXPECT_EQ(g.order(), expected_order[a - 2]);
    EXPECT_EQ(profile(g).diameter, Length(2));
    EXPECT_EQ(limited_packing_bb(g, 2).value, a);
  }
  EXPECT_THROW(construct_diam2(1), std::invalid_argument);
  EXPECT_THROW(construct_diam2(11), std::length_error);
}

TEST(Constructions, PrescribedTrees) {
  for (int a = 2; a <= 5; ++a)
    for (int b = a + 1; b <= 2 * a; ++b) {
      const Graph t = construct_tree_prescribed(a, b);
      ASSERT_TRUE(is_tree(t));
      EXPECT_EQ(open_packing_number(t).value, a) << a << "," << b;
      EXPECT_EQ(limited_packing_oracle(t, 1).value, a) << a << "," << b;
      EXPECT_EQ(limited_packing_oracle(t, 2).value, b) << a << "," << b;
    }
  const Graph big = construct_tree_prescribed(8, 12);
  EXPECT_EQ(big.order(), 19);
  EXPECT_EQ(open_packing_number(big).value, 8);
  EXPECT_EQ(limited_packing_bb(big, 1).value, 8);
  EXPECT_EQ(limited_packing_bb(big, 2).value, 12);
  EXPECT_EQ(construct_tree_prescribed(2, 4).order(), 6);
  EXPECT_THROW(construct_tree_prescribed(3, 3), std::invalid_argument);
  EXPECT_THROW(construct_tree_prescribed(3, 7), std::invalid_argument);
}

TEST(FamilySpec, Examples) {
  const Graph spider = construct_family("spider:3,2");
  EXPECT_EQ(spider.order(), 9);
  EXPECT_EQ(spider.max_degree(), 5);
  const Graph kne = construct_family("complete_minus_edge:5");
  EXPECT_EQ(limited_packing_bb(kne, 1).value, 1);
  EXPECT_EQ(limited_packing_bb(complement(kne), 1).value, 4);
  EXPECT_EQ(construct_family("star:6"), make_complete_bipartite(1, 5));
  EXPECT_EQ(construct_family("complete:2+empty:1"), disjoint_union({make_complete(2), make_empty(1)}));
  EXPECT_EQ(construct_family("prescribed:8,12"), construct_tree_prescribed(8, 12));
  EXPECT_EQ(construct_family("diam2:4"), construct_diam2(4));
  EXPECT_EQ(construct_family("path:7"), make_path(7));
}

TEST(FamilySpec, Errors) {
  for (const char* bad : {"", "path", "path:", "path:x", "path:3,", "spider:3", "blob:2", "cycle:2",
                          "complete:40+complete:40", "path:3+"})
    EXPECT_ANY_THROW(construct_family(bad)) << bad;
}
