#include <gtest/gtest.h>

#include "test_support.hpp"

using namespace artinrf;
using namespace artinrf::testing;

TEST(NewGraph, SingleEdge) {
  auto g = graph({"a", "b"}, {{"a", "b", 3}});
  EXPECT_EQ(g.size(), 2u);
  EXPECT_EQ(g.edge_count(), 1u);
  EXPECT_EQ(g.label("a", "b"), 3);
  EXPECT_EQ(g.label("b", "a"), 3);
}

TEST(NewGraph, SingleVertex) {
  auto g = graph({"a"}, {});
  EXPECT_EQ(g.size(), 1u);
  EXPECT_EQ(g.edge_count(), 0u);
}

TEST(NewGraph, ConflictingLabelsRejected) {
  EXPECT_THROW(graph({"a", "b"}, {{"a", "b", 3}, {"b", "a", 4}}), GraphError);
}

TEST(NewGraph, RepeatedConsistentEdgeAccepted) {
  auto g = graph({"a", "b"}, {{"a", "b", 3}, {"b", "a", 3}});
  EXPECT_EQ(g.edge_count(), 1u);
}

TEST(NewGraph, Errors) {
  EXPECT_THROW(graph({"a", "a"}, {}), GraphError);
  EXPECT_THROW(graph({"a"}, {{"a", "b", 3}}), GraphError);
  EXPECT_THROW(graph({"a", "b"}, {{"a", "a", 3}}), GraphError);
  EXPECT_THROW(graph({"a", "b"}, {{"a", "b", 1}}), GraphError);
  EXPECT_THROW(graph({"a b"}, {}), GraphError);
}

TEST(NewGraph, EdgeOrderIrrelevant) {
  auto g1 = graph({"c", "a", "b"}, {{"a", "b", 3}, {"b", "c", 4}});
  auto g2 = graph({"a", "b", "c"}, {{"c", "b", 4}, {"b", "a", 3}});
  EXPECT_EQ(g1, g2);
}

TEST(NewGraph, UnlistedPairIsInfinity) {
  auto g = graph({"a", "b"}, {});
  EXPECT_FALSE(g.label("a", "b").has_value());
  EXPECT_FALSE(g.label("a", "zz").has_value());
}

TEST(FullSubgraph, Examples) {
  auto t = triangle(3, 3, 3);
  auto ab = full_subgraph(t, VertexSet{"a", "b"});
  EXPECT_EQ(ab, graph({"a", "b"}, {{"a", "b", 3}}));
  EXPECT_EQ(full_subgraph(t, VertexSet{}).size(), 0u);
  EXPECT_EQ(full_subgraph(t, t.vertex_set()), t);
  EXPECT_THROW(full_subgraph(t, VertexSet{"a", "q"}), GraphError);
}

TEST(FullSubgraph, NestedRestrictionProperty) {
  Rng rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    auto g = random_graph(rng, static_cast<std::size_t>(uniform_int(rng, 1, 9)));
    VertexSet x, y;
    for (const auto& v : g.vertices())
      if (uniform_int(rng, 0, 2) > 0) {
        x.insert(v);
        if (uniform_int(rng, 0, 1)) y.insert(v);
      }
    auto gx = full_subgraph(g, x);
    EXPECT_EQ(full_subgraph(gx, y), full_subgraph(g, y));
    for (const auto& s : x)
      for (const auto& t : x)
        if (s != t) {
          EXPECT_EQ(gx.label(s, t), g.label(s, t));
        }
  }
}

TEST(Components, Examples) {
  EXPECT_EQ(connected_components(path({3, 3})), (std::vector<VertexSet>{{"a", "b", "c"}}));
  EXPECT_EQ(connected_components(graph({"a", "b", "c"}, {})), (std::vector<VertexSet>{{"a"}, {"b"}, {"c"}}));
  auto star = graph({"s", "t1", "t2"}, {{"s", "t1", 3}, {"s", "t2", 5}});
  EXPECT_EQ(connected_components(full_subgraph(star, VertexSet{"t1", "t2"})),
            (std::vector<VertexSet>{{"t1"}, {"t2"}}));
  EXPECT_TRUE(connected_components(graph({}, {})).empty());
}

TEST(Components, MatchUnionFindOracle) {
  Rng rng(12);
  for (int trial = 0; trial < 200; ++trial) {
    auto g = random_graph(rng, static_cast<std::size_t>(uniform_int(rng, 1, 12)), 0.2);
    auto comps = connected_components(g);
    EXPECT_EQ(std::set<VertexSet>(comps.begin(), comps.end()), union_find_components(g));
    EXPECT_TRUE(std::is_sorted(comps.begin(), comps.end(),
                               [](const VertexSet& a, const VertexSet& b) { return *a.begin() < *b.begin(); }));
    for (std::size_t i = 0; i < comps.size(); ++i)
      for (std::size_t j = i + 1; j < comps.size(); ++j)
        for (const auto& a : comps[i])
          for (const auto& b : comps[j]) EXPECT_FALSE(g.label(a, b).has_value());
  }
}

TEST(Predicates, Even) {
  EXPECT_TRUE(is_even(graph({"a", "b"}, {{"a", "b", 4}})));
  EXPECT_FALSE(is_even(graph({"a", "b"}, {{"a", "b", 3}})));
  EXPECT_TRUE(is_even(graph({"a", "b", "c"}, {})));
}

TEST(Predicates, TriangleFree) {
  EXPECT_FALSE(is_triangle_free(triangle(3, 3, 3)));
  EXPECT_TRUE(is_triangle_free(path({3, 5, 7})));
  auto square = graph({"a", "b", "c", "d"}, {{"a", "b", 2}, {"b", "c", 4}, {"c", "d", 6}, {"d", "a", 2}});
  EXPECT_TRUE(is_triangle_free(square));
}

TEST(Predicates, TriangleFreeMatchesTripleScan) {
  Rng rng(13);
  for (int trial = 0; trial < 300; ++trial) {
    auto g = random_graph(rng, static_cast<std::size_t>(uniform_int(rng, 1, 9)), 0.35);
    bool found = false;
    const auto& vs = g.vertices();
    for (std::size_t i = 0; i < vs.size(); ++i)
      for (std::size_t j = i + 1; j < vs.size(); ++j)
        for (std::size_t k = j + 1; k < vs.size(); ++k)
          found = found || (g.label(vs[i], vs[j]) && g.label(vs[j], vs[k]) && g.label(vs[i], vs[k]));
    EXPECT_EQ(is_triangle_free(g), !found);
  }
}

TEST(Predicates, Forest) {
  EXPECT_TRUE(is_forest(path({3, 3})));
  auto square = graph({"a", "b", "c", "d"}, {{"a", "b", 2}, {"b", "c", 2}, {"c", "d", 2}, {"d", "a", 2}});
  EXPECT_FALSE(is_forest(square));
  EXPECT_TRUE(is_forest(graph({"a", "b", "c", "d", "e"}, {{"a", "b", 3}, {"c", "d", 4}})));
}

TEST(Predicates, ForestImpliesTriangleFree) {
  Rng rng(14);
  int forests = 0;
  for (int trial = 0; trial < 500; ++trial) {
    auto g = random_graph(rng, static_cast<std::size_t>(uniform_int(rng, 1, 10)), 0.25);
    if (is_forest(g)) {
      ++forests;
      EXPECT_TRUE(is_triangle_free(g));
    }
  }
  for (int trial = 0; trial < 100; ++trial) EXPECT_TRUE(is_triangle_free(random_forest(rng, 12)));
  EXPECT_GT(forests, 20);
}

TEST(Presentation, AlternatingWords) {
  auto rel = [](int m) { return artin_presentation(graph({"s", "t"}, {{"s", "t", m}})).relations.at(0); };
  EXPECT_EQ(rel(3).lhs, (Word{"s", "t", "s"}));
  EXPECT_EQ(rel(3).rhs, (Word{"t", "s", "t"}));
  EXPECT_EQ(rel(2).lhs, (Word{"s", "t"}));
  EXPECT_EQ(rel(2).rhs, (Word{"t", "s"}));
  EXPECT_EQ(rel(4).lhs, (Word{"s", "t", "s", "t"}));
  EXPECT_EQ(rel(4).rhs, (Word{"t", "s", "t", "s"}));
}

TEST(Presentation, OneRelationPerFiniteEdge) {
  Rng rng(15);
  for (int trial = 0; trial < 100; ++trial) {
    auto g = random_graph(rng, 7);
    auto p = artin_presentation(g);
    EXPECT_EQ(p.generators, g.vertices());
    ASSERT_EQ(p.relations.size(), g.edge_count());
    auto edges = g.edges();
    for (std::size_t k = 0; k < edges.size(); ++k) {
      const auto& r = p.relations[k];
      EXPECT_EQ(static_cast<int>(r.lhs.size()), edges[k].label);
      EXPECT_EQ(static_cast<int>(r.rhs.size()), edges[k].label);
      for (std::size_t i = 0; i < r.lhs.size(); ++i) {
        EXPECT_EQ(r.lhs[i], i % 2 == 0 ? edges[k].from : edges[k].to);
        EXPECT_EQ(r.rhs[i], i % 2 == 0 ? edges[k].to : edges[k].from);
      }
    }
  }
}

TEST(Presentation, Format) {
  auto text = format_presentation(artin_presentation(graph({"s", "t", "u"}, {{"s", "t", 3}})));
  EXPECT_EQ(text, "generators: s t u\nrelation: s t s = t s t\n");
}

TEST(Masks, RoundTrip) {
  auto g = path({3, 4, 5});
  VertexSet x{"a", "c"};
  EXPECT_EQ(g.set_of(g.mask_of(x)), x);
  EXPECT_EQ(g.full_mask(), Mask{0b1111});
  EXPECT_THROW(g.mask_of(VertexSet{"zz"}), GraphError);
}
