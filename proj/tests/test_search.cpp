#include <gtest/gtest.h>

#include "test_support.hpp"

using namespace artinrf;
using namespace artinrf::testing;

namespace {

CoxeterGraph even_square() {
  return graph({"a", "b", "c", "d"}, {{"a", "b", 4}, {"b", "c", 2}, {"c", "d", 6}, {"d", "a", 4}});
}

// Triangle (3,3,3) on a,b,c with a pendant d hanging off a.
CoxeterGraph triangle_with_tail() {
  return graph({"a", "b", "c", "d"}, {{"a", "b", 3}, {"b", "c", 3}, {"a", "c", 3}, {"a", "d", 3}});
}

}  // namespace

TEST(FindPartition, ForestUsesSingletons) {
  Rng rng(61);
  for (int trial = 0; trial < 30; ++trial) {
    auto g = random_forest(rng, static_cast<std::size_t>(uniform_int(rng, 1, 12)));
    auto out = find_certifying_partition(g);
    ASSERT_TRUE(out.found);
    EXPECT_EQ(out.found->partition, Partition::singletons(g));
    EXPECT_EQ(out.found->condition, QuotientCondition::Forest);
    EXPECT_EQ(out.nodes_visited, 1u);
  }
}

TEST(FindPartition, EvenTriangleFreeUsesSingletons) {
  auto g = even_square();
  auto out = find_certifying_partition(g);
  ASSERT_TRUE(out.found);
  EXPECT_EQ(out.found->partition, Partition::singletons(g));
  EXPECT_EQ(out.found->condition, QuotientCondition::EvenTriangleFree);
  ASSERT_EQ(out.found->cell_certificates.size(), 4u);
  for (const auto& c : out.found->cell_certificates) EXPECT_EQ(c.tag.detail, "infinite cyclic group");
}

TEST(FindPartition, TriangleHasNone) {
  auto out = find_certifying_partition(triangle(3, 3, 3));
  EXPECT_FALSE(out.found);
  EXPECT_FALSE(out.budget_exhausted);
  EXPECT_LE(out.nodes_visited, 10u);
}

TEST(FindPartition, BudgetMustBePositive) {
  EXPECT_THROW(find_certifying_partition(path({3}), {}, 0), std::invalid_argument);
  EXPECT_THROW(certify(path({3}), {}, 0), std::invalid_argument);
}

TEST(FindPartition, NonTrivialCellFromAxiom) {
  auto g = triangle_with_tail();
  EXPECT_FALSE(find_certifying_partition(g).found);
  AxiomList axioms{{"tri333", triangle(3, 3, 3)}};
  auto out = find_certifying_partition(g, axioms);
  ASSERT_TRUE(out.found);
  EXPECT_EQ(out.found->partition, Partition({{"a", "b", "c"}, {"d"}}));
  EXPECT_EQ(out.found->condition, QuotientCondition::Forest);
  EXPECT_EQ(out.found->cell_certificates[0].tag.kind, BaseKind::UserAxiom);
}

TEST(FindPartition, OddFourCycleHasNone) {
  // Every split of the 4-cycle with labels 3 either puts two edges between
  // cells or leaves an odd cycle; the whole graph is affine, not spherical.
  auto g = graph({"a", "b", "c", "d"}, {{"a", "b", 3}, {"b", "c", 3}, {"c", "d", 3}, {"d", "a", 3}});
  auto out = find_certifying_partition(g);
  EXPECT_FALSE(out.found);
  EXPECT_FALSE(out.budget_exhausted);
}

TEST(FindPartition, SphericalCell) {
  // Triangle b,c,d with labels (3,2,3) is spherical of type A3, but as a
  // quotient it is an odd triangle. Grouping it into one cell leaves the
  // single edge a-b; the whole graph is not spherical.
  auto g = graph({"a", "b", "c", "d"}, {{"a", "b", 5}, {"b", "c", 3}, {"c", "d", 2}, {"b", "d", 3}});
  auto out = find_certifying_partition(g);
  ASSERT_TRUE(out.found);
  EXPECT_EQ(out.found->partition, Partition({{"a"}, {"b", "c", "d"}}));
  EXPECT_EQ(out.found->cell_certificates[1].tag.kind, BaseKind::SphericalType);
  auto c = certify(g);
  ASSERT_TRUE(c.certificate);
  EXPECT_TRUE(verify(g, *c.certificate).overall) << format_report(verify(g, *c.certificate));
}

TEST(FindPartition, Deterministic) {
  Rng rng(62);
  for (int trial = 0; trial < 30; ++trial) {
    auto g = random_graph(rng, static_cast<std::size_t>(uniform_int(rng, 2, 7)), 0.5, 2, 5);
    auto a = find_certifying_partition(g, {}, 5000);
    auto b = find_certifying_partition(g, {}, 5000);
    ASSERT_EQ(a.found.has_value(), b.found.has_value());
    EXPECT_EQ(a.nodes_visited, b.nodes_visited);
    EXPECT_EQ(a.budget_exhausted, b.budget_exhausted);
    if (a.found) {
      EXPECT_EQ(a.found->partition, b.found->partition);
      EXPECT_EQ(a.found->cell_certificates, b.found->cell_certificates);
    }
  }
}

TEST(FindPartition, BudgetExhaustion) {
  // Complete graph on 6 vertices with label 3: no certificate, many partitions.
  std::vector<Edge> es;
  auto vs = numbered_vertices(6);
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = i + 1; j < vs.size(); ++j) es.push_back({vs[i], vs[j], 3});
  auto g = new_graph(vs, es);
  auto small = certify(g, {}, 3);
  EXPECT_FALSE(small.certificate);
  EXPECT_TRUE(small.budget_exhausted);
  EXPECT_EQ(small.nodes_visited, 3u);
  auto full = certify(g);
  EXPECT_FALSE(full.certificate);
  EXPECT_FALSE(full.budget_exhausted);
}

TEST(Certify, ForestsAndEvenTriangleFree) {
  Rng rng(63);
  for (int trial = 0; trial < 40; ++trial) {
    auto f = random_forest(rng, static_cast<std::size_t>(uniform_int(rng, 1, 12)));
    auto cf = certify(f);
    ASSERT_TRUE(cf.certificate) << emit_graph(f);
    EXPECT_TRUE(verify(f, *cf.certificate).overall);
    auto e = random_even_triangle_free(rng, static_cast<std::size_t>(uniform_int(rng, 1, 8)));
    auto ce = certify(e);
    ASSERT_TRUE(ce.certificate) << emit_graph(e);
    EXPECT_TRUE(verify(e, *ce.certificate).overall);
  }
}

TEST(Certify, TriangleUnknown) {
  auto out = certify(triangle(3, 3, 3));
  EXPECT_FALSE(out.certificate);
  EXPECT_FALSE(out.budget_exhausted);
}

TEST(Certify, TriangleWithAxiom) {
  AxiomList axioms{{"tri333", triangle(3, 3, 3)}};
  auto out = certify(triangle(3, 3, 3), axioms);
  ASSERT_TRUE(out.certificate);
  EXPECT_EQ(out.certificate->kind, NodeKind::Base);
  EXPECT_EQ(out.certificate->tag.kind, BaseKind::UserAxiom);
  EXPECT_TRUE(verify(triangle(3, 3, 3), *out.certificate, axioms).overall);
  EXPECT_FALSE(verify(triangle(3, 3, 3), *out.certificate).overall);
}

TEST(Certify, DisconnectedRootIsFreeProduct) {
  auto g = graph({"a", "b", "c", "d", "e"}, {{"a", "b", 3}, {"c", "d", 4}, {"d", "e", 4}});
  auto out = certify(g);
  ASSERT_TRUE(out.certificate);
  EXPECT_EQ(out.certificate->kind, NodeKind::FreeProduct);
  EXPECT_EQ(out.certificate->children.size(), 2u);
  EXPECT_TRUE(verify(g, *out.certificate).overall);
}

TEST(Certify, EmptyAndTinyGraphs) {
  for (const auto& g : {graph({}, {}), graph({"a"}, {}), graph({"a", "b"}, {{"a", "b", 9}})}) {
    auto out = certify(g);
    ASSERT_TRUE(out.certificate);
    EXPECT_EQ(out.certificate->tag.kind, BaseKind::SizeLeqTwo);
    EXPECT_TRUE(verify(g, *out.certificate).overall);
  }
}

TEST(Certify, LeafSubjectsGlueToRoot) {
  Rng rng(64);
  for (int trial = 0; trial < 40; ++trial) {
    auto g = trial % 2 ? random_forest(rng, 9) : random_even_triangle_free(rng, 7);
    auto out = certify(g);
    ASSERT_TRUE(out.certificate);
    VertexSet glued;
    for (const auto& s : leaf_subjects(*out.certificate)) glued.insert(s.begin(), s.end());
    EXPECT_EQ(glued, g.vertex_set());
  }
}

TEST(Certify, ByteIdenticalAcrossRuns) {
  Rng rng(65);
  for (int trial = 0; trial < 20; ++trial) {
    auto g = random_even_triangle_free(rng, 7);
    EXPECT_EQ(serialize_certificate(*certify(g).certificate), serialize_certificate(*certify(g).certificate));
  }
}
