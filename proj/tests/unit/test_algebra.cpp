#include "gha/algebra.hpp"

#include <random>

#include <gtest/gtest.h>

#include "gha/connection.hpp"
#include "gha/corpus.hpp"
#include "gha/hom.hpp"
#include "test_support.hpp"

namespace gha {
namespace {

using Blocks = std::vector<std::vector<std::size_t>>;

GraphCatalog catalog_of(int k, std::vector<KLabeledGraph> graphs) {
  GraphCatalog c;
  c.k = k;
  c.graphs = std::move(graphs);
  return c;
}

TEST(FK, Examples) {
  const auto g = corpus::half_edge_p3();
  EXPECT_EQ(f_k(KLabeledGraph::empty(2), g), AlgebraVector::unit(3, 2));
  EXPECT_EQ(f_k(testing::pendant_edge(), corpus::path(3)).values, (std::vector<Rational>{1, 2, 1}));
  const auto kij = f_k(testing::labeled_edge(), g);
  const MapSpace space(3, 2);
  for (std::size_t i = 0; i < space.size(); ++i) {
    const auto phi = space.at(i);
    EXPECT_EQ(kij.values[i], g.beta(phi.targets[0], phi.targets[1]));
  }
}

TEST(FK, LinearOnQuantumGraphs) {
  const auto g = corpus::looped_p3();
  const KLabeledGraph a(1, 3, {{0, 1, 1}, {1, 2, 1}});
  const KLabeledGraph b(1, 2, {{0, 1, 2}});
  const QuantumGraph x = Rational(2) * QuantumGraph(a) - Rational(1, 3) * QuantumGraph(b);
  AlgebraVector expected = f_k(a, g);
  const auto fb = f_k(b, g);
  for (std::size_t i = 0; i < expected.values.size(); ++i) expected.values[i] = 2 * expected.values[i] - Rational(1, 3) * fb.values[i];
  EXPECT_EQ(f_k(x, g), expected);
}

TEST(AlgebraProduct, UnitAndDisjointIndicators) {
  const auto x = f_k(testing::labeled_edge(), corpus::looped_p3());
  EXPECT_EQ(algebra_product(AlgebraVector::unit(3, 2), x), x);
  const auto a = AlgebraVector::indicator(3, 2, {0, 4});
  const auto b = AlgebraVector::indicator(3, 2, {1, 8});
  EXPECT_EQ(algebra_product(a, b), AlgebraVector::indicator(3, 2, {}));
  EXPECT_THROW(algebra_product(a, AlgebraVector::unit(3, 1)), std::invalid_argument);
}

TEST(InnerProducts, Examples) {
  const auto p2 = corpus::path(2);
  const QuantumGraph e1(KLabeledGraph::empty(1));
  EXPECT_EQ(inner_product_G(e1, e1, p2), Rational(2));
  EXPECT_EQ(inner_product_G(e1, QuantumGraph(1), p2), Rational(0));

  const auto g = corpus::weighted_p2();
  const MapSpace space(2, 2);
  for (std::size_t i = 0; i < space.size(); ++i) {
    for (std::size_t j = 0; j < space.size(); ++j) {
      const auto x = AlgebraVector::indicator(2, 2, {i});
      const auto y = AlgebraVector::indicator(2, 2, {j});
      EXPECT_EQ(inner_product_A(x, y, g), i == j ? alpha_weight(space.at(i), g) : Rational(0));
    }
  }

  const auto catalog = enumerate_k_labeled(1, {3, 3, 2});
  const auto m = build_M(1, g, catalog);
  for (std::size_t i = 0; i < catalog.size(); ++i) {
    const QuantumGraph f(catalog.graphs[i]);
    EXPECT_EQ(inner_product_G(f, f, g), m(i, i));
  }
}

TEST(TraceA, Examples) {
  const auto g = corpus::weighted_p2();
  EXPECT_EQ(trace_A(AlgebraVector::unit(2, 2), g),
            (AlgebraVector{1, std::vector<Rational>(2, g.total_alpha())}));
  const auto unit_weights = corpus::path(2);
  // basis map (0, 1) has index 1 in the 2-level space.
  EXPECT_EQ(trace_A(AlgebraVector::indicator(2, 2, {1}), unit_weights), AlgebraVector::indicator(2, 1, {0}));
  EXPECT_THROW(trace_A(AlgebraVector::unit(2, 0), g), std::invalid_argument);
}

// Homomorphism, isometry and trace compatibility of f_k on random pairs.
TEST(FK, StructureMapsOnCatalogPairs) {
  std::mt19937 rng(23);
  for (const auto& g : {corpus::cycle(5), corpus::half_edge_p3(), corpus::looped_p3()}) {
    for (int k = 1; k <= 2; ++k) {
      const auto catalog = cached_catalog(k, {k + 2, 3, 2});
      std::uniform_int_distribution<std::size_t> pick(0, catalog->size() - 1);
      for (int trial = 0; trial < 30; ++trial) {
        const auto& f1 = catalog->graphs[pick(rng)];
        const auto& f2 = catalog->graphs[pick(rng)];
        const auto v1 = f_k(f1, g);
        const auto v2 = f_k(f2, g);
        EXPECT_EQ(f_k(glue(f1, f2), g), algebra_product(v1, v2));
        EXPECT_EQ(inner_product_G(QuantumGraph(f1), QuantumGraph(f2), g), inner_product_A(v1, v2, g));
        EXPECT_EQ(trace_A(v1, g), f_k(trace_graph(f1), g));
      }
    }
  }
}

TEST(QuotientDimension, Examples) {
  EXPECT_EQ(quotient_dimension(0, corpus::cycle(5), enumerate_k_labeled(0, {3, 3, 2})), 1u);
  EXPECT_EQ(quotient_dimension(1, corpus::path(2), enumerate_k_labeled(1, {4, 4, 2})), 1u);
  EXPECT_EQ(quotient_dimension(2, corpus::path(3), *cached_catalog(2, CatalogBounds::defaults(2))), 4u);
  EXPECT_EQ(quotient_dimension(2, corpus::path(4), *cached_catalog(2, CatalogBounds::defaults(2))), 8u);
}

TEST(EquivalencePartition, Examples) {
  const auto p3 = corpus::path(3);
  EXPECT_EQ(equivalence_partition(1, p3, catalog_of(1, {KLabeledGraph::empty(1), testing::pendant_edge()})).blocks,
            (Blocks{{0, 2}, {1}}));
  EXPECT_EQ(equivalence_partition(2, p3, catalog_of(2, {KLabeledGraph::empty(2)})).size(), 1u);
  EXPECT_TRUE(equivalence_partition(1, corpus::asymmetric6(), *cached_catalog(1, CatalogBounds::defaults(1)))
                  .all_singletons());
}

TEST(IdempotentBasis, Identities) {
  const auto p2 = idempotent_basis(1, corpus::path(2), enumerate_k_labeled(1, {4, 4, 2}));
  ASSERT_EQ(p2.size(), 1u);
  EXPECT_EQ(p2[0], AlgebraVector::unit(2, 1));

  const auto asym = idempotent_basis(1, corpus::asymmetric6(), *cached_catalog(1, CatalogBounds::defaults(1)));
  ASSERT_EQ(asym.size(), 6u);
  for (std::size_t i = 0; i < 6; ++i) EXPECT_EQ(asym[i], AlgebraVector::indicator(6, 1, {i}));

  for (const auto& g : {corpus::cycle(5), corpus::looped_p3()}) {
    const auto w = idempotent_basis(2, g, enumerate_k_labeled(2, {4, 3, 2}));
    AlgebraVector sum = AlgebraVector::indicator(g.size(), 2, {});
    for (std::size_t i = 0; i < w.size(); ++i) {
      sum = sum + w[i];
      for (std::size_t j = 0; j < w.size(); ++j) {
        EXPECT_EQ(algebra_product(w[i], w[j]), i == j ? w[i] : AlgebraVector::indicator(g.size(), 2, {}));
      }
    }
    EXPECT_EQ(sum, AlgebraVector::unit(g.size(), 2));
  }
}

TEST(VerifyTheorem, Examples) {
  const auto p2 = verify_theorem(1, corpus::path(2), Escalation::defaults(1));
  EXPECT_EQ(p2.rank, 1u);
  EXPECT_EQ(p2.orb, 1u);
  EXPECT_TRUE(p2.equal);
  const auto p3 = verify_theorem(2, corpus::path(3), Escalation::defaults(2));
  EXPECT_TRUE(p3.quotient_applied);
  EXPECT_EQ(p3.rank, 4u);
  EXPECT_EQ(p3.orb, 4u);
  const auto p4 = verify_theorem(2, corpus::path(4), Escalation::defaults(2));
  EXPECT_FALSE(p4.quotient_applied);
  EXPECT_EQ(p4.rank, 8u);
  EXPECT_EQ(p4.settlement, Settlement::kCertified);
  const auto asym = verify_theorem(1, corpus::asymmetric6(), Escalation::defaults(1));
  EXPECT_EQ(asym.rank, 6u);
  const auto wp2 = verify_theorem(2, corpus::weighted_p2(), Escalation::defaults(2));
  EXPECT_EQ(wp2.rank, 4u);
  EXPECT_TRUE(wp2.equal);
  const auto c4 = verify_theorem(1, corpus::cycle(4), Escalation::defaults(1));
  EXPECT_TRUE(c4.quotient_applied);
  EXPECT_EQ(c4.nodes, 2u);
  EXPECT_EQ(c4.rank, 1u);
}

TEST(VerifyHomEq, Examples) {
  const auto asym = verify_homeq(1, corpus::asymmetric6(), Escalation::defaults(1));
  EXPECT_EQ(asym.verdict, Verdict::kPass);
  EXPECT_EQ(asym.equivalence_blocks, 6u);
  EXPECT_EQ(verify_homeq(2, corpus::path(4), Escalation::defaults(2)).verdict, Verdict::kPass);
  EXPECT_THROW(verify_homeq(2, corpus::path(3), Escalation::defaults(2)), NotTwinFree);
  EXPECT_THROW(verify_homeq(1, corpus::cycle(4), Escalation::defaults(1)), NotTwinFree);
}

TEST(VerifyHomRep, Examples) {
  const auto p3 = verify_homrep(1, corpus::path(3), Escalation::defaults(1));
  EXPECT_TRUE(p3.columns_invariant);
  EXPECT_EQ(p3.dimension, 2u);
  EXPECT_EQ(p3.verdict, Verdict::kPass);
  const auto asym = verify_homrep(1, corpus::asymmetric6(), Escalation::defaults(1));
  EXPECT_EQ(asym.dimension, 6u);
  EXPECT_EQ(asym.orb, 6u);
}

TEST(Closure, RestrictionAndExtension) {
  for (const auto& g : {corpus::path(3), corpus::cycle(5), corpus::half_edge_p3()}) {
    std::vector<TuplePartition> levels;
    for (int k = 0; k <= 2; ++k) levels.push_back(stabilized_equivalence(k, g, Escalation::defaults(k)).partition);
    EXPECT_TRUE(restriction_closed(levels[1], levels[0], g.size(), 1));
    EXPECT_TRUE(restriction_closed(levels[2], levels[1], g.size(), 2));
    EXPECT_TRUE(extension_closed(levels[0], levels[1], g.size(), 0));
    EXPECT_TRUE(extension_closed(levels[1], levels[2], g.size(), 1));
  }
  // A partition that merges maps with different restrictions is not closed.
  const TuplePartition coarse{{{0, 1, 2, 3}}};
  const TuplePartition fine{{{0}, {1}}};
  EXPECT_FALSE(restriction_closed(TuplePartition{{{0, 3}, {1}, {2}}}, fine, 2, 2));
  EXPECT_TRUE(restriction_closed(coarse, TuplePartition{{{0, 1}}}, 2, 2));
  EXPECT_FALSE(extension_closed(TuplePartition{{{0, 1}}}, TuplePartition{{{0, 1}, {2}, {3}}}, 2, 1));
}

}  // namespace
}  // namespace gha
