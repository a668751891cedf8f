#include "gha/homdet.hpp"

#include <random>

#include <gtest/gtest.h>

#include "gha/corpus.hpp"
#include "gha/hom.hpp"
#include "test_support.hpp"

namespace gha {
namespace {

WeightedGraph shuffled(const WeightedGraph& g, std::mt19937& rng) {
  std::vector<int> perm(g.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  return g.permuted(perm);
}

TEST(Gadget, Shape) {
  const auto g1 = corpus::path(3);
  const auto g2 = corpus::weighted_p2();
  const auto h = gadget_join(g1, g2);
  ASSERT_EQ(h.size(), 7u);
  EXPECT_EQ(h.alpha(3), Rational(1, 3));
  EXPECT_EQ(h.alpha(5), Rational(1));
  EXPECT_EQ(h.beta(5, 5), Rational(1));
  EXPECT_EQ(h.beta(6, 6), Rational(1));
  EXPECT_EQ(h.beta(5, 6), Rational(0));
  for (std::size_t i = 0; i < 3; ++i) {
    EXPECT_EQ(h.beta(5, i), Rational(1));
    EXPECT_EQ(h.beta(6, i), Rational(0));
  }
  for (std::size_t i = 3; i < 5; ++i) {
    EXPECT_EQ(h.beta(6, i), Rational(1));
    EXPECT_EQ(h.beta(5, i), Rational(0));
    for (std::size_t j = 0; j < 3; ++j) EXPECT_EQ(h.beta(i, j), Rational(0));
  }
  EXPECT_EQ(h.beta(3, 4), Rational(1));
}

// With G1 = G2 the two apex nodes are interchangeable, so every 1-labeled
// pattern sees them alike.
TEST(Gadget, ApexValuesAgreeForEqualHalves) {
  const auto catalog = cached_catalog(1, {4, 4, 1});
  for (const auto& g : {corpus::path(3), corpus::half_edge_p3()}) {
    const auto h = gadget_join(g, g);
    const HomKernel kernel(h);
    const int a1 = static_cast<int>(2 * g.size());
    for (const auto& f : catalog->graphs) {
      EXPECT_EQ(kernel.partial(f, MapAssignment{{a1}}), kernel.partial(f, MapAssignment{{a1 + 1}})) << f.describe();
    }
  }
}

TEST(Gadget, ApexValuesDifferForDifferentHalves) {
  const auto h = gadget_join(corpus::complete(3), corpus::path(3));
  const HomKernel kernel(h);
  // Triangle through the label.
  const KLabeledGraph tri(1, 3, {{0, 1, 1}, {1, 2, 1}, {0, 2, 1}});
  EXPECT_NE(kernel.partial(tri, MapAssignment{{6}}), kernel.partial(tri, MapAssignment{{7}}));
}

TEST(Profile, Examples) {
  const GraphCatalog patterns = simple_patterns(3);
  ASSERT_EQ(patterns.size(), 8u);
  const auto k3 = hom_profile(corpus::complete(3), patterns);
  const auto p3 = hom_profile(corpus::path(3), patterns);
  for (std::size_t i = 0; i < patterns.size(); ++i) {
    if (patterns.graphs[i] == testing::triangle()) {
      EXPECT_EQ(k3[i], Rational(6));
      EXPECT_EQ(p3[i], Rational(0));
    }
  }
  GraphCatalog bad;
  bad.graphs = {testing::pendant_edge()};
  EXPECT_THROW(hom_profile(corpus::path(3), bad), std::invalid_argument);
}

TEST(DecideIsomorphic, PermutedCopiesGetWitness) {
  std::mt19937 rng(5);
  for (const auto& g : {corpus::path(4), corpus::asymmetric6(), corpus::half_edge_p3(), corpus::weighted_p2()}) {
    const auto h = shuffled(g, rng);
    const auto v = decide_isomorphic(g, h, 4);
    ASSERT_EQ(v.kind, IsoVerdict::Kind::kIsomorphic);
    ASSERT_TRUE(v.witness.has_value());
    EXPECT_EQ(g.permuted(v.witness->images), h);
  }
}

TEST(DecideIsomorphic, DistinguishesWithPattern) {
  const auto g1 = corpus::complete(3);
  const auto g2 = corpus::path(3);
  const auto v = decide_isomorphic(g1, g2, 4);
  ASSERT_EQ(v.kind, IsoVerdict::Kind::kDistinguished);
  ASSERT_TRUE(v.pattern.has_value());
  EXPECT_NE(v.hom_first, v.hom_second);
  EXPECT_EQ(hom(*v.pattern, g1), v.hom_first);
  EXPECT_EQ(hom(*v.pattern, g2), v.hom_second);
}

TEST(DecideIsomorphic, DifferentSizesAndWeights) {
  EXPECT_EQ(decide_isomorphic(corpus::path(3), corpus::path(4), 3).kind, IsoVerdict::Kind::kDistinguished);
  const WeightedGraph p2_heavy({Rational(2, 3), Rational(2, 3)}, {{0, 1}, {1, 0}});
  EXPECT_EQ(decide_isomorphic(corpus::weighted_p2(), p2_heavy, 3).kind, IsoVerdict::Kind::kDistinguished);
}

TEST(DecideIsomorphic, InconclusiveAtTinyBound) {
  // C6 and two disjoint triangles agree on every pattern with at most 2 nodes.
  std::vector<std::pair<int, int>> tt{{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}};
  const auto v = decide_isomorphic(corpus::cycle(6), WeightedGraph::unweighted(6, tt), 2);
  EXPECT_EQ(v.kind, IsoVerdict::Kind::kInconclusive);
  EXPECT_EQ(v.max_pattern_nodes, 2);
  EXPECT_EQ(decide_isomorphic(corpus::cycle(6), WeightedGraph::unweighted(6, tt), 3).kind,
            IsoVerdict::Kind::kDistinguished);
}

TEST(DecideIsomorphic, QuotientsTwins) {
  const auto v = decide_isomorphic(corpus::cycle(4), corpus::path(2), 3);
  EXPECT_TRUE(v.quotient_applied);
}

}  // namespace
}  // namespace gha
