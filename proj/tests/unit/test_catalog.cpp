#include "gha/catalog.hpp"

#include <set>

#include <gtest/gtest.h>

namespace gha {
namespace {

// Counts produced by tests/oracles/catalog_counts.py (exhaustive enumeration
// of multiplicity vectors, canonicalized over all unlabeled permutations).
struct CountCase {
  int k;
  CatalogBounds bounds;
  std::size_t expected;
};

class CatalogCount : public ::testing::TestWithParam<CountCase> {};

TEST_P(CatalogCount, MatchesExhaustiveOracle) {
  const auto& c = GetParam();
  EXPECT_EQ(enumerate_k_labeled(c.k, c.bounds).size(), c.expected);
}

INSTANTIATE_TEST_SUITE_P(Oracle, CatalogCount,
                         ::testing::Values(CountCase{1, {2, 1, 1}, 3}, CountCase{0, {1, 0, 1}, 2},
                                           CountCase{0, {5, 10, 1}, 53}, CountCase{1, {4, 6, 1}, 29},
                                           CountCase{1, {3, 3, 2}, 15}, CountCase{2, {4, 4, 2}, 122},
                                           CountCase{0, {4, 5, 2}, 41}));

TEST(Catalog, SmallCasesByHand) {
  const auto one = enumerate_k_labeled(1, {2, 1, 1});
  ASSERT_EQ(one.size(), 3u);
  EXPECT_EQ(one.graphs[0], KLabeledGraph::empty(1));
  EXPECT_EQ(one.graphs[1], KLabeledGraph(1, 2));
  EXPECT_EQ(one.graphs[2], KLabeledGraph(1, 2, {{0, 1, 1}}));

  const auto zero = enumerate_k_labeled(0, {1, 0, 1});
  ASSERT_EQ(zero.size(), 2u);
  EXPECT_EQ(zero.graphs[0].nodes(), 0);
  EXPECT_EQ(zero.graphs[1].nodes(), 1);
}

TEST(Catalog, ContainsEmptyGraphAndIsDuplicateFree) {
  for (int k = 0; k <= 3; ++k) {
    const auto c = enumerate_k_labeled(k, {k, 0, 1});
    ASSERT_EQ(c.size(), 1u);
    EXPECT_EQ(c.graphs[0], KLabeledGraph::empty(k));
  }
  const auto c = enumerate_k_labeled(2, {5, 5, 2});
  std::set<KLabeledGraph> unique;
  for (const auto& f : c.graphs) {
    EXPECT_EQ(canonical_form(f), f);
    EXPECT_LE(f.total_edges(), 5);
    for (const auto& e : f.edges()) EXPECT_LE(e.mult, 2);
    unique.insert(f);
  }
  EXPECT_EQ(unique.size(), c.size());
  EXPECT_EQ(c.graphs.front(), KLabeledGraph::empty(2));
}

TEST(Catalog, SortedByNodesEdgesThenEdgeList) {
  const auto c = enumerate_k_labeled(1, {4, 4, 2});
  for (std::size_t i = 1; i < c.size(); ++i) {
    const auto& a = c.graphs[i - 1];
    const auto& b = c.graphs[i];
    const auto ka = std::make_tuple(a.nodes(), a.total_edges(), a.edges());
    const auto kb = std::make_tuple(b.nodes(), b.total_edges(), b.edges());
    EXPECT_LT(ka, kb);
  }
  EXPECT_EQ(enumerate_k_labeled(1, {4, 4, 2}).graphs, c.graphs);
}

TEST(Catalog, MonotoneInEveryBound) {
  const CatalogBounds base{4, 3, 1};
  const std::size_t n0 = enumerate_k_labeled(1, base).size();
  EXPECT_LE(n0, enumerate_k_labeled(1, {5, 3, 1}).size());
  EXPECT_LE(n0, enumerate_k_labeled(1, {4, 4, 1}).size());
  EXPECT_LE(n0, enumerate_k_labeled(1, {4, 3, 2}).size());
}

TEST(Catalog, RejectsBoundsExcludingEmptyGraph) {
  EXPECT_THROW(enumerate_k_labeled(3, {2, 4, 1}), std::invalid_argument);
  EXPECT_THROW(enumerate_k_labeled(1, {2, -1, 1}), std::invalid_argument);
}

TEST(Catalog, CacheReturnsSameInstance) {
  const auto a = cached_catalog(1, {3, 2, 1});
  const auto b = cached_catalog(1, {3, 2, 1});
  EXPECT_EQ(a.get(), b.get());
}

TEST(Escalation, StepsGrowToCeiling) {
  const auto steps = Escalation::defaults(1).steps();
  ASSERT_EQ(steps.size(), 3u);
  EXPECT_EQ(steps[0], (CatalogBounds{4, 6, 2}));
  EXPECT_EQ(steps[1], (CatalogBounds{5, 7, 2}));
  EXPECT_EQ(steps[2], (CatalogBounds{6, 8, 2}));
}

}  // namespace
}  // namespace gha
