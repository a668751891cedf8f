#include "gha/corpus.hpp"

#include "gha/catalog.hpp"

namespace gha::corpus {

WeightedGraph path(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return WeightedGraph::unweighted(static_cast<std::size_t>(n), edges);
}

WeightedGraph cycle(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return WeightedGraph::unweighted(static_cast<std::size_t>(n), edges);
}

WeightedGraph complete(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  }
  return WeightedGraph::unweighted(static_cast<std::size_t>(n), edges);
}

WeightedGraph asymmetric6() {
  return WeightedGraph::unweighted(6, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 4}, {3, 5}});
}

WeightedGraph weighted_p2() {
  return WeightedGraph({Rational(1, 3), Rational(2, 3)}, {{0, 1}, {1, 0}});
}

WeightedGraph half_edge_p3() {
  return WeightedGraph({1, 1, 1}, {{0, Rational(1, 2), 0}, {Rational(1, 2), 0, 1}, {0, 1, 0}});
}

WeightedGraph looped_p3() { return WeightedGraph({1, 1, 1}, {{2, 1, 0}, {1, 0, 1}, {0, 1, 0}}); }

std::vector<NamedGraph> connected_simple_graphs(int max_nodes) {
  const auto catalog = cached_catalog(0, CatalogBounds{max_nodes, max_nodes * (max_nodes - 1) / 2, 1});
  std::vector<NamedGraph> out;
  for (const auto& f : catalog->graphs) {
    if (f.nodes() == 0 || !f.connected()) continue;
    std::vector<std::pair<int, int>> edges;
    for (const auto& e : f.edges()) edges.emplace_back(e.u, e.v);
    out.push_back({"connected " + f.describe(), WeightedGraph::unweighted(static_cast<std::size_t>(f.nodes()), edges)});
  }
  return out;
}

std::vector<NamedGraph> weighted_targets() {
  return {{"P2 alpha=(1/3,2/3)", weighted_p2()},
          {"P3 beta(0,1)=1/2", half_edge_p3()},
          {"P3 loop(0)=2", looped_p3()}};
}

}  // namespace gha::corpus
