#pragma once

#include <string>
#include <vector>

#include "gha/weighted_graph.hpp"

namespace gha::corpus {

struct NamedGraph {
  std::string name;
  WeightedGraph graph;
};

WeightedGraph path(int n);
WeightedGraph cycle(int n);
WeightedGraph complete(int n);

/// Triangle with a pendant path of length two at one corner and a pendant
/// edge at another; the smallest kind of simple graph with no nontrivial
/// automorphism.
WeightedGraph asymmetric6();

/// P2 with node weights (1/3, 2/3).
WeightedGraph weighted_p2();
/// Path 0-1-2 where edge 0-1 has weight 1/2.
WeightedGraph half_edge_p3();
/// Path 0-1-2 with a loop of weight 2 at node 0.
WeightedGraph looped_p3();

/// Every connected simple graph on 1..max_nodes nodes up to isomorphism,
/// unit weights, in catalog order.
std::vector<NamedGraph> connected_simple_graphs(int max_nodes);

/// The three weighted targets above.
std::vector<NamedGraph> weighted_targets();

}  // namespace gha::corpus
