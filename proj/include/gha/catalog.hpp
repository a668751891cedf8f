#pragma once

#include <memory>
#include <string>
#include <vector>

#include "gha/labeled_graph.hpp"

namespace gha {

/// Size limits for a finite catalog of k-labeled multigraphs.
struct CatalogBounds {
  int max_nodes = 0;
  int max_total_edges = 0;
  int max_multiplicity = 1;

  /// Default truncation for label count k: k+3 nodes, 6 edges, multiplicity 2.
  static CatalogBounds defaults(int k) { return {k + 3, 6, 2}; }

  std::string str() const;
  friend auto operator<=>(const CatalogBounds&, const CatalogBounds&) = default;
};

/// All canonical k-labeled loopless multigraphs within the bounds, each
/// isomorphism class exactly once, sorted by (n, total multiplicity, edges).
struct GraphCatalog {
  int k = 0;
  CatalogBounds bounds;
  std::vector<KLabeledGraph> graphs;

  std::size_t size() const { return graphs.size(); }
};

GraphCatalog enumerate_k_labeled(int k, const CatalogBounds& bounds);

/// Memoized enumerate_k_labeled; safe to call from several threads.
std::shared_ptr<const GraphCatalog> cached_catalog(int k, const CatalogBounds& bounds);

/// Escalation schedule for catalog bounds: each step adds one node and one
/// edge until the ceiling is reached on both.
struct Escalation {
  CatalogBounds start;
  CatalogBounds ceiling;

  static Escalation defaults(int k) { return {CatalogBounds::defaults(k), {k + 5, 8, 2}}; }

  std::vector<CatalogBounds> steps() const;
};

}  // namespace gha
