#pragma once

#include <compare>
#include <string>
#include <vector>

namespace gha {

struct Edge {
  int u = 0;  // u < v
  int v = 0;
  int mult = 1;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Finite loopless multigraph with k labeled nodes. Nodes are 0..n-1 and
/// nodes 0..k-1 carry labels 1..k in order. Edges are kept sorted by (u, v)
/// with multiplicities merged, so structural equality is meaningful; use
/// canonical_form() before comparing up to label-preserving isomorphism.
class KLabeledGraph {
 public:
  KLabeledGraph() = default;
  KLabeledGraph(int k, int n, std::vector<Edge> edges = {});

  /// E_k: k labeled nodes and no edges.
  static KLabeledGraph empty(int k);

  int labels() const { return k_; }
  int nodes() const { return n_; }
  int unlabeled() const { return n_ - k_; }
  const std::vector<Edge>& edges() const { return edges_; }
  int total_edges() const;

  /// Multiplicity of the edge between a and b (0 if absent).
  int multiplicity(int a, int b) const;
  bool connected() const;
  bool simple() const;

  /// Same graph with labels dropped (all nodes unlabeled, k = 0).
  KLabeledGraph unlabeled_copy() const { return KLabeledGraph(0, n_, edges_); }

  std::string describe() const;

  friend auto operator<=>(const KLabeledGraph&, const KLabeledGraph&) = default;

 private:
  int k_ = 0;
  int n_ = 0;
  std::vector<Edge> edges_;
};

/// Disjoint union followed by identification of equally labeled nodes.
KLabeledGraph glue(const KLabeledGraph& a, const KLabeledGraph& b);

/// Unique representative of the label-preserving isomorphism class.
KLabeledGraph canonical_form(const KLabeledGraph& f);

/// Erases label k; that node becomes the first unlabeled node.
KLabeledGraph trace_graph(const KLabeledGraph& f);

/// Adds an isolated node carrying the new label k+1.
KLabeledGraph extend_with_isolated_label(const KLabeledGraph& f);

/// Applies a node relabeling (perm[i] is the new index of node i). Labeled
/// nodes must be fixed for the result to represent the same labeled graph.
KLabeledGraph relabel(const KLabeledGraph& f, const std::vector<int>& perm);

}  // namespace gha
