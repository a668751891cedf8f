#pragma once

#include <cstddef>
#include <vector>

#include "gha/rational.hpp"

namespace gha {

/// Target graph: complete graph with loops on m nodes, positive node weights
/// alpha and a symmetric edge-weight matrix beta. A zero beta entry plays the
/// role of a missing edge; the diagonal holds loop weights.
class WeightedGraph {
 public:
  WeightedGraph(std::vector<Rational> alpha, std::vector<std::vector<Rational>> beta);

  /// Unit node weights, 0/1 edge weights from a simple edge list.
  static WeightedGraph unweighted(std::size_t m, const std::vector<std::pair<int, int>>& edges);

  std::size_t size() const { return alpha_.size(); }
  const Rational& alpha(std::size_t i) const { return alpha_[i]; }
  const Rational& beta(std::size_t i, std::size_t j) const { return beta_[i * size() + j]; }
  const std::vector<Rational>& alphas() const { return alpha_; }

  Rational total_alpha() const;

  /// Same graph with alpha scaled to sum to 1.
  WeightedGraph normalized() const;

  /// Graph obtained by relabeling node i as perm[i].
  WeightedGraph permuted(const std::vector<int>& perm) const;

  friend bool operator==(const WeightedGraph&, const WeightedGraph&) = default;

 private:
  std::vector<Rational> alpha_;
  std::vector<Rational> beta_;  // row-major m*m
};

}  // namespace gha
