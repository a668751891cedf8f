#include "gha/weighted_graph.hpp"

#include <stdexcept>
#include <string>

namespace gha {

WeightedGraph::WeightedGraph(std::vector<Rational> alpha, std::vector<std::vector<Rational>> beta)
    : alpha_(std::move(alpha)) {
  const std::size_t m = alpha_.size();
  if (m == 0) throw std::invalid_argument("weighted graph needs at least one node");
  if (beta.size() != m) throw std::invalid_argument("beta must be an m x m matrix");
  beta_.reserve(m * m);
  for (std::size_t i = 0; i < m; ++i) {
    if (alpha_[i].sign() <= 0) {
      throw std::invalid_argument("node weight " + std::to_string(i) + " must be positive");
    }
    if (beta[i].size() != m) throw std::invalid_argument("beta must be an m x m matrix");
    for (std::size_t j = 0; j < m; ++j) beta_.push_back(beta[i][j]);
  }
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      if (beta_[i * m + j] != beta_[j * m + i]) {
        throw std::invalid_argument("beta is not symmetric at (" + std::to_string(i) + "," + std::to_string(j) +
                                    ")");
      }
    }
  }
}

WeightedGraph WeightedGraph::unweighted(std::size_t m, const std::vector<std::pair<int, int>>& edges) {
  std::vector<std::vector<Rational>> beta(m, std::vector<Rational>(m, Rational(0)));
  for (auto [u, v] : edges) {
    beta.at(u).at(v) = 1;
    beta.at(v).at(u) = 1;
  }
  return WeightedGraph(std::vector<Rational>(m, Rational(1)), std::move(beta));
}

Rational WeightedGraph::total_alpha() const {
  Rational s = 0;
  for (const auto& a : alpha_) s += a;
  return s;
}

WeightedGraph WeightedGraph::normalized() const {
  const Rational total = total_alpha();
  WeightedGraph g = *this;
  for (auto& a : g.alpha_) a /= total;
  return g;
}

WeightedGraph WeightedGraph::permuted(const std::vector<int>& perm) const {
  const std::size_t m = size();
  if (perm.size() != m) throw std::invalid_argument("permutation size mismatch");
  std::vector<Rational> alpha(m);
  std::vector<std::vector<Rational>> beta(m, std::vector<Rational>(m));
  for (std::size_t i = 0; i < m; ++i) {
    alpha[perm[i]] = alpha_[i];
    for (std::size_t j = 0; j < m; ++j) beta[perm[i]][perm[j]] = this->beta(i, j);
  }
  return WeightedGraph(std::move(alpha), std::move(beta));
}

}  // namespace gha
