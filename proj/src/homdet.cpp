#include "gha/homdet.hpp"

#include <stdexcept>

#include "gha/hom.hpp"
#include "gha/kernels.hpp"

namespace gha {

WeightedGraph gadget_join(const WeightedGraph& g1, const WeightedGraph& g2) {
  const std::size_t m1 = g1.size();
  const std::size_t m2 = g2.size();
  const std::size_t total = m1 + m2 + 2;
  const std::size_t apex1 = m1 + m2;
  const std::size_t apex2 = apex1 + 1;
  std::vector<Rational> alpha(total, Rational(1));
  std::vector<std::vector<Rational>> beta(total, std::vector<Rational>(total, Rational(0)));
  for (std::size_t i = 0; i < m1; ++i) {
    alpha[i] = g1.alpha(i);
    for (std::size_t j = 0; j < m1; ++j) beta[i][j] = g1.beta(i, j);
    beta[i][apex1] = beta[apex1][i] = 1;
  }
  for (std::size_t i = 0; i < m2; ++i) {
    alpha[m1 + i] = g2.alpha(i);
    for (std::size_t j = 0; j < m2; ++j) beta[m1 + i][m1 + j] = g2.beta(i, j);
    beta[m1 + i][apex2] = beta[apex2][m1 + i] = 1;
  }
  beta[apex1][apex1] = 1;
  beta[apex2][apex2] = 1;
  return WeightedGraph(std::move(alpha), std::move(beta));
}

std::vector<Rational> hom_profile(const WeightedGraph& g, const GraphCatalog& patterns) {
  for (const auto& f : patterns.graphs) {
    if (f.labels() != 0 || !f.simple()) throw std::invalid_argument("profile patterns must be 0-labeled and simple");
  }
  return parallel::hom_values(HomKernel(g), patterns.graphs);
}

GraphCatalog simple_patterns(int max_nodes) {
  return *cached_catalog(0, CatalogBounds{max_nodes, max_nodes * (max_nodes - 1) / 2, 1});
}

std::string to_string(IsoVerdict::Kind kind) {
  switch (kind) {
    case IsoVerdict::Kind::kIsomorphic:
      return "isomorphic-with-witness";
    case IsoVerdict::Kind::kDistinguished:
      return "distinguished-by-pattern";
    case IsoVerdict::Kind::kInconclusive:
      return "inconclusive-at-bounds";
  }
  return "unknown";
}

IsoVerdict decide_isomorphic(const WeightedGraph& input1, const WeightedGraph& input2, int max_pattern_nodes) {
  IsoVerdict verdict;
  verdict.max_pattern_nodes = max_pattern_nodes;
  verdict.quotient_applied = !twin_free(input1) || !twin_free(input2);
  const WeightedGraph g1 = twin_free(input1) ? input1 : twin_quotient(input1);
  const WeightedGraph g2 = twin_free(input2) ? input2 : twin_quotient(input2);

  const GraphCatalog patterns = simple_patterns(max_pattern_nodes);
  const auto p1 = hom_profile(g1, patterns);
  const auto p2 = hom_profile(g2, patterns);
  for (std::size_t i = 0; i < patterns.size(); ++i) {
    if (p1[i] != p2[i]) {
      verdict.kind = IsoVerdict::Kind::kDistinguished;
      verdict.pattern = patterns.graphs[i];
      verdict.hom_first = p1[i];
      verdict.hom_second = p2[i];
      return verdict;
    }
  }
  if (auto sigma = find_isomorphism(g1, g2)) {
    verdict.kind = IsoVerdict::Kind::kIsomorphic;
    verdict.witness = std::move(sigma);
    return verdict;
  }
  verdict.kind = IsoVerdict::Kind::kInconclusive;
  return verdict;
}

}  // namespace gha
