#include "gha/connection.hpp"

#include <algorithm>
#include <span>
#include <stdexcept>

#include "gha/hom.hpp"
#include "gha/kernels.hpp"

namespace gha {

namespace {

void check_catalog(int k, const GraphCatalog& catalog) {
  if (catalog.k != k) throw std::invalid_argument("catalog label count differs from k");
}

constexpr std::size_t kChunk = 64;

}  // namespace

RationalMatrix build_N(int k, const WeightedGraph& g, const GraphCatalog& catalog) {
  check_catalog(k, catalog);
  const HomKernel kernel(g);
  const MapSpace space(g.size(), k);
  return RationalMatrix::from_columns(space.size(), parallel::fill_columns(kernel, catalog.graphs));
}

RationalMatrix build_A(int k, const WeightedGraph& g) {
  const MapSpace space(g.size(), k);
  std::vector<Rational> diag;
  diag.reserve(space.size());
  for (std::size_t i = 0; i < space.size(); ++i) diag.push_back(alpha_weight(space.at(i), g));
  return RationalMatrix::diagonal(diag);
}

RationalMatrix build_M(int k, const WeightedGraph& g, const GraphCatalog& catalog) {
  check_catalog(k, catalog);
  const HomKernel kernel(g);
  const std::size_t n = catalog.size();
  const auto values = parallel::gluing_values(kernel, catalog.graphs);
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m(i, j) = values[i * n + j];
  }
  return m;
}

bool verify_factorization(int k, const WeightedGraph& g, const GraphCatalog& catalog) {
  const RationalMatrix n = build_N(k, g, catalog);
  const RationalMatrix a = build_A(k, g);
  const RationalMatrix m = build_M(k, g, catalog);
  return m == n.transpose() * a * n;
}

RankResult connection_rank_scan(int k, const WeightedGraph& g, const GraphCatalog& catalog,
                                std::optional<std::size_t> stop_at) {
  check_catalog(k, catalog);
  const HomKernel kernel(g);
  const MapSpace space(g.size(), k);
  const std::size_t ceiling = std::min(space.size(), stop_at.value_or(space.size()));
  EchelonBasis basis(space.size());
  RankResult result;
  std::span<const KLabeledGraph> graphs(catalog.graphs);
  for (std::size_t begin = 0; begin < graphs.size() && basis.rank() < ceiling; begin += kChunk) {
    const auto chunk = graphs.subspan(begin, std::min(kChunk, graphs.size() - begin));
    const auto columns = parallel::fill_columns(kernel, chunk);
    for (const auto& col : columns) {
      ++result.columns_used;
      basis.insert(col);
      if (basis.rank() >= ceiling) break;
    }
  }
  result.rank = basis.rank();
  return result;
}

std::size_t connection_rank(int k, const WeightedGraph& g, const GraphCatalog& catalog) {
  return connection_rank_scan(k, g, catalog).rank;
}

}  // namespace gha
