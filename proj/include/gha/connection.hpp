#pragma once

#include <cstddef>
#include <optional>

#include "gha/catalog.hpp"
#include "gha/matrix.hpp"
#include "gha/weighted_graph.hpp"

namespace gha {

/// Truncation of N(k, G): rows are maps [1,k] -> V(G) in lexicographic
/// order, columns are catalog graphs, entry (phi, F) = hom_phi(F, G).
RationalMatrix build_N(int k, const WeightedGraph& g, const GraphCatalog& catalog);

/// Diagonal matrix of alpha_phi over the m^k maps.
RationalMatrix build_A(int k, const WeightedGraph& g);

/// Truncation of M(k, G): entry (F1, F2) = hom(F1 F2, G).
RationalMatrix build_M(int k, const WeightedGraph& g, const GraphCatalog& catalog);

/// Checks M == N^T A N exactly on the catalog truncation. With A positive
/// diagonal this certifies that the truncation of M is positive semidefinite.
bool verify_factorization(int k, const WeightedGraph& g, const GraphCatalog& catalog);

struct RankResult {
  std::size_t rank = 0;
  std::size_t columns_used = 0;  // catalog prefix that was examined
};

/// Rank of the N truncation, i.e. dim span{f_k(F) : F in catalog}. When
/// stop_at is given, columns are consumed in catalog order only until the
/// rank reaches it (the result is then exact for the examined prefix).
RankResult connection_rank_scan(int k, const WeightedGraph& g, const GraphCatalog& catalog,
                                std::optional<std::size_t> stop_at = std::nullopt);

std::size_t connection_rank(int k, const WeightedGraph& g, const GraphCatalog& catalog);

}  // namespace gha
