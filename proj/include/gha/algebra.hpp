#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "gha/catalog.hpp"
#include "gha/labeled_graph.hpp"
#include "gha/quantum_graph.hpp"
#include "gha/rational.hpp"
#include "gha/symmetry.hpp"
#include "gha/weighted_graph.hpp"

namespace gha {

/// Element of the map algebra: a rational coefficient for every map
/// [1,k] -> V(G), in lexicographic map order (see MapSpace).
struct AlgebraVector {
  int k = 0;
  std::vector<Rational> values;

  /// u_k, the all-ones unit element.
  static AlgebraVector unit(std::size_t m, int k);
  /// Indicator vector of a set of map indices.
  static AlgebraVector indicator(std::size_t m, int k, const std::vector<std::size_t>& support);

  friend bool operator==(const AlgebraVector&, const AlgebraVector&) = default;
};

AlgebraVector f_k(const KLabeledGraph& f, const WeightedGraph& g);
AlgebraVector f_k(const QuantumGraph& x, const WeightedGraph& g);

/// Pointwise product; maps multiply as phi * psi = [phi == psi] phi.
AlgebraVector algebra_product(const AlgebraVector& x, const AlgebraVector& y);
AlgebraVector operator+(const AlgebraVector& x, const AlgebraVector& y);

/// <x, y> = hom(xy, G) on quantum graphs.
Rational inner_product_G(const QuantumGraph& x, const QuantumGraph& y, const WeightedGraph& g);

/// <x, y> = sum_phi alpha_phi x(phi) y(phi).
Rational inner_product_A(const AlgebraVector& x, const AlgebraVector& y, const WeightedGraph& g);

/// Contracts the last coordinate against the node weights.
AlgebraVector trace_A(const AlgebraVector& x, const WeightedGraph& g);

/// dim span{f_k(F) : F in catalog}.
std::size_t quotient_dimension(int k, const WeightedGraph& g, const GraphCatalog& catalog);

/// Maps are equivalent when their N rows agree on every catalog column.
/// With stop_at_blocks, refinement ends as soon as that many blocks exist.
TuplePartition equivalence_partition(int k, const WeightedGraph& g, const GraphCatalog& catalog,
                                     std::optional<std::size_t> stop_at_blocks = std::nullopt);

/// Indicator vectors of the equivalence classes.
std::vector<AlgebraVector> idempotent_basis(int k, const WeightedGraph& g, const GraphCatalog& catalog);
std::vector<AlgebraVector> idempotents_of(const TuplePartition& partition, std::size_t m, int k);

/// How an escalation ended.
enum class Settlement {
  kCertified,   // the finite bound met the orbit bound; exact
  kStabilized,  // value unchanged for two escalations without meeting it
  kCeiling,     // escalation ceiling reached while still changing
};

std::string to_string(Settlement s);

struct TheoremReport {
  int k = 0;
  std::size_t rank = 0;
  std::size_t orb = 0;
  bool equal = false;
  bool quotient_applied = false;
  std::size_t nodes = 0;           // nodes of the (quotiented) graph
  CatalogBounds bounds;            // bounds of the final escalation step
  std::size_t escalations = 0;     // escalation steps beyond the first
  std::size_t columns_used = 0;
  Settlement settlement = Settlement::kCeiling;
  std::vector<std::size_t> rank_history;
};

/// Escalates catalog bounds until connection_rank meets orb_k or stops
/// changing. Graphs with twins are quotiented first.
TheoremReport verify_theorem(int k, const WeightedGraph& g, const Escalation& escalation);

struct EquivalenceResult {
  TuplePartition partition;
  CatalogBounds bounds;
  std::size_t escalations = 0;
  Settlement settlement = Settlement::kCeiling;
};

/// Equivalence partition escalated until it matches the orbit partition
/// (certified) or stays unchanged for two escalations.
EquivalenceResult stabilized_equivalence(int k, const WeightedGraph& g, const Escalation& escalation);

enum class Verdict { kPass, kFail, kInconclusive };
std::string to_string(Verdict v);

struct HomEqReport {
  int k = 0;
  Verdict verdict = Verdict::kInconclusive;
  std::size_t equivalence_blocks = 0;
  std::size_t orbit_blocks = 0;
  CatalogBounds bounds;
  std::size_t escalations = 0;
};

/// Stabilized equivalence partition versus orbit partition. A mismatch at
/// the ceiling is inconclusive, never a failure. Throws NotTwinFree.
HomEqReport verify_homeq(int k, const WeightedGraph& g, const Escalation& escalation);

struct HomRepReport {
  int k = 0;
  bool columns_invariant = false;  // every catalog column constant on orbits
  std::size_t columns_checked = 0;
  std::size_t dimension = 0;
  std::size_t orb = 0;
  CatalogBounds bounds;
  Verdict verdict = Verdict::kInconclusive;
};

/// Column space of N versus automorphism-invariant vectors: checks every
/// column of the final catalog for invariance and compares the span
/// dimension (escalated) with orb_k.
HomRepReport verify_homrep(int k, const WeightedGraph& g, const Escalation& escalation);

/// Restricting equivalent k-maps gives equivalent (k-1)-maps.
bool restriction_closed(const TuplePartition& level_k, const TuplePartition& level_k_minus_1, std::size_t m, int k);

/// For equivalent k-maps phi, psi, every extension of phi has an equivalent
/// extension of psi.
bool extension_closed(const TuplePartition& level_k, const TuplePartition& level_k_plus_1, std::size_t m, int k);

}  // namespace gha
