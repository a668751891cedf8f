#pragma once

#include <cstdint>
#include <vector>

#include <gmpxx.h>

#include "gha/labeled_graph.hpp"
#include "gha/quantum_graph.hpp"
#include "gha/rational.hpp"
#include "gha/weighted_graph.hpp"

namespace gha {

/// A map phi: [1,k] -> V(G), stored as k node indices.
struct MapAssignment {
  std::vector<int> targets;

  int k() const { return static_cast<int>(targets.size()); }
  friend auto operator<=>(const MapAssignment&, const MapAssignment&) = default;
};

/// Lexicographic indexing of V(G)^k: index = sum targets[i] * m^(k-1-i).
class MapSpace {
 public:
  MapSpace(std::size_t m, int k);

  std::size_t size() const { return count_; }
  int k() const { return k_; }
  std::size_t m() const { return m_; }

  MapAssignment at(std::size_t index) const;
  std::size_t index_of(const MapAssignment& phi) const;

  /// Index of phi with its last coordinate dropped, in the (k-1) space.
  std::size_t restrict_index(std::size_t index) const { return index / m_; }
  /// Index of the (k+1)-map obtained by appending c to phi.
  std::size_t extend_index(std::size_t index, std::size_t c) const { return index * m_ + c; }

 private:
  std::size_t m_;
  int k_;
  std::size_t count_;
};

Rational alpha_weight(const MapAssignment& phi, const WeightedGraph& g);

/// Weighted homomorphism number; labels of f are ignored.
Rational hom(const KLabeledGraph& f, const WeightedGraph& g);

/// hom_phi(F, G): sum over extensions psi of phi, weighted by the node
/// weights of the unlabeled nodes only.
Rational hom_partial(const KLabeledGraph& f, const WeightedGraph& g, const MapAssignment& phi);

Rational hom_quantum(const QuantumGraph& x, const WeightedGraph& g);

/// Evaluator bound to one target graph. Weights are rescaled to integers so
/// the extension sum runs in checked 64-bit arithmetic, falling back to GMP
/// integers on overflow; the final value is exact either way. Backtracking
/// skips every extension whose partial edge product is already zero.
class HomKernel {
 public:
  explicit HomKernel(const WeightedGraph& g);

  const WeightedGraph& target() const { return g_; }

  Rational partial(const KLabeledGraph& f, const MapAssignment& phi) const;
  Rational partial(const KLabeledGraph& f, std::size_t map_index) const;

  /// hom_phi(F, G) for every phi in lexicographic order (m^k entries).
  std::vector<Rational> column(const KLabeledGraph& f) const;

 private:
  struct Plan;
  Plan plan_for(const KLabeledGraph& f) const;
  Rational evaluate(const Plan& plan, const std::vector<int>& labeled) const;

  WeightedGraph g_;
  std::size_t m_;
  mpz_class alpha_den_;
  mpz_class beta_den_;
  std::vector<mpz_class> alpha_num_;
  std::vector<mpz_class> beta_num_;
  bool fits_int64_ = false;
  std::vector<std::int64_t> alpha64_;
  std::vector<std::int64_t> beta64_;
};

namespace reference {

/// Direct transcription of the definition: every extension psi of phi is
/// enumerated and alpha_psi / alpha_phi * prod(beta) is summed in rationals.
/// Slow; kept as an independent oracle for HomKernel.
Rational hom_partial(const KLabeledGraph& f, const WeightedGraph& g, const MapAssignment& phi);

/// Unweighted homomorphism count from a simple graph into a 0/1 adjacency
/// matrix, counted by plain enumeration of all node maps.
std::uint64_t count_homomorphisms(const KLabeledGraph& f, const std::vector<std::vector<int>>& adjacency);

}  // namespace reference

}  // namespace gha
