#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gha/catalog.hpp"
#include "gha/labeled_graph.hpp"
#include "gha/rational.hpp"
#include "gha/symmetry.hpp"
#include "gha/weighted_graph.hpp"

namespace gha {

/// Disjoint union of g1 and g2 plus two apex nodes: apex1 (index m1+m2)
/// joined to all of g1, apex2 (index m1+m2+1) joined to all of g2, both
/// with a loop. New nodes and edges have weight 1.
WeightedGraph gadget_join(const WeightedGraph& g1, const WeightedGraph& g2);

/// hom(F, G) for each catalog pattern; patterns must be 0-labeled and simple.
std::vector<Rational> hom_profile(const WeightedGraph& g, const GraphCatalog& patterns);

/// 0-labeled simple graphs on at most max_nodes nodes.
GraphCatalog simple_patterns(int max_nodes);

struct IsoVerdict {
  enum class Kind { kIsomorphic, kDistinguished, kInconclusive };

  Kind kind = Kind::kInconclusive;
  std::optional<Permutation> witness;       // kIsomorphic
  std::optional<KLabeledGraph> pattern;     // kDistinguished
  Rational hom_first;                       // hom(pattern, G1)
  Rational hom_second;                      // hom(pattern, G2)
  int max_pattern_nodes = 0;                // kInconclusive: bound reached
  bool quotient_applied = false;
};

std::string to_string(IsoVerdict::Kind kind);

/// Compares homomorphism profiles over simple patterns with at most
/// max_pattern_nodes nodes, then searches for an explicit isomorphism when
/// the profiles agree. Graphs with twins are quotiented first.
IsoVerdict decide_isomorphic(const WeightedGraph& g1, const WeightedGraph& g2, int max_pattern_nodes);

}  // namespace gha
