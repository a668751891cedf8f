#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

#include "gha/weighted_graph.hpp"

namespace gha {

/// Partition of a finite index set into blocks. Blocks are sorted
/// internally and ordered by their smallest element, so equal partitions
/// compare equal.
struct Partition {
  std::vector<std::vector<std::size_t>> blocks;

  std::size_t size() const { return blocks.size(); }
  bool all_singletons() const;
  /// block_of[x] for every element of the ground set [0, ground_size).
  std::vector<std::size_t> block_index(std::size_t ground_size) const;

  /// Builds the normalized partition from per-element labels.
  template <class Label>
  static Partition from_labels(const std::vector<Label>& labels);
  static Partition normalized(std::vector<std::vector<std::size_t>> blocks);

  friend bool operator==(const Partition&, const Partition&) = default;
};

/// Node partition of V(G) and partition of V(G)^k (maps in lexicographic
/// index order, see MapSpace).
using NodePartition = Partition;
using TuplePartition = Partition;

/// images[i] is the image of node i.
struct Permutation {
  std::vector<int> images;

  static Permutation identity(std::size_t m);
  Permutation compose(const Permutation& after) const;  // after o this
  Permutation inverse() const;
  bool bijective() const;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;
};

/// Rejection of an input that has twins where twin-freeness is required.
class NotTwinFree : public std::invalid_argument {
 public:
  explicit NotTwinFree(NodePartition twins);
  const NodePartition& twins() const { return twins_; }

 private:
  NodePartition twins_;
};

NodePartition find_twins(const WeightedGraph& g);
bool twin_free(const WeightedGraph& g);

/// Merges twin classes: node weights add, edge weights come from any
/// representative (all representatives are compared). Class order follows
/// find_twins.
WeightedGraph twin_quotient(const WeightedGraph& g);

/// All permutations preserving alpha and beta, identity first, sorted.
std::vector<Permutation> automorphisms(const WeightedGraph& g);

/// Whether sigma maps alpha and beta of g onto themselves.
bool is_automorphism(const WeightedGraph& g, const Permutation& sigma);

/// Orbits of Aut(G) on V(G)^k under coordinatewise action.
TuplePartition orbit_partition(const WeightedGraph& g, int k);
std::size_t orbit_count(const WeightedGraph& g, int k);

/// Exhausts all m^m self-maps and checks that every beta-preserving one is
/// a bijection. Throws NotTwinFree when g has twins.
bool verify_twin_free_rigidity(const WeightedGraph& g);

/// Isomorphism G1 -> G2 (images[i] is the node of G2 matched to node i of
/// G1) preserving node and edge weights, if one exists.
std::optional<Permutation> find_isomorphism(const WeightedGraph& g1, const WeightedGraph& g2);

template <class Label>
Partition Partition::from_labels(const std::vector<Label>& labels) {
  std::vector<std::vector<std::size_t>> blocks;
  std::vector<const Label*> keys;
  for (std::size_t x = 0; x < labels.size(); ++x) {
    std::size_t b = 0;
    while (b < keys.size() && !(*keys[b] == labels[x])) ++b;
    if (b == keys.size()) {
      keys.push_back(&labels[x]);
      blocks.emplace_back();
    }
    blocks[b].push_back(x);
  }
  return normalized(std::move(blocks));
}

}  // namespace gha
