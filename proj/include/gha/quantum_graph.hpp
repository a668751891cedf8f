#pragma once

#include <map>

#include "gha/labeled_graph.hpp"
#include "gha/rational.hpp"

namespace gha {

/// Finite formal rational combination of k-labeled graphs. Keys are
/// canonical forms; zero coefficients are never stored.
class QuantumGraph {
 public:
  explicit QuantumGraph(int k) : k_(k) {}
  QuantumGraph(const KLabeledGraph& f, const Rational& coefficient = 1);

  int labels() const { return k_; }
  const std::map<KLabeledGraph, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  /// Adds coefficient * f, canonicalizing f.
  void add(const KLabeledGraph& f, const Rational& coefficient);

  QuantumGraph& operator+=(const QuantumGraph& other);
  QuantumGraph& operator-=(const QuantumGraph& other);
  QuantumGraph& operator*=(const Rational& scalar);

  friend QuantumGraph operator+(QuantumGraph a, const QuantumGraph& b) { return a += b; }
  friend QuantumGraph operator-(QuantumGraph a, const QuantumGraph& b) { return a -= b; }
  friend QuantumGraph operator*(const Rational& s, QuantumGraph a) { return a *= s; }

  friend bool operator==(const QuantumGraph&, const QuantumGraph&) = default;

 private:
  int k_;
  std::map<KLabeledGraph, Rational> terms_;
};

/// Bilinear extension of glue.
QuantumGraph quantum_product(const QuantumGraph& x, const QuantumGraph& y);

}  // namespace gha
