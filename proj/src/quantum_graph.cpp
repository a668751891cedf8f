#include "gha/quantum_graph.hpp"

#include <stdexcept>

namespace gha {

QuantumGraph::QuantumGraph(const KLabeledGraph& f, const Rational& coefficient) : k_(f.labels()) {
  add(f, coefficient);
}

void QuantumGraph::add(const KLabeledGraph& f, const Rational& coefficient) {
  if (f.labels() != k_) throw std::invalid_argument("quantum graph: label count mismatch");
  if (coefficient.is_zero()) return;
  auto key = canonical_form(f);
  auto [it, inserted] = terms_.try_emplace(std::move(key), coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

QuantumGraph& QuantumGraph::operator+=(const QuantumGraph& other) {
  if (other.k_ != k_) throw std::invalid_argument("quantum graph: label count mismatch");
  for (const auto& [f, c] : other.terms_) add(f, c);
  return *this;
}

QuantumGraph& QuantumGraph::operator-=(const QuantumGraph& other) {
  if (other.k_ != k_) throw std::invalid_argument("quantum graph: label count mismatch");
  for (const auto& [f, c] : other.terms_) add(f, -c);
  return *this;
}

QuantumGraph& QuantumGraph::operator*=(const Rational& scalar) {
  if (scalar.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [f, c] : terms_) c *= scalar;
  return *this;
}

QuantumGraph quantum_product(const QuantumGraph& x, const QuantumGraph& y) {
  if (x.labels() != y.labels()) throw std::invalid_argument("quantum_product: label count mismatch");
  QuantumGraph out(x.labels());
  for (const auto& [f1, c1] : x.terms()) {
    for (const auto& [f2, c2] : y.terms()) out.add(glue(f1, f2), c1 * c2);
  }
  return out;
}

}  // namespace gha
