#include "gha/algebra.hpp"

#include <map>
#include <span>
#include <stdexcept>

#include "gha/connection.hpp"
#include "gha/hom.hpp"
#include "gha/kernels.hpp"

namespace gha {

namespace {

void check_same_shape(const AlgebraVector& x, const AlgebraVector& y) {
  if (x.k != y.k || x.values.size() != y.values.size()) {
    throw std::invalid_argument("algebra vectors have different shapes");
  }
}

constexpr std::size_t kChunk = 64;

}  // namespace

AlgebraVector AlgebraVector::unit(std::size_t m, int k) {
  return AlgebraVector{k, std::vector<Rational>(MapSpace(m, k).size(), Rational(1))};
}

AlgebraVector AlgebraVector::indicator(std::size_t m, int k, const std::vector<std::size_t>& support) {
  AlgebraVector v{k, std::vector<Rational>(MapSpace(m, k).size(), Rational(0))};
  for (std::size_t idx : support) v.values.at(idx) = 1;
  return v;
}

AlgebraVector f_k(const KLabeledGraph& f, const WeightedGraph& g) {
  return AlgebraVector{f.labels(), HomKernel(g).column(f)};
}

AlgebraVector f_k(const QuantumGraph& x, const WeightedGraph& g) {
  const HomKernel kernel(g);
  AlgebraVector out{x.labels(), std::vector<Rational>(MapSpace(g.size(), x.labels()).size(), Rational(0))};
  for (const auto& [f, c] : x.terms()) {
    const auto col = kernel.column(f);
    for (std::size_t i = 0; i < col.size(); ++i) out.values[i] += c * col[i];
  }
  return out;
}

AlgebraVector algebra_product(const AlgebraVector& x, const AlgebraVector& y) {
  check_same_shape(x, y);
  AlgebraVector out{x.k, x.values};
  for (std::size_t i = 0; i < out.values.size(); ++i) out.values[i] *= y.values[i];
  return out;
}

AlgebraVector operator+(const AlgebraVector& x, const AlgebraVector& y) {
  check_same_shape(x, y);
  AlgebraVector out{x.k, x.values};
  for (std::size_t i = 0; i < out.values.size(); ++i) out.values[i] += y.values[i];
  return out;
}

Rational inner_product_G(const QuantumGraph& x, const QuantumGraph& y, const WeightedGraph& g) {
  return hom_quantum(quantum_product(x, y), g);
}

Rational inner_product_A(const AlgebraVector& x, const AlgebraVector& y, const WeightedGraph& g) {
  check_same_shape(x, y);
  const MapSpace space(g.size(), x.k);
  if (space.size() != x.values.size()) throw std::invalid_argument("algebra vector does not match the target graph");
  Rational total = 0;
  for (std::size_t i = 0; i < x.values.size(); ++i) {
    if (x.values[i].is_zero() || y.values[i].is_zero()) continue;
    total += alpha_weight(space.at(i), g) * x.values[i] * y.values[i];
  }
  return total;
}

AlgebraVector trace_A(const AlgebraVector& x, const WeightedGraph& g) {
  if (x.k == 0) throw std::invalid_argument("trace of a 0-level algebra vector");
  const std::size_t m = g.size();
  const MapSpace lower(m, x.k - 1);
  AlgebraVector out{x.k - 1, std::vector<Rational>(lower.size(), Rational(0))};
  for (std::size_t i = 0; i < lower.size(); ++i) {
    for (std::size_t c = 0; c < m; ++c) out.values[i] += g.alpha(c) * x.values.at(i * m + c);
  }
  return out;
}

std::size_t quotient_dimension(int k, const WeightedGraph& g, const GraphCatalog& catalog) {
  return connection_rank(k, g, catalog);
}

TuplePartition equivalence_partition(int k, const WeightedGraph& g, const GraphCatalog& catalog,
                                     std::optional<std::size_t> stop_at_blocks) {
  if (catalog.k != k) throw std::invalid_argument("catalog label count differs from k");
  const HomKernel kernel(g);
  const MapSpace space(g.size(), k);
  std::vector<std::size_t> cls(space.size(), 0);
  std::size_t classes = space.size() == 0 ? 0 : 1;
  const std::size_t target = std::min(space.size(), stop_at_blocks.value_or(space.size()));
  std::span<const KLabeledGraph> graphs(catalog.graphs);
  for (std::size_t begin = 0; begin < graphs.size() && classes < target; begin += kChunk) {
    const auto columns = parallel::fill_columns(kernel, graphs.subspan(begin, std::min(kChunk, graphs.size() - begin)));
    for (const auto& col : columns) {
      std::map<std::pair<std::size_t, Rational>, std::size_t> refined;
      for (std::size_t i = 0; i < cls.size(); ++i) {
        cls[i] = refined.try_emplace({cls[i], col[i]}, refined.size()).first->second;
      }
      classes = refined.size();
      if (classes >= target) break;
    }
  }
  std::vector<std::vector<std::size_t>> blocks(classes);
  for (std::size_t i = 0; i < cls.size(); ++i) blocks[cls[i]].push_back(i);
  return Partition::normalized(std::move(blocks));
}

std::vector<AlgebraVector> idempotents_of(const TuplePartition& partition, std::size_t m, int k) {
  std::vector<AlgebraVector> out;
  out.reserve(partition.size());
  for (const auto& block : partition.blocks) out.push_back(AlgebraVector::indicator(m, k, block));
  return out;
}

std::vector<AlgebraVector> idempotent_basis(int k, const WeightedGraph& g, const GraphCatalog& catalog) {
  return idempotents_of(equivalence_partition(k, g, catalog), g.size(), k);
}

std::string to_string(Settlement s) {
  switch (s) {
    case Settlement::kCertified:
      return "certified";
    case Settlement::kStabilized:
      return "stabilized";
    case Settlement::kCeiling:
      return "ceiling";
  }
  return "unknown";
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::kPass:
      return "pass";
    case Verdict::kFail:
      return "fail";
    case Verdict::kInconclusive:
      return "inconclusive";
  }
  return "unknown";
}

TheoremReport verify_theorem(int k, const WeightedGraph& input, const Escalation& escalation) {
  TheoremReport report;
  report.k = k;
  report.quotient_applied = !twin_free(input);
  const WeightedGraph g = report.quotient_applied ? twin_quotient(input) : input;
  report.nodes = g.size();
  report.orb = orbit_count(g, k);

  const auto steps = escalation.steps();
  for (std::size_t s = 0; s < steps.size(); ++s) {
    const auto catalog = cached_catalog(k, steps[s]);
    const RankResult r = connection_rank_scan(k, g, *catalog, report.orb);
    report.rank_history.push_back(r.rank);
    report.rank = r.rank;
    report.columns_used = r.columns_used;
    report.bounds = steps[s];
    report.escalations = s;
    if (r.rank == report.orb) {
      report.settlement = Settlement::kCertified;
      break;
    }
    const auto& h = report.rank_history;
    if (h.size() >= 3 && h[h.size() - 1] == h[h.size() - 2] && h[h.size() - 2] == h[h.size() - 3]) {
      report.settlement = Settlement::kStabilized;
      break;
    }
  }
  report.equal = report.rank == report.orb;
  return report;
}

EquivalenceResult stabilized_equivalence(int k, const WeightedGraph& g, const Escalation& escalation) {
  const TuplePartition orbits = orbit_partition(g, k);
  EquivalenceResult result;
  std::vector<TuplePartition> history;
  const auto steps = escalation.steps();
  for (std::size_t s = 0; s < steps.size(); ++s) {
    const auto catalog = cached_catalog(k, steps[s]);
    result.partition = equivalence_partition(k, g, *catalog, orbits.size());
    result.bounds = steps[s];
    result.escalations = s;
    if (result.partition == orbits) {
      result.settlement = Settlement::kCertified;
      return result;
    }
    history.push_back(result.partition);
    const auto& h = history;
    if (h.size() >= 3 && h[h.size() - 1] == h[h.size() - 2] && h[h.size() - 2] == h[h.size() - 3]) {
      result.settlement = Settlement::kStabilized;
      return result;
    }
  }
  result.settlement = Settlement::kCeiling;
  return result;
}

HomEqReport verify_homeq(int k, const WeightedGraph& g, const Escalation& escalation) {
  NodePartition twins = find_twins(g);
  if (!twins.all_singletons()) throw NotTwinFree(std::move(twins));
  const TuplePartition orbits = orbit_partition(g, k);
  const EquivalenceResult eq = stabilized_equivalence(k, g, escalation);
  HomEqReport report;
  report.k = k;
  report.equivalence_blocks = eq.partition.size();
  report.orbit_blocks = orbits.size();
  report.bounds = eq.bounds;
  report.escalations = eq.escalations;
  report.verdict = eq.partition == orbits ? Verdict::kPass : Verdict::kInconclusive;
  return report;
}

HomRepReport verify_homrep(int k, const WeightedGraph& g, const Escalation& escalation) {
  HomRepReport report;
  report.k = k;
  const TuplePartition orbits = orbit_partition(g, k);
  report.orb = orbits.size();

  std::size_t dimension = 0;
  CatalogBounds bounds = escalation.start;
  std::vector<std::size_t> history;
  for (const auto& step : escalation.steps()) {
    bounds = step;
    dimension = connection_rank_scan(k, g, *cached_catalog(k, step), report.orb).rank;
    history.push_back(dimension);
    if (dimension == report.orb) break;
    const auto& h = history;
    if (h.size() >= 3 && h[h.size() - 1] == h[h.size() - 2] && h[h.size() - 2] == h[h.size() - 3]) break;
  }
  report.dimension = dimension;
  report.bounds = bounds;

  const auto catalog = cached_catalog(k, bounds);
  const auto columns = parallel::fill_columns(HomKernel(g), catalog->graphs);
  report.columns_invariant = true;
  for (const auto& col : columns) {
    for (const auto& block : orbits.blocks) {
      for (std::size_t idx : block) {
        if (col[idx] != col[block.front()]) report.columns_invariant = false;
      }
    }
  }
  report.columns_checked = columns.size();

  if (!report.columns_invariant || dimension > report.orb) {
    report.verdict = Verdict::kFail;
  } else if (dimension == report.orb) {
    report.verdict = Verdict::kPass;
  } else {
    report.verdict = Verdict::kInconclusive;
  }
  return report;
}

bool restriction_closed(const TuplePartition& level_k, const TuplePartition& level_k_minus_1, std::size_t m, int k) {
  if (k < 1) throw std::invalid_argument("restriction needs k >= 1");
  const MapSpace upper(m, k);
  const auto lower_block = level_k_minus_1.block_index(MapSpace(m, k - 1).size());
  for (const auto& block : level_k.blocks) {
    const std::size_t expected = lower_block[upper.restrict_index(block.front())];
    for (std::size_t idx : block) {
      if (lower_block[upper.restrict_index(idx)] != expected) return false;
    }
  }
  return true;
}

bool extension_closed(const TuplePartition& level_k, const TuplePartition& level_k_plus_1, std::size_t m, int k) {
  const MapSpace lower(m, k);
  const auto upper_block = level_k_plus_1.block_index(MapSpace(m, k + 1).size());
  for (const auto& block : level_k.blocks) {
    for (std::size_t phi : block) {
      for (std::size_t psi : block) {
        for (std::size_t c = 0; c < m; ++c) {
          const std::size_t target = upper_block[lower.extend_index(phi, c)];
          bool matched = false;
          for (std::size_t d = 0; d < m && !matched; ++d) matched = upper_block[lower.extend_index(psi, d)] == target;
          if (!matched) return false;
        }
      }
    }
  }
  return true;
}

}  // namespace gha
