#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gha/algebra.hpp"
#include "gha/catalog.hpp"
#include "gha/connection.hpp"
#include "gha/hom.hpp"
#include "gha/homdet.hpp"
#include "gha/io.hpp"
#include "gha/kernels.hpp"
#include "gha/symmetry.hpp"

namespace {

using gha::io::Json;

enum ExitCode { kOk = 0, kFailed = 1, kInputError = 2, kPolicy = 3, kInconclusive = 4 };

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::vector<std::string> inputs;
  int k = 0;
  std::optional<int> max_nodes;
  std::optional<int> max_edges;
  std::optional<int> max_mult;
  int jobs = 0;
  std::string format = "text";
  bool strict = false;
  bool simple = false;
  std::vector<int> phi;
  std::optional<int> labels;
  int max_pattern_nodes = 5;
  std::string matrix;

  gha::CatalogBounds bounds() const {
    gha::CatalogBounds b = gha::CatalogBounds::defaults(k);
    if (max_nodes) b.max_nodes = *max_nodes;
    if (max_edges) b.max_total_edges = *max_edges;
    if (max_mult) b.max_multiplicity = *max_mult;
    if (simple) b.max_multiplicity = 1;
    if (b.max_nodes < k || b.max_total_edges < 0 || b.max_multiplicity < 1) {
      throw UsageError("catalog bounds must satisfy max-nodes >= k, max-edges >= 0, max-mult >= 1");
    }
    return b;
  }

  // Explicit bounds cap the escalation; the start is clipped to them.
  gha::Escalation escalation() const {
    gha::Escalation e = gha::Escalation::defaults(k);
    if (max_nodes) e.ceiling.max_nodes = *max_nodes;
    if (max_edges) e.ceiling.max_total_edges = *max_edges;
    if (max_mult) e.ceiling.max_multiplicity = *max_mult;
    if (simple) e.ceiling.max_multiplicity = 1;
    if (e.ceiling.max_nodes < k || e.ceiling.max_total_edges < 0 || e.ceiling.max_multiplicity < 1) {
      throw UsageError("catalog bounds must satisfy max-nodes >= k, max-edges >= 0, max-mult >= 1");
    }
    e.start.max_nodes = std::min(e.start.max_nodes, e.ceiling.max_nodes);
    e.start.max_total_edges = std::min(e.start.max_total_edges, e.ceiling.max_total_edges);
    e.start.max_multiplicity = std::min(e.start.max_multiplicity, e.ceiling.max_multiplicity);
    return e;
  }
};

std::string blocks_text(const gha::Partition& p) {
  std::ostringstream os;
  for (std::size_t b = 0; b < p.blocks.size(); ++b) {
    if (b) os << ',';
    os << '{';
    for (std::size_t i = 0; i < p.blocks[b].size(); ++i) os << (i ? "," : "") << p.blocks[b][i];
    os << '}';
  }
  return os.str();
}

void print_json(const Json& j) { std::cout << j.dump(2) << '\n'; }

gha::KLabeledGraph read_pattern(const std::string& path) { return gha::io::read_labeled_graph(path); }
gha::WeightedGraph read_target(const std::string& path) { return gha::io::read_weighted_graph(path); }

int cmd_hom(const RunConfig& cfg) {
  const auto f = read_pattern(cfg.inputs.at(0));
  const auto g = read_target(cfg.inputs.at(1));
  gha::Rational value;
  if (cfg.labels && *cfg.labels != f.labels()) {
    throw UsageError("--labels " + std::to_string(*cfg.labels) + " does not match the pattern's k = " +
                     std::to_string(f.labels()));
  }
  if (!cfg.phi.empty() || cfg.labels) {
    if (static_cast<int>(cfg.phi.size()) != f.labels()) {
      throw UsageError("--phi needs exactly k = " + std::to_string(f.labels()) + " node indices");
    }
    for (int v : cfg.phi) {
      if (v < 0 || static_cast<std::size_t>(v) >= g.size()) {
        throw UsageError("--phi index " + std::to_string(v) + " is not a node of the target");
      }
    }
    value = gha::hom_partial(f, g, gha::MapAssignment{cfg.phi});
  } else {
    value = gha::hom(f, g);
  }
  if (cfg.format == "json") {
    print_json(Json{{"hom", value.str()}});
  } else {
    std::cout << value << '\n';
  }
  return kOk;
}

int cmd_rank(const RunConfig& cfg) {
  const auto g = read_target(cfg.inputs.at(0));
  const auto catalog = gha::cached_catalog(cfg.k, cfg.bounds());
  if (!cfg.matrix.empty()) {
    gha::RationalMatrix m;
    if (cfg.matrix == "N") {
      m = gha::build_N(cfg.k, g, *catalog);
    } else if (cfg.matrix == "M") {
      m = gha::build_M(cfg.k, g, *catalog);
    } else {
      throw UsageError("--matrix must be N or M");
    }
    if (cfg.format == "csv") {
      std::cout << m.to_csv();
    } else {
      print_json(gha::io::to_json(m));
    }
    return kOk;
  }
  const std::size_t rank = gha::connection_rank(cfg.k, g, *catalog);
  if (cfg.format == "json") {
    print_json(Json{{"k", cfg.k}, {"rank", rank}, {"columns", catalog->size()}, {"bounds", gha::io::to_json(catalog->bounds)}});
  } else if (cfg.format == "csv") {
    std::cout << "k,rank,columns\n" << cfg.k << ',' << rank << ',' << catalog->size() << '\n';
  } else {
    std::cout << rank << '\n';
  }
  return kOk;
}

int cmd_orbits(const RunConfig& cfg) {
  const auto g = read_target(cfg.inputs.at(0));
  const auto orbits = gha::orbit_partition(g, cfg.k);
  if (cfg.format == "json") {
    print_json(Json{{"k", cfg.k}, {"orb", orbits.size()}, {"orbits", gha::io::to_json(orbits)}});
  } else if (cfg.format == "csv") {
    std::cout << "map,orbit\n";
    const auto index = orbits.block_index(gha::MapSpace(g.size(), cfg.k).size());
    for (std::size_t i = 0; i < index.size(); ++i) std::cout << i << ',' << index[i] << '\n';
  } else {
    std::cout << orbits.size() << '\n';
  }
  return kOk;
}

int cmd_twins(const RunConfig& cfg) {
  const auto g = read_target(cfg.inputs.at(0));
  const auto twins = gha::find_twins(g);
  if (cfg.format == "json") {
    print_json(gha::io::to_json(twins));
  } else if (cfg.format == "csv") {
    std::cout << "node,class\n";
    const auto index = twins.block_index(g.size());
    for (std::size_t i = 0; i < index.size(); ++i) std::cout << i << ',' << index[i] << '\n';
  } else {
    std::cout << blocks_text(twins) << '\n';
  }
  return kOk;
}

int cmd_quotient(const RunConfig& cfg) {
  const auto g = read_target(cfg.inputs.at(0));
  print_json(gha::io::to_json(gha::twin_quotient(g)));
  return kOk;
}

int cmd_enumerate(const RunConfig& cfg) {
  const auto catalog = gha::cached_catalog(cfg.k, cfg.bounds());
  if (cfg.format == "json") {
    print_json(gha::io::to_json(*catalog));
  } else if (cfg.format == "csv") {
    std::cout << "index,k,n,edges\n";
    for (std::size_t i = 0; i < catalog->size(); ++i) {
      const auto& f = catalog->graphs[i];
      std::cout << i << ',' << f.labels() << ',' << f.nodes() << ",\"" << gha::io::to_json(f)["edges"].dump() << "\"\n";
    }
  } else {
    for (const auto& f : catalog->graphs) std::cout << f.describe() << '\n';
    std::cout << catalog->size() << " graphs\n";
  }
  return kOk;
}

Json check(const std::string& name, gha::Verdict verdict, Json detail = Json::object()) {
  Json out{{"check", name}, {"verdict", gha::to_string(verdict)}};
  for (auto it = detail.begin(); it != detail.end(); ++it) out[it.key()] = it.value();
  return out;
}

Json trace_check(int k, const gha::WeightedGraph& g, const gha::CatalogBounds& bounds) {
  if (k == 0) return check("trace", gha::Verdict::kPass, {{"graphs", 0}});
  const auto catalog = gha::cached_catalog(k, bounds);
  for (const auto& f : catalog->graphs) {
    if (gha::trace_A(gha::f_k(f, g), g) != gha::f_k(gha::trace_graph(f), g)) {
      return check("trace", gha::Verdict::kFail, {{"counterexample", gha::io::to_json(f)}});
    }
  }
  return check("trace", gha::Verdict::kPass, {{"graphs", catalog->size()}, {"bounds", gha::io::to_json(bounds)}});
}

Json idempotent_check(int k, const gha::WeightedGraph& g, const gha::TuplePartition& partition) {
  const auto basis = gha::idempotents_of(partition, g.size(), k);
  const auto zero = gha::AlgebraVector::indicator(g.size(), k, {});
  gha::AlgebraVector sum = zero;
  bool ok = true;
  for (std::size_t i = 0; i < basis.size() && ok; ++i) {
    sum = sum + basis[i];
    for (std::size_t j = 0; j < basis.size() && ok; ++j) {
      ok = gha::algebra_product(basis[i], basis[j]) == (i == j ? basis[i] : zero);
    }
  }
  ok = ok && sum == gha::AlgebraVector::unit(g.size(), k);
  const std::size_t orb = gha::orbit_count(g, k);
  gha::Verdict v = ok ? gha::Verdict::kPass : gha::Verdict::kFail;
  if (ok && basis.size() != orb) v = gha::Verdict::kInconclusive;
  return check("idempotents", v, {{"count", basis.size()}, {"orb", orb}});
}

int cmd_verify(const RunConfig& cfg) {
  const auto input = read_target(cfg.inputs.at(0));
  const auto twins = gha::find_twins(input);
  const bool has_twins = !twins.all_singletons();
  if (has_twins && cfg.strict) {
    std::cerr << "error: target has twins " << blocks_text(twins) << "; --strict forbids the quotient\n";
    print_json(Json{{"error", "not twin-free"}, {"twins", gha::io::to_json(twins)}});
    return kPolicy;
  }
  if (has_twins) std::cerr << "notice: twins " << blocks_text(twins) << "; quotient applied\n";
  const auto g = has_twins ? gha::twin_quotient(input) : input;
  const auto escalation = cfg.escalation();

  Json checks = Json::array();
  const auto theorem = gha::verify_theorem(cfg.k, g, escalation);
  Json thm = gha::io::to_json(theorem);
  checks.push_back(check("rank-equals-orbits",
                         theorem.equal ? gha::Verdict::kPass
                         : theorem.rank > theorem.orb ? gha::Verdict::kFail
                                                      : gha::Verdict::kInconclusive,
                         thm));

  const bool factorization = gha::verify_factorization(cfg.k, g, *gha::cached_catalog(cfg.k, escalation.start));
  checks.push_back(check("factorization", factorization ? gha::Verdict::kPass : gha::Verdict::kFail,
                         {{"bounds", gha::io::to_json(escalation.start)}}));

  const auto homeq = gha::verify_homeq(cfg.k, g, escalation);
  checks.push_back(check("equivalence-equals-orbits", homeq.verdict, gha::io::to_json(homeq)));

  const auto homrep = gha::verify_homrep(cfg.k, g, escalation);
  checks.push_back(check("columns-invariant", homrep.verdict, gha::io::to_json(homrep)));

  checks.push_back(check("twin-free", gha::twin_free(g) ? gha::Verdict::kPass : gha::Verdict::kFail,
                         {{"nodes", g.size()}, {"twins", gha::io::to_json(twins)}}));
  checks.push_back(trace_check(cfg.k, g, escalation.start));
  checks.push_back(idempotent_check(cfg.k, g, gha::orbit_partition(g, cfg.k)));

  bool all_pass = true;
  bool any_fail = false;
  for (const auto& c : checks) {
    all_pass = all_pass && c["verdict"] == "pass";
    any_fail = any_fail || c["verdict"] == "fail";
  }
  print_json(Json{{"k", cfg.k},
                  {"quotient_applied", has_twins},
                  {"nodes", g.size()},
                  {"rank", theorem.rank},
                  {"orb", theorem.orb},
                  {"equal", theorem.equal},
                  {"bounds", gha::io::to_json(theorem.bounds)},
                  {"escalations", theorem.escalations},
                  {"checks", checks},
                  {"all_pass", all_pass}});
  if (all_pass) return kOk;
  return any_fail ? kFailed : kInconclusive;
}

int cmd_iso(const RunConfig& cfg) {
  const auto g1 = read_target(cfg.inputs.at(0));
  const auto g2 = read_target(cfg.inputs.at(1));
  if (cfg.max_pattern_nodes < 1) throw UsageError("--max-pattern-nodes must be positive");
  const auto verdict = gha::decide_isomorphic(g1, g2, cfg.max_pattern_nodes);
  if (cfg.format == "text") {
    std::cout << gha::to_string(verdict.kind) << '\n';
  } else {
    print_json(gha::io::to_json(verdict));
  }
  return verdict.kind == gha::IsoVerdict::Kind::kInconclusive ? kInconclusive : kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact weighted graph homomorphism numbers and connection matrices"};
  app.require_subcommand(1);
  RunConfig cfg;
  if (const char* env = std::getenv("GHA_JOBS")) cfg.jobs = std::atoi(env);

  const std::vector<std::string> formats{"json", "csv", "text"};
  auto common = [&](CLI::App* sub, bool with_k, bool with_bounds) {
    sub->add_option("--jobs", cfg.jobs, "Worker threads (default $GHA_JOBS)");
    sub->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember(formats));
    if (with_k) sub->add_option("--k", cfg.k, "Number of labels")->check(CLI::NonNegativeNumber);
    if (with_bounds) {
      sub->add_option("--max-nodes", cfg.max_nodes, "Catalog node bound");
      sub->add_option("--max-edges", cfg.max_edges, "Catalog total edge bound");
      sub->add_option("--max-mult", cfg.max_mult, "Catalog edge multiplicity bound");
      sub->add_flag("--simple", cfg.simple, "Simple graphs only (max-mult 1)");
    }
  };

  auto* hom = app.add_subcommand("hom", "hom(F, G), or hom_phi(F, G) with --phi");
  hom->add_option("pattern", cfg.inputs, "k-labeled pattern JSON and weighted target JSON")->expected(2)->required();
  hom->add_option("--phi", cfg.phi, "Images of the labels, 0-based node indices")->delimiter(',');
  hom->add_option("--labels", cfg.labels, "Expected number of labels in the pattern");
  common(hom, false, false);

  auto* rank = app.add_subcommand("rank", "Rank of the connection matrix truncation");
  rank->add_option("target", cfg.inputs)->expected(1)->required();
  rank->add_option("--matrix", cfg.matrix, "Export the N or M truncation instead");
  common(rank, true, true);

  auto* orbits = app.add_subcommand("orbits", "Automorphism orbits on k-tuples");
  orbits->add_option("target", cfg.inputs)->expected(1)->required();
  common(orbits, true, false);

  auto* twins = app.add_subcommand("twins", "Twin classes");
  twins->add_option("target", cfg.inputs)->expected(1)->required();
  common(twins, false, false);

  auto* quotient = app.add_subcommand("quotient", "Twin-free quotient");
  quotient->add_option("target", cfg.inputs)->expected(1)->required();
  common(quotient, false, false);

  auto* verify = app.add_subcommand("verify", "Run every check on a target");
  verify->add_option("target", cfg.inputs)->expected(1)->required();
  verify->add_flag("--strict", cfg.strict, "Refuse targets with twins");
  common(verify, true, true);

  auto* iso = app.add_subcommand("iso", "Isomorphism test by homomorphism profiles");
  iso->add_option("targets", cfg.inputs)->expected(2)->required();
  iso->add_option("--max-pattern-nodes", cfg.max_pattern_nodes, "Largest pattern size");
  common(iso, false, false);

  auto* enumerate = app.add_subcommand("enumerate", "List the k-labeled catalog");
  common(enumerate, true, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }

  try {
    gha::set_jobs(cfg.jobs > 0 ? cfg.jobs : gha::jobs());
    if (hom->parsed()) return cmd_hom(cfg);
    if (rank->parsed()) return cmd_rank(cfg);
    if (orbits->parsed()) return cmd_orbits(cfg);
    if (twins->parsed()) return cmd_twins(cfg);
    if (quotient->parsed()) return cmd_quotient(cfg);
    if (verify->parsed()) return cmd_verify(cfg);
    if (iso->parsed()) return cmd_iso(cfg);
    if (enumerate->parsed()) return cmd_enumerate(cfg);
  } catch (const gha::io::InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  }
  return kInputError;
}
