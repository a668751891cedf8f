#include "gha/io.hpp"

#include <fstream>
#include <sstream>

namespace gha::io {

namespace {

Rational rational_from_json(const Json& j, const std::string& where) {
  try {
    if (j.is_string()) return Rational::parse(j.get<std::string>());
    if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  } catch (const std::invalid_argument& e) {
    throw InputError(where + ": " + e.what());
  }
  throw InputError(where + ": expected a rational string such as \"3/4\"");
}

int int_field(const Json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_number_integer()) {
    throw InputError(std::string("field \"") + key + "\" must be an integer");
  }
  return j.at(key).get<int>();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError(path + ": cannot open file");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace

KLabeledGraph labeled_graph_from_json(const Json& j) {
  if (!j.is_object()) throw InputError("k-labeled graph must be a JSON object");
  const int k = int_field(j, "k");
  const int n = int_field(j, "n");
  std::vector<Edge> edges;
  if (j.contains("edges")) {
    if (!j.at("edges").is_array()) throw InputError("field \"edges\" must be an array");
    std::size_t index = 0;
    for (const auto& e : j.at("edges")) {
      const std::string where = "edges[" + std::to_string(index++) + "]";
      if (!e.is_array() || (e.size() != 2 && e.size() != 3)) throw InputError(where + ": expected [u, v, mult]");
      for (const auto& x : e) {
        if (!x.is_number_integer()) throw InputError(where + ": entries must be integers");
      }
      edges.push_back(Edge{e[0].get<int>(), e[1].get<int>(), e.size() == 3 ? e[2].get<int>() : 1});
    }
  }
  try {
    return KLabeledGraph(k, n, std::move(edges));
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
}

Json to_json(const KLabeledGraph& f) {
  Json edges = Json::array();
  for (const auto& e : f.edges()) edges.push_back({e.u, e.v, e.mult});
  return Json{{"k", f.labels()}, {"n", f.nodes()}, {"edges", edges}};
}

WeightedGraph weighted_graph_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("alpha") || !j.contains("beta")) {
    throw InputError("weighted graph must be an object with \"alpha\" and \"beta\"");
  }
  const Json& a = j.at("alpha");
  const Json& b = j.at("beta");
  if (!a.is_array() || !b.is_array()) throw InputError("\"alpha\" and \"beta\" must be arrays");
  std::vector<Rational> alpha;
  for (std::size_t i = 0; i < a.size(); ++i) alpha.push_back(rational_from_json(a[i], "alpha[" + std::to_string(i) + "]"));
  std::vector<std::vector<Rational>> beta;
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (!b[i].is_array()) throw InputError("beta[" + std::to_string(i) + "] must be an array");
    auto& row = beta.emplace_back();
    for (std::size_t c = 0; c < b[i].size(); ++c) {
      row.push_back(rational_from_json(b[i][c], "beta[" + std::to_string(i) + "][" + std::to_string(c) + "]"));
    }
  }
  try {
    return WeightedGraph(std::move(alpha), std::move(beta));
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
}

Json to_json(const WeightedGraph& g) {
  Json alpha = Json::array();
  Json beta = Json::array();
  for (std::size_t i = 0; i < g.size(); ++i) {
    alpha.push_back(g.alpha(i).str());
    Json row = Json::array();
    for (std::size_t j = 0; j < g.size(); ++j) row.push_back(g.beta(i, j).str());
    beta.push_back(row);
  }
  return Json{{"alpha", alpha}, {"beta", beta}};
}

Json parse_text(const std::string& text, const std::string& source) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InputError(source + ": malformed JSON at byte " + std::to_string(e.byte) + ": " + e.what());
  }
}

KLabeledGraph read_labeled_graph(const std::string& path) {
  try {
    return labeled_graph_from_json(parse_text(read_file(path), path));
  } catch (const InputError& e) {
    const std::string msg = e.what();
    if (msg.rfind(path, 0) == 0) throw;
    throw InputError(path + ": " + msg);
  }
}

WeightedGraph read_weighted_graph(const std::string& path) {
  try {
    return weighted_graph_from_json(parse_text(read_file(path), path));
  } catch (const InputError& e) {
    const std::string msg = e.what();
    if (msg.rfind(path, 0) == 0) throw;
    throw InputError(path + ": " + msg);
  }
}

Json to_json(const Partition& p) {
  Json out = Json::array();
  for (const auto& block : p.blocks) out.push_back(block);
  return out;
}

Json to_json(const Permutation& p) { return Json(p.images); }

Json to_json(const CatalogBounds& b) {
  return Json{{"max_nodes", b.max_nodes}, {"max_total_edges", b.max_total_edges}, {"max_multiplicity", b.max_multiplicity}};
}

Json to_json(const RationalMatrix& m) {
  Json out = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c).str());
    out.push_back(row);
  }
  return out;
}

Json to_json(const GraphCatalog& c) {
  Json graphs = Json::array();
  for (const auto& f : c.graphs) graphs.push_back(to_json(f));
  return Json{{"k", c.k}, {"bounds", to_json(c.bounds)}, {"count", c.size()}, {"graphs", graphs}};
}

Json to_json(const TheoremReport& r) {
  return Json{{"k", r.k},
              {"rank", r.rank},
              {"orb", r.orb},
              {"equal", r.equal},
              {"bounds", to_json(r.bounds)},
              {"escalations", r.escalations},
              {"settlement", to_string(r.settlement)},
              {"quotient_applied", r.quotient_applied},
              {"nodes", r.nodes},
              {"columns_used", r.columns_used},
              {"rank_history", r.rank_history}};
}

Json to_json(const HomEqReport& r) {
  return Json{{"k", r.k},
              {"verdict", to_string(r.verdict)},
              {"equivalence_blocks", r.equivalence_blocks},
              {"orbit_blocks", r.orbit_blocks},
              {"bounds", to_json(r.bounds)},
              {"escalations", r.escalations}};
}

Json to_json(const HomRepReport& r) {
  return Json{{"k", r.k},
              {"verdict", to_string(r.verdict)},
              {"columns_invariant", r.columns_invariant},
              {"columns_checked", r.columns_checked},
              {"dimension", r.dimension},
              {"orb", r.orb},
              {"bounds", to_json(r.bounds)}};
}

Json to_json(const IsoVerdict& v) {
  Json out{{"verdict", to_string(v.kind)}, {"quotient_applied", v.quotient_applied}};
  switch (v.kind) {
    case IsoVerdict::Kind::kIsomorphic:
      out["witness"] = to_json(*v.witness);
      break;
    case IsoVerdict::Kind::kDistinguished:
      out["witness"] = to_json(*v.pattern);
      out["hom_first"] = v.hom_first.str();
      out["hom_second"] = v.hom_second.str();
      break;
    case IsoVerdict::Kind::kInconclusive:
      out["witness"] = Json{{"max_pattern_nodes", v.max_pattern_nodes}};
      break;
  }
  return out;
}

}  // namespace gha::io
