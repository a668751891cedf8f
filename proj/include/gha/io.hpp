#pragma once

#include <stdexcept>
#include <string>

#include <json.hpp>

#include "gha/algebra.hpp"
#include "gha/catalog.hpp"
#include "gha/homdet.hpp"
#include "gha/labeled_graph.hpp"
#include "gha/matrix.hpp"
#include "gha/symmetry.hpp"
#include "gha/weighted_graph.hpp"

namespace gha::io {

using Json = nlohmann::ordered_json;

/// Malformed or invalid input file; the message names the source and,
/// for syntax errors, the byte offset.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// {"k": int, "n": int, "edges": [[u, v, mult], ...]}
KLabeledGraph labeled_graph_from_json(const Json& j);
Json to_json(const KLabeledGraph& f);

// {"alpha": ["p/q", ...], "beta": [["p/q", ...], ...]}
WeightedGraph weighted_graph_from_json(const Json& j);
Json to_json(const WeightedGraph& g);

Json parse_text(const std::string& text, const std::string& source);
KLabeledGraph read_labeled_graph(const std::string& path);
WeightedGraph read_weighted_graph(const std::string& path);

Json to_json(const Partition& p);
Json to_json(const Permutation& p);
Json to_json(const CatalogBounds& b);
Json to_json(const RationalMatrix& m);
Json to_json(const GraphCatalog& c);
Json to_json(const TheoremReport& r);
Json to_json(const HomEqReport& r);
Json to_json(const HomRepReport& r);
Json to_json(const IsoVerdict& v);

}  // namespace gha::io
