#include "gha/catalog.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace gha {

std::string CatalogBounds::str() const {
  std::ostringstream os;
  os << "nodes<=" << max_nodes << " edges<=" << max_total_edges << " mult<=" << max_multiplicity;
  return os.str();
}

GraphCatalog enumerate_k_labeled(int k, const CatalogBounds& bounds) {
  if (k < 0) throw std::invalid_argument("label count must be nonnegative");
  if (bounds.max_nodes < k) throw std::invalid_argument("max_nodes below the label count excludes E_k");
  if (bounds.max_total_edges < 0 || bounds.max_multiplicity < 0) {
    throw std::invalid_argument("catalog bounds must be nonnegative");
  }

  GraphCatalog catalog{k, bounds, {}};
  for (int n = k; n <= bounds.max_nodes; ++n) {
    // Level t holds every class with exactly t edges (counted with
    // multiplicity); each is reached by adding one edge to a level t-1 class.
    std::set<KLabeledGraph> level{KLabeledGraph(k, n)};
    catalog.graphs.push_back(*level.begin());
    if (n < 2 || bounds.max_multiplicity == 0) continue;
    for (int t = 1; t <= bounds.max_total_edges && !level.empty(); ++t) {
      std::set<KLabeledGraph> next;
      for (const auto& g : level) {
        for (int a = 0; a < n; ++a) {
          for (int b = a + 1; b < n; ++b) {
            if (g.multiplicity(a, b) >= bounds.max_multiplicity) continue;
            auto edges = g.edges();
            edges.push_back(Edge{a, b, 1});
            next.insert(canonical_form(KLabeledGraph(k, n, std::move(edges))));
          }
        }
      }
      for (const auto& g : next) catalog.graphs.push_back(g);
      level = std::move(next);
    }
  }
  std::stable_sort(catalog.graphs.begin(), catalog.graphs.end(), [](const KLabeledGraph& x, const KLabeledGraph& y) {
    return std::make_tuple(x.nodes(), x.total_edges(), std::cref(x.edges())) <
           std::make_tuple(y.nodes(), y.total_edges(), std::cref(y.edges()));
  });
  return catalog;
}

std::shared_ptr<const GraphCatalog> cached_catalog(int k, const CatalogBounds& bounds) {
  static std::mutex mutex;
  static std::map<std::pair<int, CatalogBounds>, std::shared_ptr<const GraphCatalog>> cache;
  {
    std::lock_guard lock(mutex);
    auto it = cache.find({k, bounds});
    if (it != cache.end()) return it->second;
  }
  auto built = std::make_shared<const GraphCatalog>(enumerate_k_labeled(k, bounds));
  std::lock_guard lock(mutex);
  return cache.try_emplace({k, bounds}, std::move(built)).first->second;
}

std::vector<CatalogBounds> Escalation::steps() const {
  std::vector<CatalogBounds> out{start};
  CatalogBounds b = start;
  while (b.max_nodes < ceiling.max_nodes || b.max_total_edges < ceiling.max_total_edges ||
         b.max_multiplicity < ceiling.max_multiplicity) {
    b.max_nodes = std::min(b.max_nodes + 1, std::max(ceiling.max_nodes, b.max_nodes));
    b.max_total_edges = std::min(b.max_total_edges + 1, std::max(ceiling.max_total_edges, b.max_total_edges));
    b.max_multiplicity = std::min(b.max_multiplicity + 1, std::max(ceiling.max_multiplicity, b.max_multiplicity));
    out.push_back(b);
  }
  return out;
}

}  // namespace gha
