#include "gha/labeled_graph.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace gha {

namespace {

std::vector<Edge> normalize_edges(std::vector<Edge> edges, int n) {
  for (auto& e : edges) {
    if (e.u == e.v) throw std::invalid_argument("k-labeled graphs are loopless");
    if (e.u < 0 || e.v < 0 || e.u >= n || e.v >= n) throw std::invalid_argument("edge endpoint out of range");
    if (e.mult <= 0) throw std::invalid_argument("edge multiplicity must be positive");
    if (e.u > e.v) std::swap(e.u, e.v);
  }
  std::sort(edges.begin(), edges.end());
  std::vector<Edge> merged;
  for (const auto& e : edges) {
    if (!merged.empty() && merged.back().u == e.u && merged.back().v == e.v) {
      merged.back().mult += e.mult;
    } else {
      merged.push_back(e);
    }
  }
  return merged;
}

}  // namespace

KLabeledGraph::KLabeledGraph(int k, int n, std::vector<Edge> edges) : k_(k), n_(n) {
  if (k < 0) throw std::invalid_argument("label count must be nonnegative");
  if (n < k) throw std::invalid_argument("node count must be at least the label count");
  edges_ = normalize_edges(std::move(edges), n);
}

KLabeledGraph KLabeledGraph::empty(int k) { return KLabeledGraph(k, k); }

int KLabeledGraph::total_edges() const {
  int total = 0;
  for (const auto& e : edges_) total += e.mult;
  return total;
}

int KLabeledGraph::multiplicity(int a, int b) const {
  if (a > b) std::swap(a, b);
  auto it = std::lower_bound(edges_.begin(), edges_.end(), Edge{a, b, 0},
                             [](const Edge& x, const Edge& y) { return std::tie(x.u, x.v) < std::tie(y.u, y.v); });
  if (it != edges_.end() && it->u == a && it->v == b) return it->mult;
  return 0;
}

bool KLabeledGraph::connected() const {
  if (n_ <= 1) return true;
  std::vector<int> parent(n_);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  int components = n_;
  for (const auto& e : edges_) {
    const int a = find(e.u);
    const int b = find(e.v);
    if (a != b) {
      parent[a] = b;
      --components;
    }
  }
  return components == 1;
}

bool KLabeledGraph::simple() const {
  return std::all_of(edges_.begin(), edges_.end(), [](const Edge& e) { return e.mult == 1; });
}

std::string KLabeledGraph::describe() const {
  std::ostringstream os;
  os << "k=" << k_ << " n=" << n_ << " edges=[";
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    if (i) os << ",";
    os << "(" << edges_[i].u << "," << edges_[i].v;
    if (edges_[i].mult != 1) os << "x" << edges_[i].mult;
    os << ")";
  }
  os << "]";
  return os.str();
}

KLabeledGraph glue(const KLabeledGraph& a, const KLabeledGraph& b) {
  if (a.labels() != b.labels()) throw std::invalid_argument("glue: label counts differ");
  const int k = a.labels();
  std::vector<Edge> edges = a.edges();
  // Unlabeled nodes of b are shifted past those of a.
  const int shift = a.nodes() - k;
  auto map_b = [&](int x) { return x < k ? x : x + shift; };
  for (const auto& e : b.edges()) edges.push_back(Edge{map_b(e.u), map_b(e.v), e.mult});
  return KLabeledGraph(k, a.nodes() + b.nodes() - k, std::move(edges));
}

KLabeledGraph relabel(const KLabeledGraph& f, const std::vector<int>& perm) {
  std::vector<Edge> edges;
  edges.reserve(f.edges().size());
  for (const auto& e : f.edges()) edges.push_back(Edge{perm[e.u], perm[e.v], e.mult});
  return KLabeledGraph(f.labels(), f.nodes(), std::move(edges));
}

KLabeledGraph canonical_form(const KLabeledGraph& f) {
  const int k = f.labels();
  const int n = f.nodes();
  const int free_count = n - k;
  if (free_count <= 1) return f;

  // Isomorphism-invariant signature per unlabeled node; only permutations
  // that keep the signature order are tried.
  std::vector<int> degree(n, 0);
  for (const auto& e : f.edges()) {
    degree[e.u] += e.mult;
    degree[e.v] += e.mult;
  }
  std::vector<std::vector<int>> signature(n);
  for (int x = k; x < n; ++x) {
    auto& sig = signature[x];
    sig.push_back(degree[x]);
    for (int l = 0; l < k; ++l) sig.push_back(f.multiplicity(x, l));
    std::vector<std::pair<int, int>> nbrs;
    for (int y = k; y < n; ++y) {
      if (y == x) continue;
      const int m = f.multiplicity(x, y);
      if (m) nbrs.emplace_back(m, degree[y]);
    }
    std::sort(nbrs.begin(), nbrs.end());
    for (auto [m, d] : nbrs) {
      sig.push_back(m);
      sig.push_back(d);
    }
  }

  std::vector<int> order(free_count);
  std::iota(order.begin(), order.end(), k);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return signature[a] < signature[b]; });

  std::vector<std::pair<int, int>> groups;  // [begin, end) in order
  for (int i = 0; i < free_count;) {
    int j = i + 1;
    while (j < free_count && signature[order[j]] == signature[order[i]]) ++j;
    groups.emplace_back(i, j);
    i = j;
  }
  for (auto [b, e] : groups) std::sort(order.begin() + b, order.begin() + e);

  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.begin() + k, 0);
  std::vector<Edge> best;
  std::vector<Edge> candidate;
  bool have_best = false;
  while (true) {
    for (int p = 0; p < free_count; ++p) perm[order[p]] = k + p;
    candidate.clear();
    for (const auto& e : f.edges()) {
      int u = perm[e.u];
      int v = perm[e.v];
      if (u > v) std::swap(u, v);
      candidate.push_back(Edge{u, v, e.mult});
    }
    std::sort(candidate.begin(), candidate.end());
    if (!have_best || candidate < best) {
      best = candidate;
      have_best = true;
    }
    int g = static_cast<int>(groups.size()) - 1;
    for (; g >= 0; --g) {
      auto [b, e] = groups[g];
      if (std::next_permutation(order.begin() + b, order.begin() + e)) break;
    }
    if (g < 0) break;
  }
  return KLabeledGraph(k, n, std::move(best));
}

KLabeledGraph trace_graph(const KLabeledGraph& f) {
  if (f.labels() == 0) throw std::invalid_argument("trace of a 0-labeled graph");
  return KLabeledGraph(f.labels() - 1, f.nodes(), f.edges());
}

KLabeledGraph extend_with_isolated_label(const KLabeledGraph& f) {
  const int k = f.labels();
  std::vector<Edge> edges;
  auto shift = [k](int x) { return x < k ? x : x + 1; };
  for (const auto& e : f.edges()) edges.push_back(Edge{shift(e.u), shift(e.v), e.mult});
  return KLabeledGraph(k + 1, f.nodes() + 1, std::move(edges));
}

}  // namespace gha
