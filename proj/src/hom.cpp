#include "gha/hom.hpp"

#include <limits>
#include <stdexcept>

namespace gha {

MapSpace::MapSpace(std::size_t m, int k) : m_(m), k_(k), count_(1) {
  if (k < 0) throw std::invalid_argument("map space needs k >= 0");
  for (int i = 0; i < k; ++i) {
    if (count_ > std::numeric_limits<std::size_t>::max() / m) throw std::overflow_error("map space too large");
    count_ *= m;
  }
}

MapAssignment MapSpace::at(std::size_t index) const {
  MapAssignment phi{std::vector<int>(k_)};
  for (int i = k_ - 1; i >= 0; --i) {
    phi.targets[i] = static_cast<int>(index % m_);
    index /= m_;
  }
  return phi;
}

std::size_t MapSpace::index_of(const MapAssignment& phi) const {
  if (phi.k() != k_) throw std::invalid_argument("map has the wrong length");
  std::size_t index = 0;
  for (int t : phi.targets) {
    if (t < 0 || static_cast<std::size_t>(t) >= m_) throw std::out_of_range("map target out of range");
    index = index * m_ + static_cast<std::size_t>(t);
  }
  return index;
}

namespace {

void check_map(const MapAssignment& phi, const WeightedGraph& g) {
  for (int t : phi.targets) {
    if (t < 0 || static_cast<std::size_t>(t) >= g.size()) {
      throw std::out_of_range("map target " + std::to_string(t) + " outside V(G)");
    }
  }
}

mpz_class from_int128(__int128 v) {
  const bool negative = v < 0;
  unsigned __int128 u = negative ? static_cast<unsigned __int128>(-(v + 1)) + 1 : static_cast<unsigned __int128>(v);
  mpz_class hi(static_cast<unsigned long>(static_cast<std::uint64_t>(u >> 64)));
  mpz_class lo(static_cast<unsigned long>(static_cast<std::uint64_t>(u)));
  mpz_class out = (hi << 64) + lo;
  return negative ? mpz_class(-out) : out;
}

mpz_class lcm_of_denominators(const std::vector<Rational>& values) {
  mpz_class l = 1;
  for (const auto& v : values) {
    const mpz_class d = v.denominator();
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
  }
  return l;
}

bool fits(const mpz_class& v) {
  // Leave headroom so a single product check catches every overflow.
  return mpz_sizeinbase(v.get_mpz_t(), 2) <= 62;
}

}  // namespace

struct HomKernel::Plan {
  int k = 0;
  int n = 0;
  int edge_total = 0;
  std::vector<Edge> labeled_edges;
  // back_edges[x - k]: edges from unlabeled node x to lower-indexed nodes.
  std::vector<std::vector<std::pair<int, int>>> back_edges;
};

HomKernel::HomKernel(const WeightedGraph& g) : g_(g), m_(g.size()) {
  std::vector<Rational> betas;
  betas.reserve(m_ * m_);
  for (std::size_t i = 0; i < m_; ++i) {
    for (std::size_t j = 0; j < m_; ++j) betas.push_back(g.beta(i, j));
  }
  alpha_den_ = lcm_of_denominators(g.alphas());
  beta_den_ = lcm_of_denominators(betas);
  fits_int64_ = true;
  for (const auto& a : g.alphas()) {
    alpha_num_.push_back(mpz_class(a.numerator() * (alpha_den_ / a.denominator())));
    fits_int64_ = fits_int64_ && fits(alpha_num_.back());
  }
  for (const auto& b : betas) {
    beta_num_.push_back(mpz_class(b.numerator() * (beta_den_ / b.denominator())));
    fits_int64_ = fits_int64_ && fits(beta_num_.back());
  }
  if (fits_int64_) {
    for (const auto& a : alpha_num_) alpha64_.push_back(a.get_si());
    for (const auto& b : beta_num_) beta64_.push_back(b.get_si());
  }
}

HomKernel::Plan HomKernel::plan_for(const KLabeledGraph& f) const {
  Plan plan;
  plan.k = f.labels();
  plan.n = f.nodes();
  plan.edge_total = f.total_edges();
  plan.back_edges.resize(static_cast<std::size_t>(plan.n - plan.k));
  for (const auto& e : f.edges()) {
    if (e.v < plan.k) {
      plan.labeled_edges.push_back(e);
    } else {
      plan.back_edges[static_cast<std::size_t>(e.v - plan.k)].emplace_back(e.u, e.mult);
    }
  }
  return plan;
}

namespace {

struct Int64Search {
  const std::vector<std::int64_t>& alpha;
  const std::vector<std::int64_t>& beta;
  std::size_t m;
  const std::vector<std::vector<std::pair<int, int>>>& back;
  int k;
  int n;
  std::vector<int>& assign;
  __int128 sum = 0;

  bool run(int x, std::int64_t prod) {
    if (x == n) return !__builtin_add_overflow(sum, static_cast<__int128>(prod), &sum);
    const auto& edges = back[static_cast<std::size_t>(x - k)];
    for (std::size_t c = 0; c < m; ++c) {
      std::int64_t p = 0;
      if (__builtin_mul_overflow(prod, alpha[c], &p)) return false;
      for (auto [w, mult] : edges) {
        const std::int64_t b = beta[static_cast<std::size_t>(assign[w]) * m + c];
        if (b == 0) {
          p = 0;
          break;
        }
        for (int r = 0; r < mult; ++r) {
          if (__builtin_mul_overflow(p, b, &p)) return false;
        }
      }
      if (p == 0) continue;
      assign[x] = static_cast<int>(c);
      if (!run(x + 1, p)) return false;
    }
    return true;
  }
};

struct BigSearch {
  const std::vector<mpz_class>& alpha;
  const std::vector<mpz_class>& beta;
  std::size_t m;
  const std::vector<std::vector<std::pair<int, int>>>& back;
  int k;
  int n;
  std::vector<int>& assign;
  mpz_class sum = 0;

  void run(int x, const mpz_class& prod) {
    if (x == n) {
      sum += prod;
      return;
    }
    const auto& edges = back[static_cast<std::size_t>(x - k)];
    mpz_class p;
    for (std::size_t c = 0; c < m; ++c) {
      p = prod * alpha[c];
      for (auto [w, mult] : edges) {
        const mpz_class& b = beta[static_cast<std::size_t>(assign[w]) * m + c];
        if (b == 0) {
          p = 0;
          break;
        }
        for (int r = 0; r < mult; ++r) p *= b;
      }
      if (p == 0) continue;
      assign[x] = static_cast<int>(c);
      run(x + 1, p);
    }
  }
};

}  // namespace

Rational HomKernel::evaluate(const Plan& plan, const std::vector<int>& labeled) const {
  std::vector<int> assign(static_cast<std::size_t>(plan.n), 0);
  for (int i = 0; i < plan.k; ++i) assign[i] = labeled[i];

  mpz_class denominator = 1;
  mpz_class tmp;
  mpz_pow_ui(tmp.get_mpz_t(), alpha_den_.get_mpz_t(), static_cast<unsigned long>(plan.n - plan.k));
  denominator *= tmp;
  mpz_pow_ui(tmp.get_mpz_t(), beta_den_.get_mpz_t(), static_cast<unsigned long>(plan.edge_total));
  denominator *= tmp;

  mpz_class constant = 1;
  for (const auto& e : plan.labeled_edges) {
    const mpz_class& b = beta_num_[static_cast<std::size_t>(assign[e.u]) * m_ + assign[e.v]];
    if (b == 0) return Rational(0);
    for (int r = 0; r < e.mult; ++r) constant *= b;
  }

  if (fits_int64_) {
    Int64Search search{alpha64_, beta64_, m_, plan.back_edges, plan.k, plan.n, assign};
    if (search.run(plan.k, 1)) return Rational(constant * from_int128(search.sum), denominator);
  }
  BigSearch search{alpha_num_, beta_num_, m_, plan.back_edges, plan.k, plan.n, assign};
  search.run(plan.k, mpz_class(1));
  return Rational(constant * search.sum, denominator);
}

Rational HomKernel::partial(const KLabeledGraph& f, const MapAssignment& phi) const {
  if (phi.k() != f.labels()) throw std::invalid_argument("hom_partial: map length differs from label count");
  check_map(phi, g_);
  return evaluate(plan_for(f), phi.targets);
}

Rational HomKernel::partial(const KLabeledGraph& f, std::size_t map_index) const {
  return partial(f, MapSpace(m_, f.labels()).at(map_index));
}

std::vector<Rational> HomKernel::column(const KLabeledGraph& f) const {
  const Plan plan = plan_for(f);
  const MapSpace space(m_, f.labels());
  std::vector<Rational> out;
  out.reserve(space.size());
  for (std::size_t i = 0; i < space.size(); ++i) out.push_back(evaluate(plan, space.at(i).targets));
  return out;
}

Rational alpha_weight(const MapAssignment& phi, const WeightedGraph& g) {
  check_map(phi, g);
  Rational w = 1;
  for (int t : phi.targets) w *= g.alpha(static_cast<std::size_t>(t));
  return w;
}

Rational hom(const KLabeledGraph& f, const WeightedGraph& g) {
  return HomKernel(g).partial(f.unlabeled_copy(), MapAssignment{});
}

Rational hom_partial(const KLabeledGraph& f, const WeightedGraph& g, const MapAssignment& phi) {
  return HomKernel(g).partial(f, phi);
}

Rational hom_quantum(const QuantumGraph& x, const WeightedGraph& g) {
  const HomKernel kernel(g);
  Rational total = 0;
  for (const auto& [f, c] : x.terms()) total += c * kernel.partial(f.unlabeled_copy(), MapAssignment{});
  return total;
}

namespace reference {

Rational hom_partial(const KLabeledGraph& f, const WeightedGraph& g, const MapAssignment& phi) {
  if (phi.k() != f.labels()) throw std::invalid_argument("hom_partial: map length differs from label count");
  check_map(phi, g);
  const int k = f.labels();
  const int n = f.nodes();
  const std::size_t m = g.size();
  const MapSpace extensions(m, n - k);
  Rational total = 0;
  std::vector<int> psi(static_cast<std::size_t>(n));
  for (int i = 0; i < k; ++i) psi[i] = phi.targets[i];
  for (std::size_t idx = 0; idx < extensions.size(); ++idx) {
    const MapAssignment rest = extensions.at(idx);
    for (int i = k; i < n; ++i) psi[i] = rest.targets[i - k];
    Rational term = 1;
    for (int i = k; i < n; ++i) term *= g.alpha(static_cast<std::size_t>(psi[i]));
    for (const auto& e : f.edges()) {
      term *= g.beta(static_cast<std::size_t>(psi[e.u]), static_cast<std::size_t>(psi[e.v])).pow(e.mult);
    }
    total += term;
  }
  return total;
}

std::uint64_t count_homomorphisms(const KLabeledGraph& f, const std::vector<std::vector<int>>& adjacency) {
  const int n = f.nodes();
  const std::size_t m = adjacency.size();
  const MapSpace maps(m, n);
  std::uint64_t count = 0;
  for (std::size_t idx = 0; idx < maps.size(); ++idx) {
    const MapAssignment psi = maps.at(idx);
    bool ok = true;
    for (const auto& e : f.edges()) {
      if (!adjacency[psi.targets[e.u]][psi.targets[e.v]]) {
        ok = false;
        break;
      }
    }
    if (ok) ++count;
  }
  return count;
}

}  // namespace reference

}  // namespace gha
