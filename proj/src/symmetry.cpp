#include "gha/symmetry.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "gha/hom.hpp"

namespace gha {

bool Partition::all_singletons() const {
  return std::all_of(blocks.begin(), blocks.end(), [](const auto& b) { return b.size() == 1; });
}

std::vector<std::size_t> Partition::block_index(std::size_t ground_size) const {
  std::vector<std::size_t> out(ground_size, blocks.size());
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    for (std::size_t x : blocks[b]) out.at(x) = b;
  }
  return out;
}

Partition Partition::normalized(std::vector<std::vector<std::size_t>> blocks) {
  std::erase_if(blocks, [](const auto& b) { return b.empty(); });
  for (auto& b : blocks) std::sort(b.begin(), b.end());
  std::sort(blocks.begin(), blocks.end(), [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return Partition{std::move(blocks)};
}

Permutation Permutation::identity(std::size_t m) {
  Permutation p{std::vector<int>(m)};
  std::iota(p.images.begin(), p.images.end(), 0);
  return p;
}

Permutation Permutation::compose(const Permutation& after) const {
  Permutation p{std::vector<int>(images.size())};
  for (std::size_t i = 0; i < images.size(); ++i) p.images[i] = after.images[static_cast<std::size_t>(images[i])];
  return p;
}

Permutation Permutation::inverse() const {
  Permutation p{std::vector<int>(images.size())};
  for (std::size_t i = 0; i < images.size(); ++i) p.images[static_cast<std::size_t>(images[i])] = static_cast<int>(i);
  return p;
}

bool Permutation::bijective() const {
  std::vector<bool> seen(images.size(), false);
  for (int x : images) {
    if (x < 0 || static_cast<std::size_t>(x) >= images.size() || seen[static_cast<std::size_t>(x)]) return false;
    seen[static_cast<std::size_t>(x)] = true;
  }
  return true;
}

namespace {

std::string describe_partition(const NodePartition& p) {
  std::string s = "[";
  for (std::size_t b = 0; b < p.blocks.size(); ++b) {
    if (b) s += ",";
    s += "[";
    for (std::size_t i = 0; i < p.blocks[b].size(); ++i) {
      if (i) s += ",";
      s += std::to_string(p.blocks[b][i]);
    }
    s += "]";
  }
  return s + "]";
}

bool same_beta_row(const WeightedGraph& g, std::size_t i, std::size_t j) {
  for (std::size_t l = 0; l < g.size(); ++l) {
    if (g.beta(i, l) != g.beta(j, l)) return false;
  }
  return true;
}

// Sorted multiset of a node's beta row; equal for nodes in the same orbit.
std::vector<Rational> row_profile(const WeightedGraph& g, std::size_t i) {
  std::vector<Rational> row;
  for (std::size_t l = 0; l < g.size(); ++l) row.push_back(g.beta(i, l));
  std::sort(row.begin(), row.end());
  return row;
}

// Backtracking over weight-preserving bijections V(g1) -> V(g2).
class MatchSearch {
 public:
  MatchSearch(const WeightedGraph& g1, const WeightedGraph& g2, bool stop_at_first)
      : g1_(g1), g2_(g2), m_(g1.size()), stop_(stop_at_first), image_(m_, -1), used_(m_, false) {
    for (std::size_t i = 0; i < m_; ++i) {
      profile1_.push_back(row_profile(g1, i));
      profile2_.push_back(row_profile(g2, i));
    }
  }

  std::vector<Permutation> run() {
    if (g1_.size() == g2_.size()) extend(0);
    return found_;
  }

 private:
  bool compatible(std::size_t i, std::size_t j) const {
    if (g1_.alpha(i) != g2_.alpha(j) || g1_.beta(i, i) != g2_.beta(j, j)) return false;
    if (profile1_[i] != profile2_[j]) return false;
    for (std::size_t l = 0; l < i; ++l) {
      if (g1_.beta(l, i) != g2_.beta(static_cast<std::size_t>(image_[l]), j)) return false;
    }
    return true;
  }

  bool extend(std::size_t i) {
    if (i == m_) {
      found_.push_back(Permutation{image_});
      return stop_;
    }
    for (std::size_t j = 0; j < m_; ++j) {
      if (used_[j] || !compatible(i, j)) continue;
      image_[i] = static_cast<int>(j);
      used_[j] = true;
      const bool done = extend(i + 1);
      used_[j] = false;
      if (done) return true;
    }
    image_[i] = -1;
    return false;
  }

  const WeightedGraph& g1_;
  const WeightedGraph& g2_;
  std::size_t m_;
  bool stop_;
  std::vector<int> image_;
  std::vector<bool> used_;
  std::vector<std::vector<Rational>> profile1_;
  std::vector<std::vector<Rational>> profile2_;
  std::vector<Permutation> found_;
};

}  // namespace

NotTwinFree::NotTwinFree(NodePartition twins)
    : std::invalid_argument("graph is not twin-free; twin classes " + describe_partition(twins)),
      twins_(std::move(twins)) {}

NodePartition find_twins(const WeightedGraph& g) {
  const std::size_t m = g.size();
  std::vector<std::vector<std::size_t>> blocks;
  for (std::size_t i = 0; i < m; ++i) {
    std::size_t b = 0;
    while (b < blocks.size() && !same_beta_row(g, blocks[b].front(), i)) ++b;
    if (b == blocks.size()) blocks.emplace_back();
    blocks[b].push_back(i);
  }
  return Partition::normalized(std::move(blocks));
}

bool twin_free(const WeightedGraph& g) { return find_twins(g).all_singletons(); }

WeightedGraph twin_quotient(const WeightedGraph& g) {
  const NodePartition classes = find_twins(g);
  const std::size_t r = classes.size();
  std::vector<Rational> alpha(r, Rational(0));
  std::vector<std::vector<Rational>> beta(r, std::vector<Rational>(r));
  for (std::size_t a = 0; a < r; ++a) {
    for (std::size_t i : classes.blocks[a]) alpha[a] += g.alpha(i);
    for (std::size_t b = 0; b < r; ++b) {
      const Rational& w = g.beta(classes.blocks[a].front(), classes.blocks[b].front());
      for (std::size_t i : classes.blocks[a]) {
        for (std::size_t j : classes.blocks[b]) {
          if (g.beta(i, j) != w) throw std::logic_error("twin quotient: edge weight not constant on a class pair");
        }
      }
      beta[a][b] = w;
    }
  }
  return WeightedGraph(std::move(alpha), std::move(beta));
}

std::vector<Permutation> automorphisms(const WeightedGraph& g) {
  auto all = MatchSearch(g, g, false).run();
  std::sort(all.begin(), all.end());
  return all;
}

bool is_automorphism(const WeightedGraph& g, const Permutation& sigma) {
  const std::size_t m = g.size();
  if (sigma.images.size() != m || !sigma.bijective()) return false;
  for (std::size_t i = 0; i < m; ++i) {
    const auto si = static_cast<std::size_t>(sigma.images[i]);
    if (g.alpha(si) != g.alpha(i)) return false;
    for (std::size_t j = 0; j < m; ++j) {
      if (g.beta(si, static_cast<std::size_t>(sigma.images[j])) != g.beta(i, j)) return false;
    }
  }
  return true;
}

TuplePartition orbit_partition(const WeightedGraph& g, int k) {
  const MapSpace space(g.size(), k);
  std::vector<std::size_t> parent(space.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& sigma : automorphisms(g)) {
    for (std::size_t idx = 0; idx < space.size(); ++idx) {
      MapAssignment phi = space.at(idx);
      for (int& t : phi.targets) t = sigma.images[static_cast<std::size_t>(t)];
      const std::size_t a = find(idx);
      const std::size_t b = find(space.index_of(phi));
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  }
  std::vector<std::vector<std::size_t>> blocks(space.size());
  for (std::size_t idx = 0; idx < space.size(); ++idx) blocks[find(idx)].push_back(idx);
  return Partition::normalized(std::move(blocks));
}

std::size_t orbit_count(const WeightedGraph& g, int k) { return orbit_partition(g, k).size(); }

bool verify_twin_free_rigidity(const WeightedGraph& g) {
  NodePartition twins = find_twins(g);
  if (!twins.all_singletons()) throw NotTwinFree(std::move(twins));
  const std::size_t m = g.size();
  const MapSpace maps(m, static_cast<int>(m));
  for (std::size_t idx = 0; idx < maps.size(); ++idx) {
    const MapAssignment phi = maps.at(idx);
    bool preserves = true;
    for (std::size_t i = 0; i < m && preserves; ++i) {
      for (std::size_t j = 0; j < m; ++j) {
        if (g.beta(static_cast<std::size_t>(phi.targets[i]), static_cast<std::size_t>(phi.targets[j])) !=
            g.beta(i, j)) {
          preserves = false;
          break;
        }
      }
    }
    if (preserves && !Permutation{phi.targets}.bijective()) return false;
  }
  return true;
}

std::optional<Permutation> find_isomorphism(const WeightedGraph& g1, const WeightedGraph& g2) {
  auto found = MatchSearch(g1, g2, true).run();
  if (found.empty()) return std::nullopt;
  return found.front();
}

}  // namespace gha
