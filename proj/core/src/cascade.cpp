#include "cascadelab/cascade.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>
#include <unordered_map>

#include "cascadelab/rng.hpp"

namespace cascadelab {

ThresholdAssignment uniform_thresholds(const LabeledGraph& g, double phi) {
  if (!(phi > 0.0 && phi <= 1.0)) {
    throw std::invalid_argument("uniform threshold must lie in (0, 1], got " + std::to_string(phi));
  }
  ThresholdAssignment t;
  t.phi.assign(g.node_count(), phi);
  t.uninfectable.assign(g.node_count(), 0);
  return t;
}

ThresholdAssignment random_thresholds(const LabeledGraph& g, std::uint64_t trial_seed) {
  Rng rng(splitmix64(trial_seed));
  const std::size_t n = g.node_count();
  ThresholdAssignment t;
  t.phi.assign(n, 1.0);
  t.uninfectable.assign(n, 0);
  for (NodeId v = 0; v < n; ++v) {
    const std::size_t deg = g.degree(v);
    if (deg == 0) {
      t.uninfectable[v] = 1;
      continue;
    }
    const auto r = 1 + rng.below(deg);
    t.phi[v] = static_cast<double>(r) / static_cast<double>(deg);
  }
  return t;
}

std::uint32_t infection_quota(std::size_t degree, double phi) {
  if (degree == 0) return kNever;
  const auto deg = static_cast<double>(degree);
  const auto reaches = [&](double c) { return c / deg >= phi; };
  double c = std::ceil(phi * deg);
  if (c < 1.0) c = 1.0;
  while (c > 1.0 && reaches(c - 1.0)) c -= 1.0;
  while (c <= deg && !reaches(c)) c += 1.0;
  if (c > deg) return kNever;
  return static_cast<std::uint32_t>(c);
}

CascadeRunner::CascadeRunner(const LabeledGraph& g)
    : g_(&g),
      quota_(g.node_count(), kNever),
      hits_(g.node_count(), 0),
      infected_(g.node_count(), 0) {}

void CascadeRunner::set_thresholds(const ThresholdAssignment& theta) {
  const std::size_t n = g_->node_count();
  if (theta.phi.size() != n || theta.uninfectable.size() != n) {
    throw std::invalid_argument("threshold assignment size does not match graph");
  }
  for (NodeId v = 0; v < n; ++v) {
    quota_[v] = theta.uninfectable[v] ? kNever : infection_quota(g_->degree(v), theta.phi[v]);
  }
}

std::size_t CascadeRunner::propagate(std::span<const NodeId> attack, std::vector<std::size_t>* growth) {
  for (NodeId x : touched_) {
    hits_[x] = 0;
    infected_[x] = 0;
  }
  touched_.clear();
  frontier_.clear();

  const std::size_t n = g_->node_count();
  for (NodeId s : attack) {
    if (s >= n) throw std::out_of_range("attack node id out of range");
    if (!infected_[s]) {
      infected_[s] = 1;
      touched_.push_back(s);
      frontier_.push_back(s);
    }
  }
  std::size_t total = frontier_.size();
  if (growth) growth->push_back(total);

  while (!frontier_.empty()) {
    next_.clear();
    for (NodeId x : frontier_) {
      for (NodeId y : g_->neighbors(x)) {
        if (infected_[y]) continue;
        if (hits_[y] == 0) touched_.push_back(y);
        if (++hits_[y] == quota_[y]) next_.push_back(y);
      }
    }
    if (next_.empty()) break;
    for (NodeId y : next_) infected_[y] = 1;
    total += next_.size();
    if (growth) growth->push_back(next_.size());
    std::swap(frontier_, next_);
  }
  return total;
}

std::size_t CascadeRunner::run_count(std::span<const NodeId> attack) {
  return propagate(attack, nullptr);
}

CascadeOutcome CascadeRunner::run(std::span<const NodeId> attack) {
  CascadeOutcome out;
  propagate(attack, &out.growth);
  for (NodeId x : touched_)
    if (infected_[x]) out.infected.push_back(x);
  std::sort(out.infected.begin(), out.infected.end());
  out.rounds = out.growth.size() - 1;
  return out;
}

CascadeOutcome infection_set(const LabeledGraph& g, std::span<const NodeId> attack,
                             const ThresholdAssignment& theta) {
  CascadeRunner runner(g);
  runner.set_thresholds(theta);
  return runner.run(attack);
}

NodeSet injury_set(const LabeledGraph& g, std::span<const NodeId> attack) {
  NodeSet removed(attack.begin(), attack.end());
  normalize_node_set(removed, g.node_count());
  const NodeSet giant = largest_connected_component(g, removed);
  std::vector<char> keep(g.node_count(), 0);
  for (NodeId v : removed) keep[v] = 1;
  for (NodeId v : giant) keep[v] = 1;
  NodeSet injured;
  for (NodeId v = 0; v < g.node_count(); ++v)
    if (!keep[v]) injured.push_back(v);
  return injured;
}

std::vector<NodeId> top_degree_nodes(const LabeledGraph& g, std::size_t k) {
  const std::size_t n = g.node_count();
  if (k > n) throw std::invalid_argument("k exceeds node count");
  std::vector<NodeId> order(n);
  std::iota(order.begin(), order.end(), NodeId{0});
  const auto by_rank = [&](NodeId a, NodeId b) {
    const auto da = g.degree(a);
    const auto db = g.degree(b);
    return da != db ? da > db : a < b;
  };
  std::partial_sort(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(k), order.end(), by_rank);
  order.resize(k);
  return order;
}

std::optional<double> security_threshold(const LabeledGraph& g, std::span<const NodeId> attack,
                                         std::span<const double> grid, double epsilon) {
  if (grid.empty()) throw std::invalid_argument("security threshold grid is empty");
  if (!(epsilon > 0.0 && epsilon < 1.0)) throw std::invalid_argument("epsilon must lie in (0, 1)");
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (!(grid[i] > 0.0 && grid[i] <= 1.0)) throw std::invalid_argument("grid values must lie in (0, 1]");
    if (i > 0 && grid[i] <= grid[i - 1]) throw std::invalid_argument("grid must be strictly ascending");
  }

  CascadeRunner runner(g);
  const double budget = epsilon * static_cast<double>(g.node_count());
  const auto secure_at = [&](std::size_t idx) {
    runner.set_thresholds(uniform_thresholds(g, grid[idx]));
    return static_cast<double>(runner.run_count(attack)) <= budget;
  };

  // Raising phi can only shrink the cascade, so "secure" is monotone along the grid.
  if (!secure_at(grid.size() - 1)) return std::nullopt;
  std::size_t lo = 0;
  std::size_t hi = grid.size() - 1;  // secure_at(hi) holds
  while (lo < hi) {
    const std::size_t mid = lo + (hi - lo) / 2;
    if (secure_at(mid)) {
      hi = mid;
    } else {
      lo = mid + 1;
    }
  }
  return grid[hi];
}

namespace {

// Members respond to a fully infected exterior; returns whether the seed falls.
// `local` maps node id -> member index for the community's members.
template <typename MemberIndex>
bool seed_falls(const LabeledGraph& g, const Community& c, const ThresholdAssignment& theta,
                MemberIndex&& local) {
  const std::size_t size = c.members.size();
  std::vector<std::uint32_t> hits(size, 0);
  std::vector<std::uint32_t> quota(size, kNever);
  std::vector<char> infected(size, 0);
  std::vector<std::size_t> queue;

  for (std::size_t i = 0; i < size; ++i) {
    const NodeId x = c.members[i];
    quota[i] = theta.uninfectable[x] ? kNever : infection_quota(g.degree(x), theta.phi[x]);
    for (NodeId y : g.neighbors(x))
      if (local(y) < 0) ++hits[i];
    if (hits[i] >= quota[i]) {
      infected[i] = 1;
      queue.push_back(i);
    }
  }
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (NodeId y : g.neighbors(c.members[queue[head]])) {
      const auto j = local(y);
      if (j < 0 || infected[j]) continue;
      if (++hits[j] >= quota[j]) {
        infected[j] = 1;
        queue.push_back(static_cast<std::size_t>(j));
      }
    }
  }
  const auto s = local(c.seed);
  return infected[s] != 0;
}

void check_theta(const LabeledGraph& g, const ThresholdAssignment& theta) {
  if (theta.phi.size() != g.node_count() || theta.uninfectable.size() != g.node_count()) {
    throw std::invalid_argument("threshold assignment size does not match graph");
  }
}

void check_homochromatic(const LabeledGraph& g, const Community& c) {
  if (c.members.empty()) throw std::invalid_argument("community has no members");
  for (NodeId x : c.members) {
    if (g.meta(x).color != c.color) {
      throw std::invalid_argument("community is not homochromatic: node " + std::to_string(x));
    }
  }
  if (!std::binary_search(c.members.begin(), c.members.end(), c.seed) || !g.meta(c.seed).is_seed) {
    throw std::invalid_argument("community seed is not a seed member");
  }
}

}  // namespace

CommunityStrength classify_community(const LabeledGraph& g, const Community& community,
                                     const ThresholdAssignment& theta) {
  if (!std::is_sorted(community.members.begin(), community.members.end())) {
    throw std::invalid_argument("community members must be sorted");
  }
  check_homochromatic(g, community);
  check_theta(g, theta);
  std::unordered_map<NodeId, std::ptrdiff_t> index;
  index.reserve(community.members.size());
  for (std::size_t i = 0; i < community.members.size(); ++i) {
    index.emplace(community.members[i], static_cast<std::ptrdiff_t>(i));
  }
  const auto local = [&](NodeId y) -> std::ptrdiff_t {
    const auto it = index.find(y);
    return it == index.end() ? -1 : it->second;
  };
  return seed_falls(g, community, theta, local) ? CommunityStrength::Vulnerable : CommunityStrength::Strong;
}

std::size_t count_vulnerable(const LabeledGraph& g, const ThresholdAssignment& theta) {
  check_theta(g, theta);
  const auto all = communities(g);
  // position of each node inside its own community's member list
  std::vector<std::ptrdiff_t> position(g.node_count(), -1);
  std::vector<ColorId> color_of(g.node_count());
  for (const Community& c : all) {
    for (std::size_t i = 0; i < c.members.size(); ++i) {
      position[c.members[i]] = static_cast<std::ptrdiff_t>(i);
      color_of[c.members[i]] = c.color;
    }
  }
  std::size_t vulnerable = 0;
  for (const Community& c : all) {
    const auto local = [&](NodeId y) -> std::ptrdiff_t {
      return color_of[y] == c.color ? position[y] : -1;
    };
    if (seed_falls(g, c, theta, local)) ++vulnerable;
  }
  return vulnerable;
}

}  // namespace cascadelab
