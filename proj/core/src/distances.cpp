#include <algorithm>
#include <limits>
#include <stdexcept>

#include "cascadelab/metrics.hpp"
#include "cascadelab/rng.hpp"

namespace cascadelab {

namespace {

constexpr std::size_t kUnreachable = std::numeric_limits<std::size_t>::max();
constexpr std::size_t kTargetsPerSource = 16;
constexpr std::size_t kSweeps = 4;

// Farthest node from `source` and its distance.
std::pair<NodeId, std::size_t> farthest(const LabeledGraph& g, NodeId source) {
  const auto dist = bfs_distances(g, source);
  NodeId far = source;
  std::size_t best = 0;
  for (NodeId x = 0; x < dist.size(); ++x) {
    if (dist[x] != kUnreachable && dist[x] > best) {
      best = dist[x];
      far = x;
    }
  }
  return {far, best};
}

}  // namespace

std::vector<std::size_t> bfs_distances(const LabeledGraph& g, NodeId source) {
  std::vector<std::size_t> dist(g.node_count(), kUnreachable);
  std::vector<NodeId> queue;
  queue.reserve(g.node_count());
  dist.at(source) = 0;
  queue.push_back(source);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const NodeId x = queue[head];
    for (NodeId y : g.neighbors(x)) {
      if (dist[y] == kUnreachable) {
        dist[y] = dist[x] + 1;
        queue.push_back(y);
      }
    }
  }
  return dist;
}

std::optional<std::size_t> hop_distance(const LabeledGraph& g, NodeId u, NodeId v) {
  if (u >= g.node_count() || v >= g.node_count()) throw std::out_of_range("node id out of range");
  if (u == v) return 0;
  std::vector<std::size_t> dist(g.node_count(), kUnreachable);
  std::vector<NodeId> queue{u};
  dist[u] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const NodeId x = queue[head];
    for (NodeId y : g.neighbors(x)) {
      if (dist[y] != kUnreachable) continue;
      dist[y] = dist[x] + 1;
      if (y == v) return dist[y];
      queue.push_back(y);
    }
  }
  return std::nullopt;
}

std::vector<std::size_t> degree_sequence(const LabeledGraph& g) {
  std::vector<std::size_t> out(g.node_count());
  for (NodeId v = 0; v < g.node_count(); ++v) out[v] = g.degree(v);
  return out;
}

DistanceStats distance_stats(const LabeledGraph& g, std::size_t sample_pairs, std::uint64_t seed) {
  DistanceStats stats;
  const std::size_t n = g.node_count();
  if (n < 2 || sample_pairs == 0) return stats;

  double total = 0.0;
  const std::size_t all_pairs = n * (n - 1) / 2;
  if (all_pairs <= sample_pairs) {
    stats.exact = true;
    for (NodeId u = 0; u < n; ++u) {
      const auto dist = bfs_distances(g, u);
      for (NodeId v = u + 1; v < n; ++v) {
        if (dist[v] == kUnreachable) {
          ++stats.unreachable;
        } else {
          total += static_cast<double>(dist[v]);
          ++stats.pairs;
          stats.est_diameter = std::max(stats.est_diameter, dist[v]);
        }
      }
    }
  } else {
    // Pairs share a source in groups so one BFS serves several targets.
    Rng rng(derive_stream_seed(seed, 0xD157));
    std::size_t drawn = 0;
    while (drawn < sample_pairs) {
      const auto u = static_cast<NodeId>(rng.below(n));
      const auto dist = bfs_distances(g, u);
      for (std::size_t t = 0; t < kTargetsPerSource && drawn < sample_pairs; ++t, ++drawn) {
        auto v = static_cast<NodeId>(rng.below(n - 1));
        if (v >= u) ++v;
        if (dist[v] == kUnreachable) {
          ++stats.unreachable;
        } else {
          total += static_cast<double>(dist[v]);
          ++stats.pairs;
        }
      }
    }
    const NodeSet giant = largest_connected_component(g);
    for (std::size_t s = 0; s < kSweeps && !giant.empty(); ++s) {
      const NodeId start = giant[rng.below(giant.size())];
      const auto [far, ignored] = farthest(g, start);
      const auto [other, ecc] = farthest(g, far);
      (void)ignored;
      (void)other;
      stats.est_diameter = std::max(stats.est_diameter, ecc);
    }
  }
  stats.avg_distance = stats.pairs > 0 ? total / static_cast<double>(stats.pairs) : 0.0;
  return stats;
}

}  // namespace cascadelab
