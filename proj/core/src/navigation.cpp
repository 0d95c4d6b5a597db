#include <algorithm>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include "cascadelab/metrics.hpp"

namespace cascadelab {

namespace {

using ParentMap = std::unordered_map<NodeId, NodeId>;

std::vector<NodeId> unwind(const ParentMap& parent, NodeId from, NodeId end) {
  std::vector<NodeId> path{end};
  while (path.back() != from) path.push_back(parent.at(path.back()));
  std::reverse(path.begin(), path.end());
  return path;
}

// BFS restricted to `start`'s color until `done(x)` holds; the path runs start..x.
template <typename Done>
std::optional<std::vector<NodeId>> community_search(const LabeledGraph& g, NodeId start, Done done,
                                                    std::unordered_set<NodeId>& touched) {
  const ColorId color = g.meta(start).color;
  ParentMap parent;
  parent.emplace(start, start);
  touched.insert(start);
  std::vector<NodeId> queue{start};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const NodeId x = queue[head];
    if (done(x)) return unwind(parent, start, x);
    for (NodeId y : g.neighbors(x)) {
      if (g.meta(y).color != color || parent.count(y)) continue;
      parent.emplace(y, x);
      touched.insert(y);
      queue.push_back(y);
    }
  }
  return std::nullopt;
}

// Bidirectional BFS over the subgraph induced by seed nodes.
std::optional<std::vector<NodeId>> seed_route(const LabeledGraph& g, NodeId from, NodeId to,
                                              std::unordered_set<NodeId>& touched) {
  if (from == to) return std::vector<NodeId>{from};
  ParentMap fwd{{from, from}};
  ParentMap bwd{{to, to}};
  std::vector<NodeId> fwd_frontier{from};
  std::vector<NodeId> bwd_frontier{to};
  touched.insert(from);
  touched.insert(to);
  std::vector<NodeId> next;

  while (!fwd_frontier.empty() && !bwd_frontier.empty()) {
    const bool forward = fwd_frontier.size() <= bwd_frontier.size();
    auto& frontier = forward ? fwd_frontier : bwd_frontier;
    auto& mine = forward ? fwd : bwd;
    auto& theirs = forward ? bwd : fwd;
    next.clear();
    for (NodeId x : frontier) {
      for (NodeId y : g.neighbors(x)) {
        if (!g.meta(y).is_seed || mine.count(y)) continue;
        mine.emplace(y, x);
        touched.insert(y);
        if (theirs.count(y)) {
          auto head = unwind(fwd, from, y);
          auto tail = unwind(bwd, to, y);  // to .. y
          tail.pop_back();
          head.insert(head.end(), tail.rbegin(), tail.rend());
          return head;
        }
        next.push_back(y);
      }
    }
    frontier.swap(next);
  }
  return std::nullopt;
}

void erase_loops(std::vector<NodeId>& path) {
  std::unordered_map<NodeId, std::size_t> at;
  std::vector<NodeId> out;
  for (NodeId x : path) {
    const auto it = at.find(x);
    if (it != at.end()) {
      for (std::size_t i = it->second + 1; i < out.size(); ++i) at.erase(out[i]);
      out.resize(it->second + 1);
      continue;
    }
    at.emplace(x, out.size());
    out.push_back(x);
  }
  path.swap(out);
}

}  // namespace

NavigationResult navigate(const LabeledGraph& g, NodeId u, NodeId v, std::size_t hop_budget) {
  if (u >= g.node_count() || v >= g.node_count()) throw std::out_of_range("node id out of range");
  if (std::none_of(g.metas().begin(), g.metas().end(), [](const NodeMeta& m) { return m.is_seed; })) {
    throw GraphError("navigation needs a colored graph with seed nodes");
  }
  NavigationResult result;
  std::unordered_set<NodeId> touched;
  const auto finish = [&](std::optional<std::vector<NodeId>> path) {
    result.visited = touched.size();
    if (path && path->size() - 1 <= hop_budget) result.path = std::move(path);
    return result;
  };

  if (u == v) {
    touched.insert(u);
    return finish(std::vector<NodeId>{u});
  }

  const auto is_seed = [&](NodeId x) { return g.meta(x).is_seed; };
  if (g.meta(u).color == g.meta(v).color) {
    return finish(community_search(g, u, [v](NodeId x) { return x == v; }, touched));
  }

  auto up = community_search(g, u, is_seed, touched);
  auto down = community_search(g, v, is_seed, touched);
  if (!up || !down) return finish(std::nullopt);
  auto across = seed_route(g, up->back(), down->back(), touched);
  if (!across) return finish(std::nullopt);

  std::vector<NodeId> path = std::move(*up);
  path.insert(path.end(), across->begin() + 1, across->end());
  path.insert(path.end(), down->rbegin() + 1, down->rend());
  erase_loops(path);
  return finish(std::move(path));
}

}  // namespace cascadelab
