#include <algorithm>
#include <numeric>
#include <optional>
#include <string>

#include "cascadelab/metrics.hpp"

namespace cascadelab {

namespace {

constexpr std::size_t kMaxReportedViolations = 20;

struct DisjointSets {
  explicit DisjointSets(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[a] = b;
    return true;
  }
  std::vector<std::size_t> parent;
};

}  // namespace

PriorityTree infection_priority_tree(const LabeledGraph& g) {
  for (const Edge& e : g.edges()) {
    if (e.tag == Provenance::Plain) {
      throw GraphError("priority tree needs edge provenance; graph has PLAIN edges");
    }
  }
  const auto comms = communities(g);
  const std::size_t n = g.node_count();
  PriorityTree tree;
  if (comms.empty()) return tree;

  std::vector<std::size_t> comm_of(n);
  for (std::size_t c = 0; c < comms.size(); ++c)
    for (NodeId x : comms[c].members) comm_of[x] = c;

  std::vector<char> initial(comms.size(), 0);
  bool any_initial = false;
  for (const Edge& e : g.edges()) {
    if (e.tag != Provenance::Initial) continue;
    for (NodeId x : {e.u, e.v}) {
      if (g.meta(x).is_seed) {
        initial[comm_of[x]] = 1;
        any_initial = true;
      }
    }
  }
  if (!any_initial) {
    std::size_t earliest = 0;
    for (std::size_t c = 1; c < comms.size(); ++c) {
      if (g.meta(comms[c].seed).birth_time < g.meta(comms[earliest].seed).birth_time) earliest = c;
    }
    initial[earliest] = 1;
  }

  std::vector<std::size_t> vertex_of(comms.size());
  tree.vertices.emplace_back();
  std::optional<std::uint32_t> root_birth;
  for (std::size_t c = 0; c < comms.size(); ++c) {
    const NodeMeta& seed_meta = g.meta(comms[c].seed);
    if (initial[c]) {
      vertex_of[c] = PriorityTree::kRoot;
      TreeVertex& root = tree.vertices[PriorityTree::kRoot];
      root.colors.push_back(comms[c].color);
      if (!root_birth || seed_meta.birth_time < *root_birth) {
        root_birth = seed_meta.birth_time;
        root.seed = comms[c].seed;
        root.birth_time = seed_meta.birth_time;
      }
    } else {
      vertex_of[c] = tree.vertices.size();
      tree.vertices.push_back({{comms[c].color}, comms[c].seed, seed_meta.birth_time});
    }
  }

  std::size_t violation_count = 0;
  const auto violate = [&](std::string msg) {
    if (++violation_count <= kMaxReportedViolations) tree.violations.push_back(std::move(msg));
  };

  for (const Edge& e : g.edges()) {
    if (e.tag == Provenance::SeedLink) continue;
    const std::size_t a = vertex_of[comm_of[e.u]];
    const std::size_t b = vertex_of[comm_of[e.v]];
    if (a == b) continue;
    const std::uint32_t ta = g.meta(e.u).birth_time;
    const std::uint32_t tb = g.meta(e.v).birth_time;
    if (ta == tb) {
      violate("edge " + std::to_string(e.u) + "-" + std::to_string(e.v) + " joins nodes born at the same step");
      continue;
    }
    const TreeEdge te = ta > tb ? TreeEdge{a, b} : TreeEdge{b, a};
    if (tree.vertices[te.child].birth_time <= tree.vertices[te.parent].birth_time) {
      violate("edge " + std::to_string(e.u) + "-" + std::to_string(e.v) + " points from community born at " +
              std::to_string(tree.vertices[te.child].birth_time) + " to community born at " +
              std::to_string(tree.vertices[te.parent].birth_time));
    }
    tree.edges.push_back(te);
  }
  std::sort(tree.edges.begin(), tree.edges.end(), [](const TreeEdge& x, const TreeEdge& y) {
    return x.child != y.child ? x.child < y.child : x.parent < y.parent;
  });
  tree.edges.erase(std::unique(tree.edges.begin(), tree.edges.end()), tree.edges.end());
  if (violation_count > kMaxReportedViolations) {
    tree.violations.push_back(std::to_string(violation_count - kMaxReportedViolations) +
                              " further violations not shown");
  }

  const std::size_t vcount = tree.vertices.size();
  DisjointSets sets(vcount);
  std::size_t merged = 0;
  for (const TreeEdge& e : tree.edges)
    if (sets.unite(e.child, e.parent)) ++merged;
  const bool connected = merged + 1 == vcount;
  if (!connected) violate("contracted graph is disconnected");
  if (tree.edges.size() + 1 != vcount) {
    tree.violations.push_back("edge count " + std::to_string(tree.edges.size()) + " != vertex count - 1 (" +
                              std::to_string(vcount - 1) + ")");
  }
  tree.is_tree = violation_count == 0 && connected && tree.edges.size() + 1 == vcount;

  // Longest child->root path, processing vertices from earliest to latest birth.
  std::vector<std::size_t> order(vcount);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    return tree.vertices[x].birth_time < tree.vertices[y].birth_time;
  });
  std::vector<std::vector<std::size_t>> parents(vcount);
  for (const TreeEdge& e : tree.edges) {
    if (tree.vertices[e.child].birth_time > tree.vertices[e.parent].birth_time) {
      parents[e.child].push_back(e.parent);
    }
  }
  std::vector<std::optional<std::size_t>> depth(vcount);
  depth[PriorityTree::kRoot] = 0;
  for (std::size_t x : order) {
    if (x == PriorityTree::kRoot) continue;
    for (std::size_t p : parents[x]) {
      if (depth[p] && (!depth[x] || *depth[p] + 1 > *depth[x])) depth[x] = *depth[p] + 1;
    }
    if (depth[x]) tree.height = std::max(tree.height, *depth[x]);
  }
  return tree;
}

}  // namespace cascadelab
