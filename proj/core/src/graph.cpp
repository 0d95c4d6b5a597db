#include "cascadelab/graph.hpp"

#include <algorithm>
#include <queue>

namespace cascadelab {

std::string_view to_string(Provenance p) {
  switch (p) {
    case Provenance::Initial: return "INITIAL";
    case Provenance::PaGlobal: return "PA_GLOBAL";
    case Provenance::SeedLink: return "SEED_LINK";
    case Provenance::Homophyly: return "HOMOPHYLY";
    case Provenance::Plain: return "PLAIN";
  }
  return "PLAIN";
}

Provenance provenance_from_string(std::string_view s) {
  if (s == "INITIAL") return Provenance::Initial;
  if (s == "PA_GLOBAL") return Provenance::PaGlobal;
  if (s == "SEED_LINK") return Provenance::SeedLink;
  if (s == "HOMOPHYLY") return Provenance::Homophyly;
  if (s == "PLAIN") return Provenance::Plain;
  throw std::invalid_argument("unknown edge provenance '" + std::string(s) + "'");
}

std::size_t LabeledGraph::degree(NodeId v) const {
  if (v >= node_count()) throw std::out_of_range("node id " + std::to_string(v) + " out of range");
  return offsets_[v + 1] - offsets_[v];
}

std::span<const NodeId> LabeledGraph::neighbors(NodeId v) const {
  if (v >= node_count()) throw std::out_of_range("node id " + std::to_string(v) + " out of range");
  return {adjacency_.data() + offsets_[v], offsets_[v + 1] - offsets_[v]};
}

const NodeMeta& LabeledGraph::meta(NodeId v) const {
  if (v >= node_count()) throw std::out_of_range("node id " + std::to_string(v) + " out of range");
  return meta_[v];
}

bool LabeledGraph::has_edge(NodeId u, NodeId v) const {
  const auto nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

GraphBuilder::GraphBuilder(std::size_t expected_nodes, std::size_t expected_edges) {
  meta_.reserve(expected_nodes);
  edges_.reserve(expected_edges);
}

NodeId GraphBuilder::add_node(NodeMeta meta) {
  meta_.push_back(meta);
  return static_cast<NodeId>(meta_.size() - 1);
}

void GraphBuilder::add_edge(NodeId u, NodeId v, Provenance tag) {
  if (u == v) throw GraphError("self-loop on node " + std::to_string(u));
  if (u >= meta_.size() || v >= meta_.size()) {
    throw GraphError("edge endpoint out of range: " + std::to_string(u) + "-" + std::to_string(v));
  }
  if (u > v) std::swap(u, v);
  edges_.push_back({u, v, tag});
}

LabeledGraph GraphBuilder::build() && {
  std::sort(edges_.begin(), edges_.end(), [](const Edge& a, const Edge& b) {
    return a.u != b.u ? a.u < b.u : a.v < b.v;
  });
  for (std::size_t i = 1; i < edges_.size(); ++i) {
    if (edges_[i].u == edges_[i - 1].u && edges_[i].v == edges_[i - 1].v) {
      throw GraphError("duplicate edge " + std::to_string(edges_[i].u) + "-" +
                       std::to_string(edges_[i].v));
    }
  }

  LabeledGraph g;
  const std::size_t n = meta_.size();
  g.offsets_.assign(n + 1, 0);
  for (const Edge& e : edges_) {
    ++g.offsets_[e.u + 1];
    ++g.offsets_[e.v + 1];
  }
  for (std::size_t i = 0; i < n; ++i) g.offsets_[i + 1] += g.offsets_[i];
  g.adjacency_.resize(2 * edges_.size());
  std::vector<std::size_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
  // Two passes over the (u, v)-sorted edge list: smaller neighbors first, then
  // larger ones, each in ascending order.
  for (const Edge& e : edges_) {
    g.adjacency_[cursor[e.v]++] = e.u;
  }
  for (const Edge& e : edges_) {
    g.adjacency_[cursor[e.u]++] = e.v;
  }
  g.meta_ = std::move(meta_);
  g.edges_ = std::move(edges_);
  return g;
}

void normalize_node_set(NodeSet& s, std::size_t n) {
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  if (!s.empty() && s.back() >= n) {
    throw std::out_of_range("node id " + std::to_string(s.back()) + " out of range");
  }
}

NodeSet largest_connected_component(const LabeledGraph& g, std::span<const NodeId> excluded) {
  const std::size_t n = g.node_count();
  std::vector<char> blocked(n, 0);
  for (NodeId v : excluded) {
    if (v >= n) throw std::out_of_range("excluded node id out of range");
    blocked[v] = 1;
  }

  NodeSet best;
  std::vector<NodeId> component;
  std::vector<char> seen(n, 0);
  std::queue<NodeId> frontier;
  for (NodeId start = 0; start < n; ++start) {
    if (blocked[start] || seen[start]) continue;
    component.clear();
    seen[start] = 1;
    frontier.push(start);
    while (!frontier.empty()) {
      const NodeId x = frontier.front();
      frontier.pop();
      component.push_back(x);
      for (NodeId y : g.neighbors(x)) {
        if (!blocked[y] && !seen[y]) {
          seen[y] = 1;
          frontier.push(y);
        }
      }
    }
    if (component.size() > best.size()) best = component;
    if (2 * best.size() >= n) break;  // no later component can be strictly larger
  }
  std::sort(best.begin(), best.end());
  return best;
}

LabeledGraph make_complete_graph(std::size_t n, Provenance tag) {
  GraphBuilder b(n, n * (n - (n > 0 ? 1 : 0)) / 2);
  for (std::size_t i = 0; i < n; ++i) {
    b.add_node({static_cast<ColorId>(0), false, static_cast<std::uint32_t>(i)});
  }
  for (NodeId u = 0; u < n; ++u) {
    for (NodeId v = u + 1; v < n; ++v) b.add_edge(u, v, tag);
  }
  return std::move(b).build();
}

namespace {

GraphBuilder plain_nodes(std::size_t n) {
  GraphBuilder b(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    b.add_node({static_cast<ColorId>(0), false, static_cast<std::uint32_t>(i)});
  }
  return b;
}

}  // namespace

LabeledGraph make_cycle(std::size_t n) {
  auto b = plain_nodes(n);
  for (NodeId i = 0; i + 1 < n; ++i) b.add_edge(i, i + 1, Provenance::Plain);
  if (n >= 3) b.add_edge(static_cast<NodeId>(n - 1), 0, Provenance::Plain);
  return std::move(b).build();
}

LabeledGraph make_path(std::size_t n) {
  auto b = plain_nodes(n);
  for (NodeId i = 0; i + 1 < n; ++i) b.add_edge(i, i + 1, Provenance::Plain);
  return std::move(b).build();
}

LabeledGraph make_star(std::size_t leaves) {
  auto b = plain_nodes(leaves + 1);
  for (NodeId i = 1; i <= leaves; ++i) b.add_edge(0, i, Provenance::Plain);
  return std::move(b).build();
}

}  // namespace cascadelab
