#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace cascadelab {

using NodeId = std::uint32_t;
using ColorId = std::uint32_t;

/// Sorted, duplicate-free list of node ids.
using NodeSet = std::vector<NodeId>;

/// Which construction step created an edge.
enum class Provenance : std::uint8_t {
  Initial,    ///< edge of the initial d-regular graph
  PaGlobal,   ///< a new seed's degree-proportional edge over all nodes
  SeedLink,   ///< a new seed's uniform link to an existing seed
  Homophyly,  ///< a non-seed's degree-proportional edge inside its color
  Plain,      ///< ER / PA baseline edge
};

std::string_view to_string(Provenance p);
/// Throws std::invalid_argument on an unknown tag.
Provenance provenance_from_string(std::string_view s);

struct NodeMeta {
  ColorId color = 0;
  bool is_seed = false;
  std::uint32_t birth_time = 0;

  friend bool operator==(const NodeMeta&, const NodeMeta&) = default;
};

struct Edge {
  NodeId u = 0;  // u < v
  NodeId v = 0;
  Provenance tag = Provenance::Plain;

  friend bool operator==(const Edge&, const Edge&) = default;
};

class GraphError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Immutable simple undirected graph with per-node metadata and per-edge
/// provenance. Neighbor lists are sorted ascending; edges are stored with
/// u < v in lexicographic order.
class LabeledGraph {
 public:
  LabeledGraph() = default;

  std::size_t node_count() const { return meta_.size(); }
  std::size_t edge_count() const { return edges_.size(); }

  /// Throws std::out_of_range for v >= node_count().
  std::size_t degree(NodeId v) const;
  std::span<const NodeId> neighbors(NodeId v) const;
  const NodeMeta& meta(NodeId v) const;

  std::span<const NodeMeta> metas() const { return meta_; }
  std::span<const Edge> edges() const { return edges_; }

  bool has_edge(NodeId u, NodeId v) const;
  std::size_t total_volume() const { return 2 * edges_.size(); }

  friend bool operator==(const LabeledGraph&, const LabeledGraph&) = default;

 private:
  friend class GraphBuilder;

  std::vector<std::size_t> offsets_{0};
  std::vector<NodeId> adjacency_;
  std::vector<NodeMeta> meta_;
  std::vector<Edge> edges_;
};

/// Single-writer construction. Self-loops are rejected on insertion and
/// duplicate edges on build().
class GraphBuilder {
 public:
  GraphBuilder() = default;
  explicit GraphBuilder(std::size_t expected_nodes, std::size_t expected_edges = 0);

  NodeId add_node(NodeMeta meta);
  void add_edge(NodeId u, NodeId v, Provenance tag);

  std::size_t node_count() const { return meta_.size(); }
  std::size_t edge_count() const { return edges_.size(); }

  LabeledGraph build() &&;

 private:
  std::vector<NodeMeta> meta_;
  std::vector<Edge> edges_;
};

/// Degree query with range checking.
inline std::size_t degree(const LabeledGraph& g, NodeId v) { return g.degree(v); }

/// Largest connected component of the subgraph induced on V \ excluded.
/// Ties go to the component holding the smallest node id.
NodeSet largest_connected_component(const LabeledGraph& g, std::span<const NodeId> excluded = {});

/// Sorts and deduplicates ids in place; throws std::out_of_range if any id >= n.
void normalize_node_set(NodeSet& s, std::size_t n);

// Small fixtures used by tests, benchmarks and examples.
LabeledGraph make_complete_graph(std::size_t n, Provenance tag = Provenance::Plain);
LabeledGraph make_cycle(std::size_t n);
LabeledGraph make_path(std::size_t n);
LabeledGraph make_star(std::size_t leaves);

}  // namespace cascadelab
