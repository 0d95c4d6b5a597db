#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "cascadelab/community.hpp"
#include "cascadelab/graph.hpp"

namespace cascadelab {

/// cut(W, V\W) / min(vol W, vol V\W). Throws std::invalid_argument if W is
/// empty or all of V, std::domain_error if the smaller volume is zero.
double conductance(const LabeledGraph& g, std::span<const NodeId> w);

struct ColorCount {
  ColorId color = 0;
  std::size_t count = 0;

  friend bool operator==(const ColorCount&, const ColorCount&) = default;
};

/// Neighbor color classes of one node, largest first.
struct DegreeProfile {
  NodeId node = 0;
  std::vector<ColorCount> entries;  ///< count descending; ties: own color first, then color id
  std::size_t length = 0;           ///< number of distinct neighbor colors
  std::size_t first_degree = 0;
  std::size_t second_degree = 0;

  /// Whether the largest neighbor color class is the node's own color.
  bool own_color_first = false;
};

DegreeProfile degree_profile(const LabeledGraph& g, NodeId v);

struct PowerLawFit {
  double exponent = 0.0;
  double std_error = 0.0;   ///< (exponent - 1) / sqrt(samples)
  std::size_t samples = 0;  ///< values >= d_min
  std::size_t d_min = 0;
  double ccdf_r2 = 0.0;     ///< R^2 of a least-squares line through log-log CCDF
};

/// Discrete power-law MLE, alpha = 1 + m / sum ln(x_i / (d_min - 1/2)),
/// over values >= d_min. Needs >= 100 such values, not all equal.
PowerLawFit powerlaw_exponent(std::span<const std::size_t> values, std::size_t d_min);

/// Degree sequence helper.
std::vector<std::size_t> degree_sequence(const LabeledGraph& g);

struct DistanceStats {
  double avg_distance = 0.0;
  std::size_t est_diameter = 0;
  std::size_t pairs = 0;        ///< reachable pairs averaged over
  std::size_t unreachable = 0;  ///< sampled pairs in different components
  bool exact = false;           ///< every pair enumerated
};

/// Average distance over sampled node pairs and a double-sweep diameter
/// estimate on the largest component. Graphs with at most `sample_pairs`
/// pairs are enumerated exactly.
DistanceStats distance_stats(const LabeledGraph& g, std::size_t sample_pairs, std::uint64_t seed);

/// Hop distances from `source` (SIZE_MAX when unreachable).
std::vector<std::size_t> bfs_distances(const LabeledGraph& g, NodeId source);

/// Exact hop distance by BFS from u, stopping at v; nullopt if unreachable.
std::optional<std::size_t> hop_distance(const LabeledGraph& g, NodeId u, NodeId v);

/// Exact diameter of each community's induced subgraph, indexed like
/// communities(g); nullopt when the induced subgraph is disconnected.
std::vector<std::optional<std::size_t>> community_diameters(const LabeledGraph& g);

struct TreeVertex {
  std::vector<ColorId> colors;  ///< several only for the root
  NodeId seed = 0;              ///< earliest-born seed among the colors
  std::uint32_t birth_time = 0;
};

struct TreeEdge {
  std::size_t child = 0;
  std::size_t parent = 0;

  friend bool operator==(const TreeEdge&, const TreeEdge&) = default;
};

/// Contracted community graph with edges oriented towards earlier-born nodes.
struct PriorityTree {
  static constexpr std::size_t kRoot = 0;

  std::vector<TreeVertex> vertices;  ///< vertices[0] is the merged initial graph
  std::vector<TreeEdge> edges;       ///< deduplicated, sorted by (child, parent)
  std::size_t height = 0;            ///< longest directed path ending at the root
  bool is_tree = false;
  std::vector<std::string> violations;
};

/// Deletes SEED_LINK edges, merges each color into one vertex (all
/// initial-graph colors into the root), orients each surviving edge from its
/// later-born endpoint to the earlier-born one and collapses parallels.
/// Throws GraphError for graphs without provenance (PLAIN edges).
PriorityTree infection_priority_tree(const LabeledGraph& g);

struct NavigationResult {
  std::optional<std::vector<NodeId>> path;  ///< nullopt on failure
  std::size_t visited = 0;                  ///< distinct nodes touched by the search
};

/// Three-stage route: inside u's community to its seed, across the seed
/// subgraph between the two seeds, then down to v inside v's community.
/// Fails when no route exists or it would exceed `hop_budget` hops.
NavigationResult navigate(const LabeledGraph& g, NodeId u, NodeId v, std::size_t hop_budget);

}  // namespace cascadelab
