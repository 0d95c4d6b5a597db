#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "cascadelab/community.hpp"
#include "cascadelab/graph.hpp"

namespace cascadelab {

/// Per-node infection thresholds. A node x outside the attack set becomes
/// infected once (infected neighbors) / degree(x) >= phi[x]. Uninfectable
/// nodes and degree-0 nodes only ever join through the attack set.
struct ThresholdAssignment {
  std::vector<double> phi;
  std::vector<char> uninfectable;

  std::size_t size() const { return phi.size(); }
};

/// Throws std::invalid_argument unless 0 < phi <= 1.
ThresholdAssignment uniform_thresholds(const LabeledGraph& g, double phi);

/// phi(v) = r / deg(v) with r uniform on {1..deg(v)}; degree-0 nodes are
/// uninfectable. Deterministic in trial_seed.
ThresholdAssignment random_thresholds(const LabeledGraph& g, std::uint64_t trial_seed);

struct CascadeOutcome {
  NodeSet infected;                  ///< sorted
  std::size_t rounds = 0;            ///< propagation rounds that infected someone
  std::vector<std::size_t> growth;   ///< growth[0] = |S|, then per-round new infections
};

/// Least fixed point of threshold infection from `attack`, computed by
/// round-synchronous propagation.
CascadeOutcome infection_set(const LabeledGraph& g, std::span<const NodeId> attack,
                             const ThresholdAssignment& theta);

/// Reusable scratch space for many cascades on one graph. Not thread-safe;
/// use one per worker.
class CascadeRunner {
 public:
  explicit CascadeRunner(const LabeledGraph& g);

  /// Binds a threshold assignment (precomputes integer infection quotas).
  void set_thresholds(const ThresholdAssignment& theta);

  /// Infected count only; no sorted set materialized.
  std::size_t run_count(std::span<const NodeId> attack);
  CascadeOutcome run(std::span<const NodeId> attack);

 private:
  std::size_t propagate(std::span<const NodeId> attack, std::vector<std::size_t>* growth);

  const LabeledGraph* g_;
  std::vector<std::uint32_t> quota_;
  std::vector<std::uint32_t> hits_;
  std::vector<char> infected_;
  std::vector<NodeId> touched_;
  std::vector<NodeId> frontier_;
  std::vector<NodeId> next_;
};

/// Smallest c in [1, deg] with c / deg >= phi, using the same floating-point
/// comparison as the fraction test; kNever if none.
std::uint32_t infection_quota(std::size_t degree, double phi);
inline constexpr std::uint32_t kNever = 0xFFFFFFFFu;

/// Survivors cut off from the largest component once `attack` is deleted.
/// The attacked nodes themselves are not counted.
NodeSet injury_set(const LabeledGraph& g, std::span<const NodeId> attack);

/// The k highest-degree nodes, ties to the smaller id, in that rank order.
std::vector<NodeId> top_degree_nodes(const LabeledGraph& g, std::size_t k);

/// Smallest grid phi whose uniform cascade from `attack` infects at most
/// epsilon * n nodes; nullopt if none qualifies. The grid must be ascending
/// within (0, 1]; the predicate is monotone in phi, so the search bisects.
std::optional<double> security_threshold(const LabeledGraph& g, std::span<const NodeId> attack,
                                         std::span<const double> grid, double epsilon);

enum class CommunityStrength { Strong, Vulnerable };

/// Freezes every node outside the community as infected and lets only the
/// members respond. Strong iff the seed stays uninfected.
CommunityStrength classify_community(const LabeledGraph& g, const Community& community,
                                     const ThresholdAssignment& theta);

/// Number of vulnerable communities.
std::size_t count_vulnerable(const LabeledGraph& g, const ThresholdAssignment& theta);

}  // namespace cascadelab
