#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>

#include "cascadelab/graph.hpp"

namespace cascadelab {

enum class Model { Er, Pa, Security };

std::string_view to_string(Model m);
/// Accepts "er", "pa", "security"; throws std::invalid_argument otherwise.
Model model_from_string(std::string_view s);

struct GenParams {
  std::size_t n = 0;
  std::size_t d = 0;  ///< edges per new node (expected average degree for ER)
  double a = 1.5;     ///< homophyly exponent, security model only
  std::uint64_t master_seed = 0;
};

/// G(n, p) with p = d / (n - 1). Single color 0, no seeds, PLAIN edges.
/// Throws std::invalid_argument when d >= n.
LabeledGraph gen_er(std::size_t n, std::size_t d, std::uint64_t master_seed);

/// Preferential attachment grown from K_{d+1}: every later node links to d
/// distinct existing nodes sampled proportionally to degree.
LabeledGraph gen_pa(std::size_t n, std::size_t d, std::uint64_t master_seed);

/// Homophyly / randomness / preferential-attachment growth.
///
/// Starts from K_{d+1} with every node a seed of its own color. Node i
/// (i = d+1 .. n-1) becomes a seed with probability seed_probability(i, a):
/// it takes a fresh color, one PA_GLOBAL edge chosen degree-proportionally
/// over all nodes, and up to d-1 SEED_LINK edges to distinct uniform seeds.
/// Otherwise it joins a uniformly chosen existing color and links to
/// min(d, class size) distinct members, degree-proportionally (degrees are
/// taken in the whole graph).
///
/// Requires n >= d+1, d >= 2 and a > 1.
LabeledGraph gen_security(std::size_t n, std::size_t d, double a, std::uint64_t master_seed);

LabeledGraph generate(Model model, const GenParams& params);

/// min(1, 1 / (ln i)^a), and 1 whenever ln i <= 1.
double seed_probability(std::size_t i, double a);

/// Sum of seed_probability(i, a) for i = d+1 .. n-1.
double expected_seed_count(std::size_t n, std::size_t d, double a);

}  // namespace cascadelab
