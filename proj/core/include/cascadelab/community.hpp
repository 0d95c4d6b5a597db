#pragma once

#include <vector>

#include "cascadelab/graph.hpp"

namespace cascadelab {

/// A homochromatic node set and its seed.
struct Community {
  ColorId color = 0;
  NodeSet members;  // sorted
  NodeId seed = 0;
};

/// One community per color, ordered by color id, partitioning V.
/// Throws GraphError if a color has no seed or more than one.
std::vector<Community> communities(const LabeledGraph& g);

}  // namespace cascadelab
