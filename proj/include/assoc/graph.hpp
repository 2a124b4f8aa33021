#pragma once

#include <string>
#include <vector>

#include "assoc/moves.hpp"

// Rotation graph export. Nodes are all expressions on n leaves; edges are
// the spine moves, plus every other left rotation when full is set.

namespace assoc {

struct RotationEdge {
  Expression source;
  Expression target;
  std::string label;  // "a<i>", or "rot@<address>" for non-spine rotations
};

std::vector<RotationEdge> rotation_edges(int n, bool full, int cap = kDefaultLeafCap);
std::string rotation_graph_dot(int n, bool full, int cap = kDefaultLeafCap);

}  // namespace assoc
