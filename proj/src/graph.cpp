#include "assoc/graph.hpp"

namespace assoc {

std::vector<RotationEdge> rotation_edges(int n, bool full, int cap) {
  std::vector<RotationEdge> edges;
  for (const Expression& e : enumerate_expressions(n, cap)) {
    for (int i = 0; i + 3 <= n; ++i) {
      if (can_apply(i, e)) {
        edges.push_back(RotationEdge{e, apply_alpha(i, e), "a" + std::to_string(i)});
      }
    }
    if (full) {
      for (const NodeAddress& a : rotation_sites(e)) {
        if (a.on_left_spine()) continue;  // already present as a spine move
        edges.push_back(RotationEdge{e, rotate_at(e, a), "rot@" + a.to_string()});
      }
    }
  }
  return edges;
}

std::string rotation_graph_dot(int n, bool full, int cap) {
  std::string out = "digraph rotations {\n";
  for (const Expression& e : enumerate_expressions(n, cap)) {
    out += "  \"" + render(e) + "\";\n";
  }
  for (const RotationEdge& edge : rotation_edges(n, full, cap)) {
    out += "  \"" + render(edge.source) + "\" -> \"" + render(edge.target) + "\" [label=\"" +
           edge.label + "\"];\n";
  }
  out += "}\n";
  return out;
}

}  // namespace assoc
