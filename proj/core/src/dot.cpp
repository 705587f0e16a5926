#include "pixcat/dot.hpp"

#include <sstream>

namespace pixcat {

namespace {

std::string box_label(const SkeletonQuiver& q, std::size_t v) {
  auto box = q.screen.pixel_box(q.vertices[v]);
  std::string out;
  for (std::size_t k = 0; k < box.size(); ++k) out += (k ? "x" : "") + fmt_interval(box[k]);
  return out;
}

}  // namespace

std::string skeleton_dot(const SkeletonQuiver& q) {
  std::ostringstream os;
  os << "digraph skeleton {\n  rankdir=LR;\n  node [shape=box];\n";
  for (std::size_t v = 0; v < q.size(); ++v)
    os << "  v" << v << " [label=\"" << box_label(q, v) << "\"];\n";
  for (auto [a, b] : q.arrows) os << "  v" << a << " -> v" << b << ";\n";
  for (auto [a, b] : q.pruned_arrows) os << "  v" << a << " -> v" << b << " [style=dotted];\n";
  os << "}\n";
  return os.str();
}

std::string aus_quiver_dot(const HigherAuslanderQuiver& q) {
  std::ostringstream os;
  os << "digraph auslander {\n  node [shape=plaintext];\n";
  auto label = [](const AusVertex& v) {
    std::string out = "(";
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
    return out + ")";
  };
  for (std::size_t v = 0; v < q.vertices.size(); ++v)
    os << "  v" << v << " [label=\"" << label(q.vertices[v]) << "\"];\n";
  for (auto [a, b] : q.arrows) os << "  v" << a << " -> v" << b << ";\n";
  // dotted mesh diagonals: composable arrow pairs stepping two coordinates
  for (std::size_t a = 0; a < q.vertices.size(); ++a)
    for (std::size_t b = 0; b < q.vertices.size(); ++b) {
      if (!q.hom[a][b]) continue;
      int diff = 0;
      bool unit = true;
      for (std::size_t k = 0; k < q.vertices[a].size(); ++k) {
        long long d = q.vertices[b][k] - q.vertices[a][k];
        if (d == 0) continue;
        if (d != 1) unit = false;
        ++diff;
      }
      if (unit && diff == 2) os << "  v" << a << " -> v" << b << " [style=dotted];\n";
    }
  os << "}\n";
  return os.str();
}

}  // namespace pixcat
