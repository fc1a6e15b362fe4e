#include "cogmap/dot.hpp"

namespace cogmap {

std::string export_dot(const ConnectionMatrix& m, const std::string& name) {
  std::string out = "digraph \"" + name + "\" {\n";
  const bool bipartite = m.kind() != MatrixKind::Cognitive;
  for (const auto& l : m.row_space().labels()) out += "  \"" + l + "\";\n";
  if (bipartite)
    for (const auto& l : m.col_space().labels()) out += "  \"" + l + "\" [shape=box];\n";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      NeutroValue v = m.at(i, j);
      if (v.is_zero()) continue;
      out += "  \"" + m.row_space().label(i) + "\" -> \"" + m.col_space().label(j) + "\"";
      std::string attrs;
      if (v.indet != 0) attrs = "style=dashed";
      if (!(v == kOne) && !(v == kIndeterminate)) {
        if (!attrs.empty()) attrs += ", ";
        attrs += "label=\"" + to_token(v) + "\"";
      }
      if (!attrs.empty()) out += " [" + attrs + "]";
      out += ";\n";
    }
  }
  out += "}\n";
  return out;
}

}  // namespace cogmap
