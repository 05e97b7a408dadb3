#include "p2c/dot.hpp"

#include <sstream>

namespace p2c {

namespace {

void emit_gadget_cluster(std::ostream& os, const GadgetGraph& gg,
                         const std::string& tag, const std::string& title) {
  os << "  subgraph cluster_" << tag << " {\n";
  os << "    label=\"" << title << "\";\n";
  const SimpleGraph& g = gg.graph();
  for (VertexId v : g.vertices()) {
    os << "    " << tag << v.value << " [label=\"" << v.value
       << "\", shape=circle";
    if (gg.is_old(v))
      os << ", style=filled, fillcolor=black, fontcolor=white";
    os << "];\n";
  }
  for (auto [a, b] : g.edges())
    os << "    " << tag << a.value << " -- " << tag << b.value << ";\n";
  os << "  }\n";
}

}  // namespace

std::string iso_snapshot_dot(const GadgetGraph& gg, const GadgetGraph& gh,
                             int loop) {
  std::ostringstream os;
  os << "graph loop" << loop << " {\n";
  os << "  graph [labelloc=t, label=\"loop " << loop << "\"];\n";
  emit_gadget_cluster(os, gg, "g", "G side");
  emit_gadget_cluster(os, gh, "h", "H side");
  os << "}\n";
  return os.str();
}

std::string hc_snapshot_dot(const MultiGraph& g, const LeftRightContext& ctx,
                            int step) {
  std::ostringstream os;
  os << "graph step" << step << " {\n";
  os << "  graph [labelloc=t, label=\"step " << step << "\"];\n";
  for (VertexId v : g.vertex_set()) {
    os << "  v" << v.value << " [shape=circle, label=\"" << v.value;
    if (ctx.contains(v)) {
      const auto& [left, right] = ctx.at(v);
      os << "\\nL={";
      bool first = true;
      for (EdgeId e : left) {
        if (!first) os << ",";
        os << e.value;
        first = false;
      }
      os << "} R={";
      first = true;
      for (EdgeId e : right) {
        if (!first) os << ",";
        os << e.value;
        first = false;
      }
      os << "}";
    }
    os << "\"];\n";
  }
  for (EdgeId e : g.edge_ids()) {
    auto [a, b] = g.endpoints(e);
    os << "  v" << a.value << " -- v" << b.value << " [label=\"" << e.value
       << "\"];\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace p2c
