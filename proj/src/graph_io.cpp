#include "mdim/graph_io.hpp"

#include <sstream>
#include <stdexcept>

namespace mdim {

std::string write_edge_list(const LabeledGraph& g) {
  std::ostringstream out;
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const auto& [u, v] : g.edges()) out << u.value() << ' ' << v.value() << '\n';
  return out.str();
}

LabeledGraph read_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  bool have_header = false;
  long vertices = 0;
  long expected = 0;
  std::vector<VertexPair> edges;
  while (std::getline(in, line)) {
    if (line.empty() || line.front() == '#') continue;
    std::istringstream fields(line);
    long a = 0;
    long b = 0;
    std::string extra;
    if (!(fields >> a >> b) || (fields >> extra)) {
      throw std::invalid_argument("malformed edge list line: '" + line + "'");
    }
    if (!have_header) {
      vertices = a;
      expected = b;
      have_header = true;
    } else {
      edges.emplace_back(VertexId(static_cast<int>(a)), VertexId(static_cast<int>(b)));
    }
  }
  if (!have_header) throw std::invalid_argument("edge list is missing its header line");
  if (static_cast<long>(edges.size()) != expected) {
    throw std::invalid_argument("edge list header announces " + std::to_string(expected) + " edges, found " +
                                std::to_string(edges.size()));
  }
  return LabeledGraph(static_cast<int>(vertices), edges);
}

std::string write_dot(const LabeledGraph& g, const LabelContext& context) {
  std::ostringstream out;
  out << "graph G {\n";
  out << "  label=\"" << describe(g.family()) << "\";\n";
  for (int v = 1; v <= g.vertex_count(); ++v) {
    out << "  " << v << " [label=\"" << format_label(VertexId(v), context) << "\"];\n";
  }
  for (const auto& [u, v] : g.edges()) out << "  " << u.value() << " -- " << v.value() << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace mdim
