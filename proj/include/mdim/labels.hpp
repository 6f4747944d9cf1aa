#pragma once

#include <string>
#include <string_view>

#include "mdim/graph.hpp"
#include "mdim/resolving.hpp"

namespace mdim {

// How global indices map to x_t or x_t^(r). Prisms use copies of nk
// vertices; every other graph is a single copy.
struct LabelContext {
  int copy_size;
  int copies = 1;

  int vertex_count() const { return copy_size * copies; }
};

LabelContext label_context(const LabeledGraph& g);

// "x7" for single-copy graphs, "x7^(2)" for prisms.
std::string format_label(VertexId v, const LabelContext& context);
std::string format_set(const VertexSet& q, const LabelContext& context);

// Accepts x<t>, x_<t>, x<t>^<r> and x<t>^(<r>). A copy suffix is required
// for prisms and rejected otherwise. Throws std::invalid_argument on bad
// syntax and std::out_of_range on labels outside the graph.
VertexId parse_label(std::string_view text, const LabelContext& context);

// Comma-separated labels; whitespace around items is ignored.
VertexSet parse_label_list(std::string_view text, const LabelContext& context);

}  // namespace mdim
