#pragma once

#include <string>
#include <string_view>

#include "mdim/graph.hpp"
#include "mdim/labels.hpp"

namespace mdim {

// Plain edge list: a header line "<vertices> <edges>", then one "u v" line
// per edge with u < v, ascending. LF line endings.
std::string write_edge_list(const LabeledGraph& g);

// Inverse of write_edge_list. Blank lines and lines starting with '#' are
// skipped. Throws std::invalid_argument on malformed input.
LabeledGraph read_edge_list(std::string_view text);

// Graphviz DOT, vertices named by their x labels.
std::string write_dot(const LabeledGraph& g, const LabelContext& context);

}  // namespace mdim
