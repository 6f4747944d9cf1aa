#pragma once

#include "mdim/graph.hpp"

namespace mdim {

// Vertex (a, b) of G x H is stored at index (b - 1) * |V(G)| + a.
LabeledGraph cartesian_product(const LabeledGraph& g, const LabeledGraph& h);

// C_n x P_k on x_1..x_nk. Layer V_p holds x_{(p-1)n+1} .. x_{pn}.
struct CylinderGraph {
  int n;
  int k;
  LabeledGraph graph;

  int layer(VertexId v) const;
  // Cycle position 1..n of v inside its layer.
  int position(VertexId v) const;
  VertexId at(int layer, int position) const;
};

// (C_n x P_k) x P_m. x_t^(r) is stored at global index (r - 1) * nk + t.
struct PrismGraph {
  int n;
  int k;
  int m;
  LabeledGraph graph;

  int copy_size() const { return n * k; }
  int copy_of(VertexId v) const;
  VertexId index_within_copy(VertexId v) const;
  VertexId global(int t, int copy) const;
};

// Built straight from the layered edge rule, not through cartesian_product.
CylinderGraph explicit_cylinder(int n, int k);
PrismGraph explicit_prism(int n, int k, int m);

// Global index of x_t^(copy) for a prism with copies of size nk.
VertexId prism_index(int t, int copy, int n, int k);

// True iff the identity on indices is an isomorphism, i.e. every vertex has
// the same neighbour set in both graphs. Throws std::invalid_argument on a
// vertex-count mismatch.
bool isomorphic_by_canonical_map(const LabeledGraph& explicit_graph, const LabeledGraph& generic_graph);

// x_e and x_d are compatible iff n divides |d - e|. Throws
// std::domain_error when e == d.
bool compatible(VertexId e, VertexId d, int n);

// ceil(t / n); throws std::out_of_range unless 1 <= t <= nk.
int layer_of(VertexId t, int n, int k);

// Layers p and q are congruous when compatible vertices in them have equal
// degree. Read off the graph's degrees.
bool congruous(int p, int q, const CylinderGraph& cylinder);

}  // namespace mdim
