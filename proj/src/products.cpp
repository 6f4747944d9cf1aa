#include "mdim/products.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

namespace mdim {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw std::domain_error(what);
}

}  // namespace

LabeledGraph cartesian_product(const LabeledGraph& g, const LabeledGraph& h) {
  const int gn = g.vertex_count();
  const int hn = h.vertex_count();
  const auto index = [gn](VertexId a, VertexId b) { return VertexId((b.value() - 1) * gn + a.value()); };

  const auto g_edges = g.edges();
  const auto h_edges = h.edges();
  std::vector<VertexPair> edges;
  edges.reserve(g_edges.size() * static_cast<std::size_t>(hn) + h_edges.size() * static_cast<std::size_t>(gn));
  for (int b = 1; b <= hn; ++b) {
    for (const auto& [a1, a2] : g_edges) edges.emplace_back(index(a1, VertexId(b)), index(a2, VertexId(b)));
  }
  for (int a = 1; a <= gn; ++a) {
    for (const auto& [b1, b2] : h_edges) edges.emplace_back(index(VertexId(a), b1), index(VertexId(a), b2));
  }
  return LabeledGraph(gn * hn, edges);
}

int CylinderGraph::layer(VertexId v) const { return layer_of(v, n, k); }

int CylinderGraph::position(VertexId v) const {
  layer_of(v, n, k);
  return (v.value() - 1) % n + 1;
}

VertexId CylinderGraph::at(int layer, int position) const {
  if (layer < 1 || layer > k || position < 1 || position > n) {
    throw std::out_of_range("no vertex at layer " + std::to_string(layer) + ", position " + std::to_string(position));
  }
  return VertexId((layer - 1) * n + position);
}

int PrismGraph::copy_of(VertexId v) const {
  if (!graph.contains(v)) throw std::out_of_range("vertex x" + std::to_string(v.value()) + " outside the prism");
  return (v.value() - 1) / copy_size() + 1;
}

VertexId PrismGraph::index_within_copy(VertexId v) const {
  if (!graph.contains(v)) throw std::out_of_range("vertex x" + std::to_string(v.value()) + " outside the prism");
  return VertexId((v.value() - 1) % copy_size() + 1);
}

VertexId PrismGraph::global(int t, int copy) const {
  if (copy < 1 || copy > m) throw std::out_of_range("copy " + std::to_string(copy) + " outside 1.." + std::to_string(m));
  return prism_index(t, copy, n, k);
}

VertexId prism_index(int t, int copy, int n, int k) {
  if (t < 1 || t > n * k) {
    throw std::out_of_range("x" + std::to_string(t) + " outside 1.." + std::to_string(n * k));
  }
  if (copy < 1) throw std::out_of_range("copy index must be positive, got " + std::to_string(copy));
  return VertexId((copy - 1) * n * k + t);
}

CylinderGraph explicit_cylinder(int n, int k) {
  require(n >= 3, "cylinder needs n >= 3, got n = " + std::to_string(n));
  require(k >= 3, "cylinder needs k >= 3, got k = " + std::to_string(k));

  const int total = n * k;
  const auto layer = [n](int i) { return (i - 1) / n + 1; };
  std::vector<VertexPair> edges;
  for (int i = 1; i <= total; ++i) {
    // x_i x_j, i < j, same layer and j - i in {1, n - 1}.
    for (int j : {i + 1, i + n - 1}) {
      if (j > i && j <= total && layer(j) == layer(i)) edges.emplace_back(VertexId(i), VertexId(j));
    }
    // x_i in V_q, x_j in V_{q+1}, j - i = n.
    const int j = i + n;
    if (j <= total && layer(j) == layer(i) + 1) edges.emplace_back(VertexId(i), VertexId(j));
  }
  return CylinderGraph{n, k, LabeledGraph(total, edges, CylinderFamily{n, k})};
}

PrismGraph explicit_prism(int n, int k, int m) {
  require(m >= 2, "prism needs m >= 2, got m = " + std::to_string(m));
  const CylinderGraph base = explicit_cylinder(n, k);
  const int nk = n * k;

  const auto base_edges = base.graph.edges();
  std::vector<VertexPair> edges;
  for (int r = 1; r <= m; ++r) {
    for (const auto& [u, v] : base_edges) {
      edges.emplace_back(prism_index(u.value(), r, n, k), prism_index(v.value(), r, n, k));
    }
  }
  for (int r = 1; r < m; ++r) {
    for (int t = 1; t <= nk; ++t) edges.emplace_back(prism_index(t, r, n, k), prism_index(t, r + 1, n, k));
  }
  return PrismGraph{n, k, m, LabeledGraph(nk * m, edges, PrismFamily{n, k, m})};
}

bool isomorphic_by_canonical_map(const LabeledGraph& explicit_graph, const LabeledGraph& generic_graph) {
  if (explicit_graph.vertex_count() != generic_graph.vertex_count()) {
    throw std::invalid_argument("vertex counts differ: " + std::to_string(explicit_graph.vertex_count()) + " vs " +
                                std::to_string(generic_graph.vertex_count()));
  }
  for (int v = 1; v <= explicit_graph.vertex_count(); ++v) {
    const auto a = explicit_graph.neighbors(VertexId(v));
    const auto b = generic_graph.neighbors(VertexId(v));
    if (!std::equal(a.begin(), a.end(), b.begin(), b.end())) return false;
  }
  return true;
}

bool compatible(VertexId e, VertexId d, int n) {
  if (e == d) throw std::domain_error("compatibility is defined for distinct vertices only");
  require(n >= 1, "compatibility needs n >= 1");
  return std::abs(d.value() - e.value()) % n == 0;
}

int layer_of(VertexId t, int n, int k) {
  if (n < 1 || k < 1) throw std::domain_error("layer_of needs positive n and k");
  if (t.value() < 1 || t.value() > n * k) {
    throw std::out_of_range("x" + std::to_string(t.value()) + " outside 1.." + std::to_string(n * k));
  }
  return (t.value() + n - 1) / n;
}

bool congruous(int p, int q, const CylinderGraph& cylinder) {
  for (int layer : {p, q}) {
    if (layer < 1 || layer > cylinder.k) {
      throw std::out_of_range("layer " + std::to_string(layer) + " outside 1.." + std::to_string(cylinder.k));
    }
  }
  for (int s = 1; s <= cylinder.n; ++s) {
    if (degree(cylinder.graph, cylinder.at(p, s)) != degree(cylinder.graph, cylinder.at(q, s))) return false;
  }
  return true;
}

}  // namespace mdim
