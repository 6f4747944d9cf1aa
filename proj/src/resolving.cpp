#include "mdim/resolving.hpp"

#include <algorithm>
#include <string>

namespace mdim {

namespace {

// Row v holds r(v|Q); rows are indexed by slot.
std::vector<RepresentationVector> all_representations(const VertexSet& q, const DistanceMatrix& d) {
  std::vector<RepresentationVector> rows;
  rows.reserve(static_cast<std::size_t>(d.size()));
  for (int v = 1; v <= d.size(); ++v) rows.push_back(representation(VertexId(v), q, d));
  return rows;
}

}  // namespace

VertexSet::VertexSet(std::vector<VertexId> members) : members_(std::move(members)) {
  auto sorted_copy = members_;
  std::sort(sorted_copy.begin(), sorted_copy.end());
  if (!sorted_copy.empty() && sorted_copy.front().value() < 1) {
    throw std::out_of_range("vertex labels start at 1, got x" + std::to_string(sorted_copy.front().value()));
  }
  const auto dup = std::adjacent_find(sorted_copy.begin(), sorted_copy.end());
  if (dup != sorted_copy.end()) {
    throw std::invalid_argument("vertex x" + std::to_string(dup->value()) + " listed twice");
  }
}

VertexSet::VertexSet(std::initializer_list<int> indices)
    : VertexSet([&] {
        std::vector<VertexId> out;
        for (int i : indices) out.emplace_back(i);
        return out;
      }()) {}

bool VertexSet::contains(VertexId v) const {
  return std::find(members_.begin(), members_.end(), v) != members_.end();
}

VertexSet VertexSet::sorted() const {
  auto copy = members_;
  std::sort(copy.begin(), copy.end());
  return VertexSet(std::move(copy));
}

VertexSet VertexSet::with(VertexId v) const {
  auto copy = members_;
  copy.push_back(v);
  return VertexSet(std::move(copy));
}

VertexSet VertexSet::without(std::size_t position) const {
  auto copy = members_;
  copy.erase(copy.begin() + static_cast<std::ptrdiff_t>(position));
  return VertexSet(std::move(copy));
}

void VertexSet::check_within(int vertex_count) const {
  for (VertexId v : members_) {
    if (v.value() < 1 || v.value() > vertex_count) {
      throw std::out_of_range("vertex x" + std::to_string(v.value()) + " outside 1.." + std::to_string(vertex_count));
    }
  }
}

RepresentationVector representation(VertexId v, const VertexSet& q, const DistanceMatrix& d) {
  if (v.value() < 1 || v.value() > d.size()) {
    throw std::out_of_range("vertex x" + std::to_string(v.value()) + " outside 1.." + std::to_string(d.size()));
  }
  q.check_within(d.size());
  RepresentationVector out;
  out.reserve(q.size());
  for (VertexId member : q) out.push_back(d(v, member));
  return out;
}

PairCheck is_resolving(const VertexSet& q, const DistanceMatrix& d) {
  if (q.empty()) throw std::domain_error("resolving check needs a non-empty set");
  const auto rows = all_representations(q, d);
  for (std::size_t u = 0; u < rows.size(); ++u) {
    for (std::size_t v = u + 1; v < rows.size(); ++v) {
      if (rows[u] == rows[v]) {
        return {false, VertexPair{VertexId::from_slot(u), VertexId::from_slot(v)}, std::nullopt};
      }
    }
  }
  return {};
}

PairCheck is_doubly_resolving(const VertexSet& q, const DistanceMatrix& d) {
  if (q.size() < 2) throw std::domain_error("doubly resolving check needs at least two vertices");
  const auto rows = all_representations(q, d);
  for (std::size_t u = 0; u < rows.size(); ++u) {
    for (std::size_t v = u + 1; v < rows.size(); ++v) {
      const int lambda = rows[u][0] - rows[v][0];
      bool constant = true;
      for (std::size_t i = 1; i < q.size() && constant; ++i) constant = rows[u][i] - rows[v][i] == lambda;
      if (constant) return {false, VertexPair{VertexId::from_slot(u), VertexId::from_slot(v)}, lambda};
    }
  }
  return {};
}

bool strongly_resolves(VertexId w, VertexId u, VertexId v, const DistanceMatrix& d) {
  return d(w, u) == d(w, v) + d(v, u) || d(w, v) == d(w, u) + d(u, v);
}

PairCheck is_strong_resolving(const VertexSet& q, const DistanceMatrix& d) {
  if (q.empty()) throw std::domain_error("strong resolving check needs a non-empty set");
  q.check_within(d.size());
  for (int u = 1; u <= d.size(); ++u) {
    for (int v = u + 1; v <= d.size(); ++v) {
      const bool covered = std::any_of(q.begin(), q.end(), [&](VertexId w) {
        return strongly_resolves(w, VertexId(u), VertexId(v), d);
      });
      if (!covered) return {false, VertexPair{VertexId(u), VertexId(v)}, std::nullopt};
    }
  }
  return {};
}

bool is_maximally_distant(VertexId u, VertexId v, const LabeledGraph& g, const DistanceMatrix& d) {
  if (u == v) throw std::domain_error("maximal distance is defined for distinct vertices only");
  const auto reach = d(v, u);
  const auto nbrs = g.neighbors(u);
  return std::all_of(nbrs.begin(), nbrs.end(), [&](VertexId w) { return d(v, w) <= reach; });
}

bool mutually_maximally_distant(VertexId u, VertexId v, const LabeledGraph& g, const DistanceMatrix& d) {
  return is_maximally_distant(u, v, g, d) && is_maximally_distant(v, u, g, d);
}

StrongResolvingGraph::StrongResolvingGraph(int vertex_count, std::vector<VertexPair> edges)
    : vertex_count_(vertex_count), edges_(std::move(edges)) {
  for (auto& [u, v] : edges_) {
    if (u == v || u.value() < 1 || v.value() > vertex_count_ || v.value() < 1 || u.value() > vertex_count_) {
      throw std::invalid_argument("bad strong resolving graph edge");
    }
    if (v < u) std::swap(u, v);
  }
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
}

bool StrongResolvingGraph::has_edge(VertexId u, VertexId v) const {
  if (v < u) std::swap(u, v);
  return std::binary_search(edges_.begin(), edges_.end(), VertexPair{u, v});
}

std::vector<VertexId> StrongResolvingGraph::incident_vertices() const {
  std::vector<VertexId> out;
  for (const auto& [u, v] : edges_) {
    out.push_back(u);
    out.push_back(v);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

StrongResolvingGraph strong_resolving_graph(const LabeledGraph& g, const DistanceMatrix& d) {
  std::vector<VertexPair> edges;
  for (int u = 1; u <= g.vertex_count(); ++u) {
    for (int v = u + 1; v <= g.vertex_count(); ++v) {
      if (mutually_maximally_distant(VertexId(u), VertexId(v), g, d)) edges.emplace_back(VertexId(u), VertexId(v));
    }
  }
  return StrongResolvingGraph(g.vertex_count(), std::move(edges));
}

bool is_vertex_cover(const VertexSet& q, const StrongResolvingGraph& srg) {
  return std::all_of(srg.edges().begin(), srg.edges().end(),
                     [&](const VertexPair& e) { return q.contains(e.first) || q.contains(e.second); });
}

}  // namespace mdim
