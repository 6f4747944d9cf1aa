#include "mdim/graph.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <sstream>

namespace mdim {

namespace {

constexpr DistanceMatrix::Distance kUnreached = -1;

std::vector<DistanceMatrix::Distance> bfs_from(
    const std::vector<std::vector<VertexId>>& adjacency, std::size_t source) {
  std::vector<DistanceMatrix::Distance> dist(adjacency.size(), kUnreached);
  std::queue<std::size_t> frontier;
  dist[source] = 0;
  frontier.push(source);
  while (!frontier.empty()) {
    const std::size_t u = frontier.front();
    frontier.pop();
    for (VertexId w : adjacency[u]) {
      if (dist[w.slot()] == kUnreached) {
        dist[w.slot()] = dist[u] + 1;
        frontier.push(w.slot());
      }
    }
  }
  return dist;
}

}  // namespace

std::string describe(const FamilyTag& tag) {
  struct Visitor {
    std::string operator()(const GenericFamily&) const { return "generic"; }
    std::string operator()(const CycleFamily& f) const { return "C_" + std::to_string(f.n); }
    std::string operator()(const PathFamily& f) const { return "P_" + std::to_string(f.k); }
    std::string operator()(const CylinderFamily& f) const {
      return "C_" + std::to_string(f.n) + " x P_" + std::to_string(f.k);
    }
    std::string operator()(const PrismFamily& f) const {
      return "(C_" + std::to_string(f.n) + " x P_" + std::to_string(f.k) + ") x P_" + std::to_string(f.m);
    }
  };
  return std::visit(Visitor{}, tag);
}

DisconnectedGraphError::DisconnectedGraphError(VertexId from, VertexId to)
    : std::runtime_error("graph is disconnected: no path from x" + std::to_string(from.value()) +
                         " to x" + std::to_string(to.value())),
      from_(from),
      to_(to) {}

LabeledGraph::LabeledGraph(int vertex_count, std::span<const VertexPair> edges, FamilyTag family)
    : family_(family) {
  if (vertex_count < 1) {
    throw std::invalid_argument("graph needs at least one vertex, got " + std::to_string(vertex_count));
  }
  adjacency_.resize(static_cast<std::size_t>(vertex_count));
  for (const auto& [u, v] : edges) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) {
      throw std::invalid_argument("self-loop at x" + std::to_string(u.value()));
    }
    adjacency_[u.slot()].push_back(v);
    adjacency_[v.slot()].push_back(u);
  }
  for (std::size_t s = 0; s < adjacency_.size(); ++s) {
    auto& list = adjacency_[s];
    std::sort(list.begin(), list.end());
    const auto dup = std::adjacent_find(list.begin(), list.end());
    if (dup != list.end()) {
      throw std::invalid_argument("duplicate edge x" + std::to_string(VertexId::from_slot(s).value()) +
                                  " - x" + std::to_string(dup->value()));
    }
  }
  edge_count_ = edges.size();

  const auto reach = bfs_from(adjacency_, 0);
  const auto missing = std::find(reach.begin(), reach.end(), kUnreached);
  if (missing != reach.end()) {
    throw DisconnectedGraphError(VertexId(1), VertexId::from_slot(static_cast<std::size_t>(missing - reach.begin())));
  }
}

void LabeledGraph::check_vertex(VertexId v) const {
  if (!contains(v)) {
    throw std::out_of_range("vertex x" + std::to_string(v.value()) + " outside 1.." +
                            std::to_string(vertex_count()));
  }
}

std::span<const VertexId> LabeledGraph::neighbors(VertexId v) const {
  check_vertex(v);
  return adjacency_[v.slot()];
}

bool LabeledGraph::adjacent(VertexId u, VertexId v) const {
  const auto list = neighbors(v);
  check_vertex(u);
  return std::binary_search(list.begin(), list.end(), u);
}

std::vector<VertexPair> LabeledGraph::edges() const {
  std::vector<VertexPair> out;
  out.reserve(edge_count_);
  for (std::size_t s = 0; s < adjacency_.size(); ++s) {
    const VertexId u = VertexId::from_slot(s);
    for (VertexId v : adjacency_[s]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

LabeledGraph build_cycle(int n) {
  if (n < 3) {
    throw std::domain_error("cycle needs n >= 3, got n = " + std::to_string(n));
  }
  std::vector<VertexPair> edges;
  for (int i = 1; i < n; ++i) edges.emplace_back(VertexId(i), VertexId(i + 1));
  edges.emplace_back(VertexId(1), VertexId(n));
  return LabeledGraph(n, edges, CycleFamily{n});
}

LabeledGraph build_path(int k) {
  if (k < 2) {
    throw std::domain_error("path needs k >= 2, got k = " + std::to_string(k));
  }
  std::vector<VertexPair> edges;
  for (int i = 1; i < k; ++i) edges.emplace_back(VertexId(i), VertexId(i + 1));
  return LabeledGraph(k, edges, PathFamily{k});
}

int degree(const LabeledGraph& g, VertexId v) {
  return static_cast<int>(g.neighbors(v).size());
}

bool is_bipartite(const LabeledGraph& g) {
  const int n = g.vertex_count();
  std::vector<int> colour(static_cast<std::size_t>(n), -1);
  std::queue<VertexId> frontier;
  colour[0] = 0;
  frontier.push(VertexId(1));
  while (!frontier.empty()) {
    const VertexId u = frontier.front();
    frontier.pop();
    for (VertexId w : g.neighbors(u)) {
      if (colour[w.slot()] < 0) {
        colour[w.slot()] = 1 - colour[u.slot()];
        frontier.push(w);
      } else if (colour[w.slot()] == colour[u.slot()]) {
        return false;
      }
    }
  }
  return true;
}

DistanceMatrix::DistanceMatrix(int size, std::vector<Distance> entries)
    : size_(size), entries_(std::move(entries)) {
  if (size < 1 || entries_.size() != static_cast<std::size_t>(size) * static_cast<std::size_t>(size)) {
    throw std::invalid_argument("distance matrix entries do not form a square of side " + std::to_string(size));
  }
}

DistanceMatrix::Distance DistanceMatrix::diameter() const {
  return *std::max_element(entries_.begin(), entries_.end());
}

DistanceMatrix all_pairs_distances(const LabeledGraph& g) {
  const int n = g.vertex_count();
  std::vector<std::vector<VertexId>> adjacency(static_cast<std::size_t>(n));
  for (int v = 1; v <= n; ++v) {
    const auto list = g.neighbors(VertexId(v));
    adjacency[static_cast<std::size_t>(v - 1)].assign(list.begin(), list.end());
  }

  std::vector<DistanceMatrix::Distance> entries;
  entries.reserve(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
  for (std::size_t s = 0; s < adjacency.size(); ++s) {
    const auto row = bfs_from(adjacency, s);
    for (std::size_t t = 0; t < row.size(); ++t) {
      if (row[t] == kUnreached) {
        throw DisconnectedGraphError(VertexId::from_slot(s), VertexId::from_slot(t));
      }
    }
    entries.insert(entries.end(), row.begin(), row.end());
  }
  return DistanceMatrix(n, std::move(entries));
}

}  // namespace mdim
