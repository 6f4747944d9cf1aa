#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace mdim {

// 1-based vertex label, x_t in the usual notation. Internal storage is
// 0-based; only `VertexId` crosses the public surface.
class VertexId {
 public:
  constexpr VertexId() = default;
  constexpr explicit VertexId(int index) : index_(index) {}

  constexpr int value() const { return index_; }
  constexpr std::size_t slot() const { return static_cast<std::size_t>(index_ - 1); }
  static constexpr VertexId from_slot(std::size_t slot) { return VertexId(static_cast<int>(slot) + 1); }

  friend constexpr auto operator<=>(VertexId, VertexId) = default;

 private:
  int index_ = 0;
};

using VertexPair = std::pair<VertexId, VertexId>;

struct GenericFamily {
  friend bool operator==(const GenericFamily&, const GenericFamily&) = default;
};
struct CycleFamily {
  int n;
  friend bool operator==(const CycleFamily&, const CycleFamily&) = default;
};
struct PathFamily {
  int k;
  friend bool operator==(const PathFamily&, const PathFamily&) = default;
};
struct CylinderFamily {
  int n;
  int k;
  friend bool operator==(const CylinderFamily&, const CylinderFamily&) = default;
};
struct PrismFamily {
  int n;
  int k;
  int m;
  friend bool operator==(const PrismFamily&, const PrismFamily&) = default;
};

using FamilyTag = std::variant<GenericFamily, CycleFamily, PathFamily, CylinderFamily, PrismFamily>;

std::string describe(const FamilyTag& tag);

// Thrown when a graph fails the connectivity check. Carries one pair of
// vertices with no path between them.
class DisconnectedGraphError : public std::runtime_error {
 public:
  DisconnectedGraphError(VertexId from, VertexId to);
  VertexPair pair() const { return {from_, to_}; }

 private:
  VertexId from_;
  VertexId to_;
};

// Simple, connected, undirected graph on vertices 1..vertex_count.
// Immutable once built.
class LabeledGraph {
 public:
  // Builds from an undirected edge list. Throws std::invalid_argument on
  // self-loops, duplicate edges or out-of-range endpoints, and
  // DisconnectedGraphError when the result is not connected.
  LabeledGraph(int vertex_count, std::span<const VertexPair> edges,
               FamilyTag family = GenericFamily{});

  int vertex_count() const { return static_cast<int>(adjacency_.size()); }
  std::size_t edge_count() const { return edge_count_; }
  const FamilyTag& family() const { return family_; }

  // Sorted ascending.
  std::span<const VertexId> neighbors(VertexId v) const;
  bool adjacent(VertexId u, VertexId v) const;
  bool contains(VertexId v) const { return v.value() >= 1 && v.value() <= vertex_count(); }

  // All edges as (u, v) with u < v, in ascending order.
  std::vector<VertexPair> edges() const;

  friend bool operator==(const LabeledGraph& a, const LabeledGraph& b) {
    return a.adjacency_ == b.adjacency_;
  }

 private:
  void check_vertex(VertexId v) const;

  std::vector<std::vector<VertexId>> adjacency_;
  std::size_t edge_count_ = 0;
  FamilyTag family_;
};

LabeledGraph build_cycle(int n);
LabeledGraph build_path(int k);

int degree(const LabeledGraph& g, VertexId v);

// Two-colourability by BFS.
bool is_bipartite(const LabeledGraph& g);

// Square matrix of hop counts. Row-major, indexed by VertexId.
class DistanceMatrix {
 public:
  using Distance = std::int32_t;

  DistanceMatrix(int size, std::vector<Distance> entries);

  int size() const { return size_; }
  Distance operator()(VertexId u, VertexId v) const {
    return entries_[u.slot() * static_cast<std::size_t>(size_) + v.slot()];
  }
  // Distances from u to every vertex, in vertex order.
  std::span<const Distance> row(VertexId u) const {
    return {entries_.data() + u.slot() * static_cast<std::size_t>(size_), static_cast<std::size_t>(size_)};
  }
  Distance diameter() const;

  friend bool operator==(const DistanceMatrix&, const DistanceMatrix&) = default;

 private:
  int size_;
  std::vector<Distance> entries_;
};

// One BFS per source. Throws DisconnectedGraphError if a vertex is
// unreachable.
DistanceMatrix all_pairs_distances(const LabeledGraph& g);

}  // namespace mdim
