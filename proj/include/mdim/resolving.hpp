#pragma once

#include <initializer_list>
#include <optional>
#include <vector>

#include "mdim/graph.hpp"

namespace mdim {

// An arranged vertex subset Q = {q_1, ..., q_l}. Keeps the caller's order,
// which is the coordinate order of r(v|Q); rejects duplicates.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(std::vector<VertexId> members);
  VertexSet(std::initializer_list<int> indices);

  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  VertexId operator[](std::size_t i) const { return members_[i]; }
  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }
  const std::vector<VertexId>& members() const { return members_; }

  bool contains(VertexId v) const;
  VertexSet sorted() const;
  VertexSet with(VertexId v) const;
  VertexSet without(std::size_t position) const;
  // Throws std::out_of_range if a member exceeds vertex_count.
  void check_within(int vertex_count) const;

  friend bool operator==(const VertexSet&, const VertexSet&) = default;

 private:
  std::vector<VertexId> members_;
};

using RepresentationVector = std::vector<DistanceMatrix::Distance>;

// Outcome of a decision predicate. On failure `witness` is the offending
// pair (u, v) with u < v, smallest first by u then by v.
struct PairCheck {
  bool holds = true;
  std::optional<VertexPair> witness;
  // Doubly resolving only: r(u|Q) - r(v|Q) = lambda * (1, ..., 1).
  std::optional<int> lambda;

  explicit operator bool() const { return holds; }
};

// r(v|Q) = (d(v, q_1), ..., d(v, q_l)).
RepresentationVector representation(VertexId v, const VertexSet& q, const DistanceMatrix& d);

PairCheck is_resolving(const VertexSet& q, const DistanceMatrix& d);
PairCheck is_doubly_resolving(const VertexSet& q, const DistanceMatrix& d);
PairCheck is_strong_resolving(const VertexSet& q, const DistanceMatrix& d);

// w resolves the pair strongly: u lies on a shortest w-v path or v on a
// shortest w-u path.
bool strongly_resolves(VertexId w, VertexId u, VertexId v, const DistanceMatrix& d);

// No neighbour of u is farther from v than u is.
bool is_maximally_distant(VertexId u, VertexId v, const LabeledGraph& g, const DistanceMatrix& d);
bool mutually_maximally_distant(VertexId u, VertexId v, const LabeledGraph& g, const DistanceMatrix& d);

// Same vertex set as the base graph; edges are the mutually maximally
// distant pairs. May be disconnected, so it is not a LabeledGraph.
class StrongResolvingGraph {
 public:
  StrongResolvingGraph(int vertex_count, std::vector<VertexPair> edges);

  int vertex_count() const { return vertex_count_; }
  // (u, v) with u < v, ascending.
  const std::vector<VertexPair>& edges() const { return edges_; }
  bool has_edge(VertexId u, VertexId v) const;
  // Vertices with at least one incident edge, ascending.
  std::vector<VertexId> incident_vertices() const;

 private:
  int vertex_count_;
  std::vector<VertexPair> edges_;
};

StrongResolvingGraph strong_resolving_graph(const LabeledGraph& g, const DistanceMatrix& d);

bool is_vertex_cover(const VertexSet& q, const StrongResolvingGraph& srg);

}  // namespace mdim
