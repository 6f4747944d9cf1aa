#pragma once

#include <cstdint>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "mdim/graph.hpp"
#include "mdim/resolving.hpp"

namespace mdim {

enum class Parameter { metric_dimension, doubly_resolving_number, strong_metric_dimension };

std::string_view to_string(Parameter p);

struct SearchResult {
  Parameter parameter;
  int value;
  // Lexicographically smallest set of minimum size, ascending.
  VertexSet witness;
  // Sizes shown infeasible. Size 1 is infeasible for doubly resolving by
  // definition and is listed without enumeration.
  std::vector<int> exhausted_sizes;
  // Candidate sets a sequential scan would test before stopping at the
  // witness; independent of worker count.
  std::uint64_t subsets_examined;
};

class SearchCapExceeded : public std::runtime_error {
 public:
  SearchCapExceeded(Parameter parameter, int cap, std::uint64_t examined);
  Parameter parameter() const { return parameter_; }
  int cap() const { return cap_; }
  std::uint64_t subsets_examined() const { return examined_; }

 private:
  Parameter parameter_;
  int cap_;
  std::uint64_t examined_;
};

struct SearchOptions {
  int size_cap;
  // 0 picks default_workers().
  unsigned workers = 0;
};

// 2n + 2 for cycle-based families (n = cycle length), |V| otherwise.
int default_size_cap(const LabeledGraph& g);

// MDIM_MAX_WORKERS when set and positive, else hardware concurrency.
unsigned default_workers();

// Sets are tried by ascending size, then lexicographically. All three throw
// SearchCapExceeded when no set of size <= cap passes and
// std::domain_error when cap < 1.
SearchResult min_resolving(const LabeledGraph& g, const DistanceMatrix& d, SearchOptions options);
SearchResult min_doubly_resolving(const LabeledGraph& g, const DistanceMatrix& d, SearchOptions options);
// Candidates are limited to vertices incident to a mutually maximally
// distant pair.
SearchResult min_strong_resolving(const LabeledGraph& g, const DistanceMatrix& d, SearchOptions options);

// Minimum vertex cover of the strong resolving graph by branch and bound.
// Independent of min_strong_resolving; the two values must agree.
SearchResult min_vertex_cover_sr(const StrongResolvingGraph& srg, int size_cap);

}  // namespace mdim
