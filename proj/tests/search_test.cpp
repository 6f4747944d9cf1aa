#include "mdim/search.hpp"

#include <gtest/gtest.h>

#include <functional>

#include "mdim/products.hpp"
#include "oracle/oracle.hpp"

namespace mdim {
namespace {

struct Instance {
  LabeledGraph graph;
  DistanceMatrix distances;

  explicit Instance(LabeledGraph g) : graph(std::move(g)), distances(all_pairs_distances(graph)) {}
};

int Beta(const Instance& x) { return min_resolving(x.graph, x.distances, {default_size_cap(x.graph)}).value; }
int Psi(const Instance& x) { return min_doubly_resolving(x.graph, x.distances, {default_size_cap(x.graph)}).value; }
int Sdim(const Instance& x) { return min_strong_resolving(x.graph, x.distances, {default_size_cap(x.graph)}).value; }

PairCheck Check(Parameter p, const VertexSet& q, const DistanceMatrix& d) {
  switch (p) {
    case Parameter::metric_dimension:
      return is_resolving(q, d);
    case Parameter::doubly_resolving_number:
      return is_doubly_resolving(q, d);
    case Parameter::strong_metric_dimension:
      return is_strong_resolving(q, d);
  }
  return {};
}

void ExpectMinimalWitness(const SearchResult& r, const DistanceMatrix& d) {
  ASSERT_EQ(r.witness.size(), static_cast<std::size_t>(r.value));
  EXPECT_TRUE(Check(r.parameter, r.witness, d).holds);
  // An empty set resolves nothing, and no set of one vertex doubly resolves.
  if (r.value == 1 || (r.parameter == Parameter::doubly_resolving_number && r.value == 2)) return;
  for (std::size_t i = 0; i < r.witness.size(); ++i) {
    EXPECT_FALSE(Check(r.parameter, r.witness.without(i), d).holds) << "dropping position " << i;
  }
}

TEST(MinResolvingTest, Examples) {
  EXPECT_EQ(Beta(Instance(build_cycle(4))), 2);
  EXPECT_EQ(Beta(Instance(explicit_cylinder(3, 3).graph)), 2);
  EXPECT_EQ(Beta(Instance(explicit_cylinder(4, 3).graph)), 3);
}

TEST(MinResolvingTest, CountsExaminedSets) {
  const Instance c4(build_cycle(4));
  const auto r = min_resolving(c4.graph, c4.distances, {4});
  // Four singletons fail, then {x1, x2} is the first pair tried.
  EXPECT_EQ(r.witness, (VertexSet{1, 2}));
  EXPECT_EQ(r.exhausted_sizes, std::vector<int>{1});
  EXPECT_EQ(r.subsets_examined, 5u);
}

TEST(MinDoublyResolvingTest, Examples) {
  EXPECT_EQ(Psi(Instance(build_cycle(5))), 2);
  EXPECT_EQ(Psi(Instance(build_cycle(4))), 3);
  EXPECT_EQ(Psi(Instance(explicit_cylinder(3, 3).graph)), 3);
}

TEST(MinStrongResolvingTest, Examples) {
  EXPECT_EQ(Sdim(Instance(build_cycle(4))), 2);
  EXPECT_EQ(Sdim(Instance(explicit_cylinder(3, 3).graph)), 3);
  EXPECT_EQ(Sdim(Instance(explicit_prism(3, 3, 2).graph)), 6);
}

TEST(MinVertexCoverTest, Examples) {
  for (auto [g, expected] : std::vector<std::pair<LabeledGraph, int>>{
           {build_cycle(4), 2}, {build_path(3), 1}, {explicit_cylinder(3, 3).graph, 3}}) {
    const Instance x(g);
    const auto srg = strong_resolving_graph(x.graph, x.distances);
    const auto cover = min_vertex_cover_sr(srg, 10);
    EXPECT_EQ(cover.value, expected);
    EXPECT_TRUE(is_vertex_cover(cover.witness, srg));
  }
}

TEST(SearchCapTest, ExhaustedCapIsReported) {
  const Instance c4(build_cycle(4));
  try {
    min_doubly_resolving(c4.graph, c4.distances, {2});
    FAIL() << "expected SearchCapExceeded";
  } catch (const SearchCapExceeded& e) {
    EXPECT_EQ(e.cap(), 2);
    EXPECT_EQ(e.parameter(), Parameter::doubly_resolving_number);
    EXPECT_EQ(e.subsets_examined(), 6u);
  }
  EXPECT_THROW(min_resolving(c4.graph, c4.distances, {0}), std::domain_error);
  const auto srg = strong_resolving_graph(c4.graph, c4.distances);
  EXPECT_THROW(min_vertex_cover_sr(srg, 1), SearchCapExceeded);
}

TEST(SearchCapTest, DefaultCap) {
  EXPECT_EQ(default_size_cap(build_cycle(5)), 12);
  EXPECT_EQ(default_size_cap(explicit_prism(4, 3, 2).graph), 10);
  EXPECT_EQ(default_size_cap(build_path(4)), 4);
}

TEST(SearchDeterminismTest, WorkerCountDoesNotChangeTheAnswer) {
  for (const auto& g : {explicit_cylinder(4, 3).graph, explicit_prism(3, 3, 2).graph, explicit_cylinder(5, 4).graph}) {
    const Instance x(g);
    for (auto search : {&min_resolving, &min_doubly_resolving, &min_strong_resolving}) {
      const auto one = search(x.graph, x.distances, {12, 1});
      for (unsigned workers : {2u, 3u, 8u}) {
        const auto many = search(x.graph, x.distances, {12, workers});
        EXPECT_EQ(many.value, one.value);
        EXPECT_EQ(many.witness, one.witness);
        EXPECT_EQ(many.subsets_examined, one.subsets_examined);
        EXPECT_EQ(many.exhausted_sizes, one.exhausted_sizes);
      }
    }
  }
}

// The witness must be the first passing set in (size, lexicographic) order.
TEST(SearchOrderTest, WitnessIsLexicographicallyFirst) {
  for (const auto& g : {build_cycle(6), explicit_cylinder(3, 3).graph, explicit_cylinder(4, 3).graph}) {
    const Instance x(g);
    for (auto [search, parameter] :
         std::vector<std::pair<decltype(&min_resolving), Parameter>>{
             {&min_resolving, Parameter::metric_dimension},
             {&min_doubly_resolving, Parameter::doubly_resolving_number},
             {&min_strong_resolving, Parameter::strong_metric_dimension}}) {
      const auto r = search(x.graph, x.distances, {12, 1});
      std::optional<VertexSet> first;
      std::vector<VertexId> chosen;
      const int n = x.graph.vertex_count();
      std::function<void(int, int)> walk = [&](int from, int remaining) {
        if (first) return;
        if (remaining == 0) {
          if (Check(parameter, VertexSet(chosen), x.distances).holds) first = VertexSet(chosen);
          return;
        }
        for (int v = from; v <= n - remaining + 1 && !first; ++v) {
          chosen.emplace_back(v);
          walk(v + 1, remaining - 1);
          chosen.pop_back();
        }
      };
      walk(1, r.value);
      ASSERT_TRUE(first.has_value());
      EXPECT_EQ(r.witness, *first) << to_string(parameter);
    }
  }
}

TEST(SearchPropertyTest, MinimalityOrderingAndCoverAgreement) {
  std::vector<LabeledGraph> graphs;
  for (int n = 3; n <= 8; ++n) graphs.push_back(build_cycle(n));
  for (int k = 2; k <= 6; ++k) graphs.push_back(build_path(k));
  for (int n = 3; n <= 6; ++n) graphs.push_back(explicit_cylinder(n, 3).graph);
  graphs.push_back(explicit_cylinder(3, 4).graph);
  graphs.push_back(explicit_prism(3, 3, 2).graph);
  graphs.push_back(explicit_prism(4, 3, 2).graph);
  for (const auto& g : graphs) {
    SCOPED_TRACE(describe(g.family()));
    const Instance x(g);
    const int cap = g.vertex_count();
    const auto beta = min_resolving(x.graph, x.distances, {cap});
    const auto psi = min_doubly_resolving(x.graph, x.distances, {cap});
    const auto sdim = min_strong_resolving(x.graph, x.distances, {cap});
    const auto cover = min_vertex_cover_sr(strong_resolving_graph(x.graph, x.distances), cap);
    ExpectMinimalWitness(beta, x.distances);
    ExpectMinimalWitness(psi, x.distances);
    ExpectMinimalWitness(sdim, x.distances);
    EXPECT_LE(beta.value, psi.value);
    EXPECT_LE(beta.value, sdim.value);
    EXPECT_EQ(sdim.value, cover.value);
    EXPECT_EQ(sdim.witness, cover.witness);
  }
}

TEST(SearchOracleTest, AgreesWithPlainEnumeration) {
  for (const auto& g : {build_cycle(5), build_cycle(6), build_path(4), explicit_cylinder(3, 3).graph,
                        explicit_cylinder(4, 3).graph}) {
    SCOPED_TRACE(describe(g.family()));
    const Instance x(g);
    const auto reference = oracle::floyd_warshall(g);
    EXPECT_EQ(Beta(x), oracle::minimum_size(g, reference, oracle::Kind::resolving, 8));
    EXPECT_EQ(Psi(x), oracle::minimum_size(g, reference, oracle::Kind::doubly, 8));
    EXPECT_EQ(Sdim(x), oracle::minimum_size(g, reference, oracle::Kind::strong, 8));
  }
}

TEST(ParameterTableTest, Cylinders) {
  for (int n : {3, 5}) {
    for (int k : {3, 4}) {
      const Instance x(explicit_cylinder(n, k).graph);
      EXPECT_EQ(Beta(x), 2) << n << "," << k;
      EXPECT_EQ(Psi(x), 3) << n << "," << k;
      EXPECT_EQ(Sdim(x), n) << n << "," << k;
    }
  }
  for (int k : {3, 4}) {
    const Instance x(explicit_cylinder(4, k).graph);
    EXPECT_EQ(Beta(x), 3);
    EXPECT_EQ(Psi(x), 4);
    EXPECT_EQ(Sdim(x), 4);
  }
}

TEST(ParameterTableTest, Prisms) {
  const Instance odd(explicit_prism(3, 3, 2).graph);
  const Instance even(explicit_prism(4, 3, 2).graph);
  EXPECT_EQ(Beta(odd), 3);
  EXPECT_EQ(Beta(even), 4);
  EXPECT_EQ(Sdim(odd), 6);
  EXPECT_EQ(Sdim(even), 8);
}

// Exhaustive search finds doubly resolving sets one smaller than the
// closed-form families for these prisms. The witnesses are re-checked with
// the reference predicate and the lower bound with plain enumeration.
TEST(ParameterTableTest, DoublyResolvingNumberOfSmallPrisms) {
  struct Case {
    int n, k, m;
    int value;
    std::vector<int> witness;
  };
  for (const auto& c : {Case{3, 3, 2, 3, {1, 8, 12}}, Case{4, 3, 2, 4, {1, 3, 10, 24}},
                        Case{4, 3, 4, 4, {1, 10, 38, 48}}}) {
    SCOPED_TRACE(std::to_string(c.n) + "," + std::to_string(c.k) + "," + std::to_string(c.m));
    const auto g = explicit_prism(c.n, c.k, c.m).graph;
    const Instance x(g);
    const auto r = min_doubly_resolving(x.graph, x.distances, {default_size_cap(g)});
    EXPECT_EQ(r.value, c.value);
    std::vector<int> got;
    for (VertexId v : r.witness) got.push_back(v.value());
    EXPECT_EQ(got, c.witness);

    const auto reference = oracle::floyd_warshall(g);
    std::vector<int> slots;
    for (int v : c.witness) slots.push_back(v - 1);
    EXPECT_TRUE(oracle::doubly_resolves(reference, slots));
    if (g.vertex_count() <= 24) {
      EXPECT_EQ(oracle::minimum_size(g, reference, oracle::Kind::doubly, c.value), c.value);
    }
  }
}

}  // namespace
}  // namespace mdim
