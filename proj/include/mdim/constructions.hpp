#pragma once

#include <string>
#include <string_view>

#include "mdim/graph.hpp"
#include "mdim/resolving.hpp"

namespace mdim {

enum class FamilyId { M, N, A, B, A1, B1, C, D, E1, E2, E3, E3_1, E4, T };

enum class ClaimedProperty { resolving, doubly_resolving, strong_resolving, not_doubly_resolving, not_resolving };

std::string_view to_string(FamilyId id);
std::string_view to_string(ClaimedProperty p);
// Accepts the names printed by to_string, case-sensitive. Throws
// std::invalid_argument otherwise.
FamilyId parse_family_id(std::string_view name);

struct FamilyParams {
  int n = 0;
  int k = 0;
  int m = 0;      // 0 for families living in C_n x P_k
  int index = 0;  // i or j; 0 when unused
};

// A closed-form vertex set together with what it is claimed to be. Members
// are global indices of the target graph: C_n x P_k when params.m == 0,
// else (C_n x P_k) x P_m.
struct WitnessFamily {
  FamilyId id;
  FamilyParams params;
  VertexSet set;
  // Several families carry two claims (e.g. M_i resolves but does not
  // doubly resolve).
  std::vector<ClaimedProperty> claims;

  int target_vertex_count() const;
};

// Odd n only. 1 <= i <= ceil(n/2) for M, A, A1, C, D; 1 <= j <= floor(n/2)
// for N, B, B1. x_c is the V_k vertex in the anchor's cycle position.
WitnessFamily make_M(int i, int n, int k);
WitnessFamily make_N(int j, int n, int k);
WitnessFamily make_A(int i, int n, int k);
WitnessFamily make_B(int j, int n, int k);
WitnessFamily make_A1(int i, int n, int k, int m);
WitnessFamily make_B1(int j, int n, int k, int m);
WitnessFamily make_C(int i, int n, int k);
WitnessFamily make_D(int i, int n, int k, int m);

// Even n only; x_c = x_{(k-1)n+1}.
WitnessFamily make_E(int variant, int n, int k);
WitnessFamily make_E3_1(int n, int k, int m);
WitnessFamily make_E4(int n, int k, int m);

WitnessFamily make_T(int n, int k, int m);

// Dispatch by id. Unused params are ignored.
WitnessFamily make_family(FamilyId id, const FamilyParams& params);

struct Counterexample {
  VertexPair pair;
  int lambda;
};

// The pair (x_{i+n}, x_{i+2n}) against M_i in C_n x P_k, checked against
// the distances: throws std::logic_error if r(x_{i+n}|M_i) - r(x_{i+2n}|M_i)
// is not -I.
Counterexample counterexample_M(int i, int n, int k, const DistanceMatrix& d);

// The pair (x_t^(r), x_t^(r+1)) against a set confined to copy 1 of a
// prism. Returns the constant offset; throws std::logic_error when the
// difference vector is not constant.
Counterexample counterexample_adjacent_copies(const VertexSet& q, int t, int copy, int n, int k,
                                              const DistanceMatrix& d);

}  // namespace mdim
