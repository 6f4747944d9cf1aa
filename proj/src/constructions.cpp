#include "mdim/constructions.hpp"

#include <array>
#include <stdexcept>

#include "mdim/products.hpp"

namespace mdim {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw std::domain_error(what);
}

int ceil_half(int n) { return (n + 1) / 2; }

void require_cylinder(int n, int k) {
  require(n >= 3, "family needs n >= 3, got n = " + std::to_string(n));
  require(k >= 3, "family needs k >= 3, got k = " + std::to_string(k));
}

void require_odd(int n) { require(n % 2 == 1, "family needs odd n, got n = " + std::to_string(n)); }
void require_even(int n) { require(n % 2 == 0, "family needs even n, got n = " + std::to_string(n)); }
void require_copies(int m) { require(m >= 2, "family needs m >= 2, got m = " + std::to_string(m)); }

void require_i(int i, int n) {
  require(i >= 1 && i <= ceil_half(n),
          "i must lie in 1.." + std::to_string(ceil_half(n)) + ", got i = " + std::to_string(i));
}

void require_j(int j, int n) {
  require(j >= 1 && j <= n / 2, "j must lie in 1.." + std::to_string(n / 2) + ", got j = " + std::to_string(j));
}

// The vertex of V_k in the same cycle position as x_anchor.
int top_twin(int anchor, int n, int k) { return (k - 1) * n + anchor; }

VertexSet lift(const std::vector<int>& within_copy, int copy, int n, int k) {
  std::vector<VertexId> out;
  for (int t : within_copy) out.push_back(prism_index(t, copy, n, k));
  return VertexSet(std::move(out));
}

VertexSet plain(const std::vector<int>& indices) {
  std::vector<VertexId> out;
  for (int t : indices) out.emplace_back(t);
  return VertexSet(std::move(out));
}

std::vector<int> m_core(int i, int n) { return {i, ceil_half(n) + i - 1}; }
std::vector<int> n_core(int j, int n) { return {j, ceil_half(n) + j}; }

std::vector<int> a_core(int i, int n, int k) {
  auto out = m_core(i, n);
  out.push_back(top_twin(i, n, k));
  return out;
}

std::vector<int> b_core(int j, int n, int k) {
  auto out = n_core(j, n);
  out.push_back(top_twin(j, n, k));
  return out;
}

std::vector<int> e2_core(int n) { return {1, n / 2, n / 2 + 1}; }

std::vector<int> e3_core(int n, int k) {
  auto out = e2_core(n);
  out.push_back(top_twin(1, n, k));
  return out;
}

constexpr std::array<std::string_view, 14> kFamilyNames = {"M", "N", "A", "B", "A1", "B1", "C",
                                                           "D", "E1", "E2", "E3", "E3_1", "E4", "T"};

}  // namespace

std::string_view to_string(FamilyId id) { return kFamilyNames[static_cast<std::size_t>(id)]; }

std::string_view to_string(ClaimedProperty p) {
  switch (p) {
    case ClaimedProperty::resolving:
      return "resolving";
    case ClaimedProperty::doubly_resolving:
      return "doubly_resolving";
    case ClaimedProperty::strong_resolving:
      return "strong_resolving";
    case ClaimedProperty::not_doubly_resolving:
      return "NOT_doubly_resolving";
    case ClaimedProperty::not_resolving:
      return "NOT_resolving";
  }
  return "unknown";
}

FamilyId parse_family_id(std::string_view name) {
  for (std::size_t i = 0; i < kFamilyNames.size(); ++i) {
    if (kFamilyNames[i] == name) return static_cast<FamilyId>(i);
  }
  throw std::invalid_argument("unknown family id '" + std::string(name) + "'");
}

int WitnessFamily::target_vertex_count() const {
  return params.n * params.k * (params.m == 0 ? 1 : params.m);
}

WitnessFamily make_M(int i, int n, int k) {
  require_cylinder(n, k);
  require_odd(n);
  require_i(i, n);
  return {FamilyId::M, {n, k, 0, i}, plain(m_core(i, n)),
          {ClaimedProperty::resolving, ClaimedProperty::not_doubly_resolving}};
}

WitnessFamily make_N(int j, int n, int k) {
  require_cylinder(n, k);
  require_odd(n);
  require_j(j, n);
  return {FamilyId::N, {n, k, 0, j}, plain(n_core(j, n)),
          {ClaimedProperty::resolving, ClaimedProperty::not_doubly_resolving}};
}

WitnessFamily make_A(int i, int n, int k) {
  require_cylinder(n, k);
  require_odd(n);
  require_i(i, n);
  return {FamilyId::A, {n, k, 0, i}, plain(a_core(i, n, k)), {ClaimedProperty::doubly_resolving}};
}

WitnessFamily make_B(int j, int n, int k) {
  require_cylinder(n, k);
  require_odd(n);
  require_j(j, n);
  return {FamilyId::B, {n, k, 0, j}, plain(b_core(j, n, k)), {ClaimedProperty::doubly_resolving}};
}

WitnessFamily make_A1(int i, int n, int k, int m) {
  require_cylinder(n, k);
  require_odd(n);
  require_i(i, n);
  require_copies(m);
  return {FamilyId::A1, {n, k, m, i}, lift(a_core(i, n, k), 1, n, k),
          {ClaimedProperty::resolving, ClaimedProperty::not_doubly_resolving}};
}

WitnessFamily make_B1(int j, int n, int k, int m) {
  require_cylinder(n, k);
  require_odd(n);
  require_j(j, n);
  require_copies(m);
  return {FamilyId::B1, {n, k, m, j}, lift(b_core(j, n, k), 1, n, k),
          {ClaimedProperty::resolving, ClaimedProperty::not_doubly_resolving}};
}

WitnessFamily make_C(int i, int n, int k) {
  auto out = make_D(i, n, k, 2);
  out.id = FamilyId::C;
  return out;
}

WitnessFamily make_D(int i, int n, int k, int m) {
  require_cylinder(n, k);
  require_odd(n);
  require_i(i, n);
  require_copies(m);
  auto members = lift(a_core(i, n, k), 1, n, k).members();
  members.push_back(prism_index(top_twin(i, n, k), m, n, k));
  return {FamilyId::D, {n, k, m, i}, VertexSet(std::move(members)), {ClaimedProperty::doubly_resolving}};
}

WitnessFamily make_E(int variant, int n, int k) {
  require_cylinder(n, k);
  require_even(n);
  switch (variant) {
    case 1:
      return {FamilyId::E1, {n, k, 0, 0}, plain({1, 2, top_twin(1, n, k)}), {ClaimedProperty::not_doubly_resolving}};
    case 2:
      return {FamilyId::E2, {n, k, 0, 0}, plain(e2_core(n)),
              {ClaimedProperty::resolving, ClaimedProperty::not_doubly_resolving}};
    case 3:
      return {FamilyId::E3, {n, k, 0, 0}, plain(e3_core(n, k)), {ClaimedProperty::doubly_resolving}};
    default:
      throw std::domain_error("E variant must be 1, 2 or 3, got " + std::to_string(variant));
  }
}

WitnessFamily make_E3_1(int n, int k, int m) {
  require_cylinder(n, k);
  require_even(n);
  require_copies(m);
  return {FamilyId::E3_1, {n, k, m, 0}, lift(e3_core(n, k), 1, n, k),
          {ClaimedProperty::resolving, ClaimedProperty::not_doubly_resolving}};
}

WitnessFamily make_E4(int n, int k, int m) {
  auto out = make_E3_1(n, k, m);
  auto members = out.set.members();
  members.push_back(prism_index(top_twin(1, n, k), m, n, k));
  return {FamilyId::E4, out.params, VertexSet(std::move(members)), {ClaimedProperty::doubly_resolving}};
}

WitnessFamily make_T(int n, int k, int m) {
  require_cylinder(n, k);
  require_copies(m);
  std::vector<VertexId> members;
  for (int copy : {1, m}) {
    for (int t = 1; t <= n; ++t) members.push_back(prism_index(t, copy, n, k));
  }
  return {FamilyId::T, {n, k, m, 0}, VertexSet(std::move(members)), {ClaimedProperty::strong_resolving}};
}

WitnessFamily make_family(FamilyId id, const FamilyParams& p) {
  switch (id) {
    case FamilyId::M:
      return make_M(p.index, p.n, p.k);
    case FamilyId::N:
      return make_N(p.index, p.n, p.k);
    case FamilyId::A:
      return make_A(p.index, p.n, p.k);
    case FamilyId::B:
      return make_B(p.index, p.n, p.k);
    case FamilyId::A1:
      return make_A1(p.index, p.n, p.k, p.m);
    case FamilyId::B1:
      return make_B1(p.index, p.n, p.k, p.m);
    case FamilyId::C:
      return make_C(p.index, p.n, p.k);
    case FamilyId::D:
      return make_D(p.index, p.n, p.k, p.m);
    case FamilyId::E1:
      return make_E(1, p.n, p.k);
    case FamilyId::E2:
      return make_E(2, p.n, p.k);
    case FamilyId::E3:
      return make_E(3, p.n, p.k);
    case FamilyId::E3_1:
      return make_E3_1(p.n, p.k, p.m);
    case FamilyId::E4:
      return make_E4(p.n, p.k, p.m);
    case FamilyId::T:
      return make_T(p.n, p.k, p.m);
  }
  throw std::invalid_argument("unknown family id");
}

Counterexample counterexample_M(int i, int n, int k, const DistanceMatrix& d) {
  const auto family = make_M(i, n, k);
  require(d.size() == n * k, "distance matrix does not belong to C_" + std::to_string(n) + " x P_" + std::to_string(k));
  const VertexId lower(i + n);
  const VertexId upper(i + 2 * n);
  const auto a = representation(lower, family.set, d);
  const auto b = representation(upper, family.set, d);
  for (std::size_t c = 0; c < a.size(); ++c) {
    if (a[c] - b[c] != -1) {
      throw std::logic_error("r(x" + std::to_string(lower.value()) + "|M_" + std::to_string(i) + ") - r(x" +
                             std::to_string(upper.value()) + "|M_" + std::to_string(i) + ") is not -I");
    }
  }
  return {{lower, upper}, -1};
}

Counterexample counterexample_adjacent_copies(const VertexSet& q, int t, int copy, int n, int k,
                                              const DistanceMatrix& d) {
  const VertexId lower = prism_index(t, copy, n, k);
  const VertexId upper = prism_index(t, copy + 1, n, k);
  if (upper.value() > d.size()) throw std::out_of_range("copy " + std::to_string(copy + 1) + " does not exist");
  const auto a = representation(lower, q, d);
  const auto b = representation(upper, q, d);
  const int lambda = a.front() - b.front();
  for (std::size_t c = 0; c < a.size(); ++c) {
    if (a[c] - b[c] != lambda) throw std::logic_error("difference vector is not constant");
  }
  return {{lower, upper}, lambda};
}

}  // namespace mdim
