#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cellres/morita.hpp"

using namespace cellres;

namespace {

FiniteAbelianGroup cyclic(long m) {
  FiniteAbelianGroup g;
  g.moduli = {Int(m)};
  return g;
}

MoritaSetup cyclic_setup(int n, long order, std::vector<long> w) {
  IntVec row;
  for (long x : w) row.push_back(Int(x));
  return morita_setup(n, cyclic(order), IntMat::from_rows({row}));
}

IntVec lab(std::vector<long> v) {
  IntVec r;
  for (long x : v) r.push_back(Int(x));
  return r;
}

}  // namespace

TEST_CASE("algebra basis enumeration") {
  FiniteAbelianGroup z4 = cyclic(4);
  IntMat w1 = IntMat::from_rows({{1}});
  auto basis = build_algebra(w1, z4, 2);
  CHECK(basis.size() == 12);  // 3 exponents times 4 idempotent columns
  for (const AlgebraElt& a : basis) {
    Int deg(0);
    for (const Int& x : a.alpha) deg += x;
    CHECK(z4.reduce(vec_add(a.rho2, IntVec{deg})) == a.rho1);
  }

  auto idems = build_algebra(w1, z4, 0);
  REQUIRE(idems.size() == 4);
  for (const AlgebraElt& a : idems) {
    CHECK(vec_is_zero(a.alpha));
    CHECK(a.rho1 == a.rho2);
  }

  auto two = build_algebra(IntMat::from_rows({{1, 1}}), cyclic(2), 1);
  CHECK(two.size() == 6);  // {1, z1, z2} against two columns

  CHECK_THROWS_AS(build_algebra(w1, z4, -1), input_error);
  CHECK_THROWS_AS(build_algebra(IntMat::from_rows({{1}, {1}}), z4, 1), input_error);
  CHECK_THROWS_AS(build_algebra(IntMat::from_rows({{1, 1, 1}}), cyclic(6), 60), resource_error);
}

TEST_CASE("module basis enumeration and the kernel lattice") {
  MoritaSetup m4 = cyclic_setup(1, 4, {1});
  CHECK(m4.Lt.basis == IntMat::from_cols({{4}}));
  CHECK(build_pi_module(m4, 2).size() == 12);
  auto consts = build_pi_module(m4, 0);
  REQUIRE(consts.size() == 4);
  for (const PiElt& p : consts) CHECK(vec_is_zero(p.alpha));

  MoritaSetup m2 = morita_setup(2, cyclic(2), IntMat::from_rows({{1, 1}}));
  CHECK(det_int(m2.Lt.basis) == 2);
  CHECK(build_pi_module(m2, 1).size() == 6);

  // Non-surjective weights leave a proper subgroup and are rejected.
  CHECK_THROWS_AS(morita_setup(1, cyclic(4), IntMat::from_rows({{2}})), input_error);
  CHECK_THROWS_AS(morita_setup(0, cyclic(2), IntMat(1, 0)), input_error);
  CHECK_THROWS_AS(morita_setup(2, cyclic(4), IntMat::from_rows({{1}})), input_error);
  CHECK_THROWS_AS(build_pi_module(m4, -1), input_error);
}

TEST_CASE("the two maps are mutually inverse") {
  MoritaSetup m4 = cyclic_setup(1, 4, {1});
  // Idempotents go to the constants over the matching coset.
  for (const AlgebraElt& a : build_algebra(m4.weights, m4.G, 0)) {
    PiElt p = psi(a);
    CHECK(vec_is_zero(p.alpha));
    CHECK(p.vbar == a.rho2);
    CHECK(phi(p, m4) == a);
  }
  AlgebraElt gen{lab({1}), lab({1}), lab({0})};
  CHECK(psi(gen) == PiElt{lab({1}), lab({0})});
  CHECK(phi(PiElt{lab({1}), lab({0})}, m4) == gen);

  CHECK(bijection_check(m4, 5));
  CHECK(bijection_check(cyclic_setup(1, 6, {1}), 5));
  CHECK(bijection_check(cyclic_setup(1, 6, {5}), 4));
  CHECK(bijection_check(morita_setup(2, cyclic(2), IntMat::from_rows({{1, 1}})), 4));
  // Trivial group: one coset, plain polynomial truncation on both sides.
  CHECK(bijection_check(morita_setup(1, FiniteAbelianGroup{}, IntMat(0, 1)), 3));

  for (const auto& [deg, counts] : graded_dimensions(m4, 5)) CHECK(counts.first == counts.second);
}

TEST_CASE("bimodule actions intertwine") {
  MoritaSetup m4 = cyclic_setup(1, 4, {1});
  // One step by hand: multiplying the 0-idempotent by the coordinate on
  // either side lands on the degree-one generator over the same coset.
  AlgebraElt e0{lab({0}), lab({0}), lab({0})};
  AlgebraElt left{vec_add(e0.alpha, lab({1})), m4.G.reduce(lab({1})), e0.rho2};
  CHECK(psi(left) == PiElt{lab({1}), lab({0})});

  CHECK(action_compatibility(m4, 4));
  CHECK(action_compatibility(cyclic_setup(1, 6, {1}), 4));
  CHECK(action_compatibility(morita_setup(2, cyclic(2), IntMat::from_rows({{1, 1}})), 4));
  CHECK(action_compatibility(morita_setup(2, cyclic(6), IntMat::from_rows({{1, 2}})), 4));
}

TEST_CASE("anti-diagonal splitting of the doubled ring") {
  Lattice z1 = principal_lattice(IntMat::identity(1));
  CHECK(antidiagonal_decomposition_check(z1, z1, 3));

  Lattice z6 = lattice_from_generators(1, IntMat::from_cols({{6}}));
  CHECK(quotient_group(z1, z6).group.order() == 6);
  CHECK(antidiagonal_decomposition_check(z1, z6, 12));

  Lattice z2 = principal_lattice(IntMat::identity(2));
  MoritaSetup m6 = morita_setup(2, cyclic(6), IntMat::from_rows({{1, 2}}));
  CHECK(quotient_group(z2, m6.Lt).group.order() == 6);
  CHECK(antidiagonal_decomposition_check(z2, m6.Lt, 6));

  CHECK_THROWS_AS(antidiagonal_decomposition_check(z6, z1, 3), input_error);
}
