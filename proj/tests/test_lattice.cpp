#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "cellres/lattice.hpp"

using namespace cellres;

namespace {

// Brute-force reference for box_lattice_point: try every integer point of
// the box and test lattice membership directly.
bool box_has_point_brute(const Lattice& L, const IntVec& lo, const IntVec& hi) {
  int n = L.ambient;
  for (int i = 0; i < n; ++i)
    if (lo[i] > hi[i]) return false;
  IntVec v(n);
  for (int i = 0; i < n; ++i) v[i] = lo[i];
  for (;;) {
    if (contains(L, v)) return true;
    int p = n - 1;
    while (p >= 0 && v[p] == hi[p]) {
      v[p] = lo[p];
      --p;
    }
    if (p < 0) return false;
    v[p] += 1;
  }
}

}  // namespace

TEST_CASE("principal lattices of small ray matrices") {
  {
    Lattice L = principal_lattice(IntMat::from_rows({{1}, {-1}}));
    CHECK(L.ambient == 2);
    CHECK(L.basis == IntMat::from_cols({{1, -1}}));
  }
  {
    Lattice L = principal_lattice(IntMat::from_rows({{1, 0}, {0, 1}, {-1, -1}}));
    CHECK(L.rank() == 2);
    CHECK(contains(L, IntVec{1, 0, -1}));
    CHECK(contains(L, IntVec{0, 1, -1}));
    CHECK(!contains(L, IntVec{1, 0, 0}));
  }
}

TEST_CASE("canonical basis is generating-set independent") {
  std::mt19937_64 rng(81);
  std::uniform_int_distribution<int> dist(-5, 5);
  for (int t = 0; t < 60; ++t) {
    IntMat G(4, 3);
    for (auto& x : G.a) x = dist(rng);
    Lattice L1 = lattice_from_generators(4, G);
    // Append redundant generators: sums of existing columns.
    IntMat G2(4, 5);
    for (int i = 0; i < 4; ++i) {
      for (int j = 0; j < 3; ++j) G2.at(i, j) = G.at(i, j);
      G2.at(i, 3) = G.at(i, 0) + G.at(i, 1);
      G2.at(i, 4) = G.at(i, 2) - G.at(i, 0);
    }
    Lattice L2 = lattice_from_generators(4, G2);
    CHECK(L1 == L2);
  }
}

TEST_CASE("unimodularity") {
  CHECK(is_unimodular(principal_lattice(IntMat::from_rows({{1}, {-1}}))));
  CHECK(is_unimodular(principal_lattice(IntMat::from_rows({{1, 0}, {0, 1}, {-1, -1}}))));
  CHECK(is_unimodular(
      principal_lattice(IntMat::from_rows({{1, 0}, {1, 1}, {0, 1}, {-1, -1}}))));
  // Smooth fan whose ray matrix still has a minor of absolute value 2.
  CHECK(!is_unimodular(principal_lattice(
      IntMat::from_rows({{1, 0}, {2, 1}, {1, 1}, {0, 1}, {-1, -1}}))));
}

TEST_CASE("lawrence lift") {
  Lattice L = principal_lattice(IntMat::from_rows({{1, 0}, {0, 1}, {-1, -1}}));
  Lattice LL = lawrence_lift(L);
  CHECK(LL.ambient == 6);
  CHECK(LL.rank() == 2);
  for (int j = 0; j < LL.rank(); ++j) {
    for (int i = 0; i < 3; ++i) CHECK(LL.basis.at(i, j) == -LL.basis.at(3 + i, j));
  }
  CHECK(contains(LL, IntVec{1, 0, -1, -1, 0, 1}));
  CHECK(!contains(LL, IntVec{1, 0, -1, 0, 0, 0}));
}

TEST_CASE("cofinite sublattice from a group surjection") {
  {
    // Index-6 kernel inside the rank-1 lattice of a pair of opposite rays.
    Lattice L = principal_lattice(IntMat::from_rows({{1}, {-1}}));
    FiniteAbelianGroup G{{Int(6)}};
    IntMat phi = IntMat::from_rows({{1}});
    Lattice Ls = cofinite_sublattice(L, G, phi);
    CHECK(Ls.basis == IntMat::from_cols({{6, -6}}));
    auto qg = quotient_group(L, Ls);
    REQUIRE(qg.group.moduli.size() == 1);
    CHECK(qg.group.moduli[0] == 6);
    CHECK(qg.coset(L, IntVec{5, -5}) == IntVec{Int(5)});
    CHECK(qg.coset(L, IntVec{6, -6}) == IntVec{Int(0)});
  }
  {
    // Z/2 x Z/2 on a rank-2 lattice.
    Lattice L = principal_lattice(IntMat::from_rows({{1, 0}, {0, 1}, {-1, -1}}));
    FiniteAbelianGroup G{{Int(2), Int(2)}};
    IntMat phi = IntMat::from_rows({{1, 0}, {0, 1}});
    Lattice Ls = cofinite_sublattice(L, G, phi);
    auto qg = quotient_group(L, Ls);
    Int order(1);
    for (const auto& d : qg.group.moduli) order *= d;
    CHECK(order == 4);
  }
  {
    // Non-surjective map must be rejected.
    Lattice L = principal_lattice(IntMat::from_rows({{1}, {-1}}));
    FiniteAbelianGroup G{{Int(4)}};
    IntMat phi = IntMat::from_rows({{2}});
    CHECK_THROWS_AS(cofinite_sublattice(L, G, phi), input_error);
  }
}

TEST_CASE("quotient group error cases") {
  Lattice L = principal_lattice(IntMat::from_rows({{1, 0}, {0, 1}, {-1, -1}}));
  Lattice notsub = principal_lattice(IntMat::from_rows({{1, 0}, {0, 1}, {0, 0}}));
  CHECK_THROWS_AS(quotient_group(L, notsub), input_error);
  Lattice thin = lattice_from_generators(3, IntMat::from_cols({{1, 0, -1}}));
  CHECK_THROWS_AS(quotient_group(L, thin), input_error);
}

TEST_CASE("quotient group invariant factors") {
  // Z^2 over the span of (2,0),(0,4): factors 2,4.
  Lattice L = lattice_from_generators(2, IntMat::identity(2));
  Lattice Ls = lattice_from_generators(2, IntMat::from_cols({{2, 0}, {0, 4}}));
  auto qg = quotient_group(L, Ls);
  REQUIRE(qg.group.moduli.size() == 2);
  CHECK(qg.group.moduli[0] == 2);
  CHECK(qg.group.moduli[1] == 4);
  CHECK(qg.group.order() == 8);
  // Coset labels are additive.
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<int> dist(-9, 9);
  for (int t = 0; t < 50; ++t) {
    IntVec a{Int(dist(rng)), Int(dist(rng))}, b{Int(dist(rng)), Int(dist(rng))};
    IntVec s = vec_add(a, b);
    IntVec ca = qg.coset(L, a), cb = qg.coset(L, b), cs = qg.coset(L, s);
    CHECK(qg.group.reduce(vec_add(ca, cb)) == cs);
  }
}

TEST_CASE("box lattice point matches brute force") {
  Lattice L1 = principal_lattice(IntMat::from_rows({{1}, {-1}}));
  Lattice L2 = principal_lattice(IntMat::from_rows({{1, 0}, {0, 1}, {-1, -1}}));
  Lattice L6 = lattice_from_generators(2, IntMat::from_cols({{6, -6}}));
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<int> dist(-4, 4);
  for (int t = 0; t < 150; ++t) {
    const Lattice& L = (t % 3 == 0) ? L1 : (t % 3 == 1 ? L2 : L6);
    int n = L.ambient;
    IntVec lo(n), hi(n);
    for (int i = 0; i < n; ++i) {
      int a = dist(rng), b = dist(rng);
      lo[i] = std::min(a, b);
      hi[i] = std::max(a, b);
    }
    auto p = box_lattice_point(L, lo, hi);
    CHECK(p.has_value() == box_has_point_brute(L, lo, hi));
    if (p) {
      CHECK(contains(L, *p));
      for (int i = 0; i < n; ++i) {
        CHECK((*p)[i] >= lo[i]);
        CHECK((*p)[i] <= hi[i]);
      }
    }
  }
}

TEST_CASE("lattice module membership") {
  Lattice L = principal_lattice(IntMat::from_rows({{1}, {-1}}));
  // Nonnegative monomials always lie in the module.
  CHECK(in_lattice_module(L, IntVec{1, 0, 0, 1}));
  CHECK(in_lattice_module(L, IntVec{0, 0, 0, 0}));
  // x1/x2 does not, x1*y2/(x2*y1) does (it is a lattice monomial).
  CHECK(!in_lattice_module(L, IntVec{1, -1, 0, 0}));
  CHECK(in_lattice_module(L, IntVec{1, -1, -1, 1}));
  // Index-6 sublattice: the same Laurent monomial drops out.
  Lattice L6 = lattice_from_generators(2, IntMat::from_cols({{6, -6}}));
  CHECK(!in_lattice_module(L6, IntVec{1, -1, -1, 1}));
  CHECK(in_lattice_module(L6, IntVec{6, -6, -6, 6}));
}
