#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "cellres/diagonal.hpp"

using namespace cellres;

namespace {

Fan load_fan(const std::string& name) {
  return fan_from_json(load_json_file(std::string(CELLRES_DATA_DIR) + "/fans/" + name));
}

ArrangementSpec blp2_spec(const RatVec& eps, Int k) {
  return {IntMat::from_rows({{1, 0}, {1, 1}, {0, 1}, {-1, -1}}), eps, k};
}

Lattice zm(int m) { return principal_lattice(IntMat::identity(m)); }

IntVec lab(std::vector<long> v) {
  IntVec r;
  for (long x : v) r.push_back(Int(x));
  return r;
}

// Every successful generator power must come with a lattice witness u so
// that g^k * m / m_u has nonnegative exponents.
void check_witnesses(const TorsionCertificate& cert, const std::vector<IntVec>& gens,
                     const Lattice& L) {
  int n = L.ambient;
  REQUIRE(cert.power.size() == gens.size());
  REQUIRE(cert.witness.size() == gens.size());
  for (size_t g = 0; g < gens.size(); ++g) {
    if (cert.power[g] == 0) continue;
    const IntVec& u = cert.witness[g];
    CHECK(contains(L, u));
    IntVec w = cert.monomial;
    for (long k = 0; k < cert.power[g]; ++k) w = vec_add(w, gens[g]);
    for (int i = 0; i < n; ++i) {
      CHECK(w[i] - u[i] >= 0);
      CHECK(w[n + i] + u[i] >= 0);
    }
  }
}

}  // namespace

TEST_CASE("binomial generators of the two ideals") {
  // Spanning vectors of the principal lattice of the blown-up plane.
  std::vector<IntVec> vs = {lab({1, 1, 0, -1}), lab({0, 1, 1, -1}), lab({1, 0, -1, 0})};
  auto lat = binomial_generators(vs, IdealKind::lattice);
  REQUIRE(lat.size() == 3);
  CHECK(lat[0].str(4) == "x1*x2 - x4");
  CHECK(lat[1].str(4) == "x2*x3 - x4");
  CHECK(lat[2].str(4) == "x1 - x3");
  auto law = binomial_generators(vs, IdealKind::lawrence);
  CHECK(law[0].str(4) == "x1*x2*y4 - x4*y1*y2");
  CHECK(law[1].str(4) == "x2*x3*y4 - x4*y2*y3");
  CHECK(law[2].str(4) == "x1*y3 - x3*y1");

  auto p1 = binomial_generators({lab({1, -1})}, IdealKind::lawrence);
  CHECK(p1[0].str(2) == "x1*y2 - x2*y1");

  // The full lattice Z^2: the standard basis gives x_i - y_i.
  auto full = binomial_generators({lab({1, 0}), lab({0, 1})}, IdealKind::lawrence);
  CHECK(full[0].str(2) == "x1 - y1");
  CHECK(full[1].str(2) == "x2 - y2");
}

TEST_CASE("lifted lattice ideal equals the Lawrence ideal") {
  CHECK(lawrence_equals_lattice_ideal_check({lab({1, -1})}));
  CHECK(lawrence_equals_lattice_ideal_check(
      {lab({1, 1, 0, -1}), lab({0, 1, 1, -1}), lab({1, 0, -1, 0})}));
  CHECK(lawrence_equals_lattice_ideal_check({lab({1, 0}), lab({0, 1})}));
  std::mt19937_64 rng(41);
  std::uniform_int_distribution<int> dist(-5, 5);
  for (int t = 0; t < 100; ++t) {
    IntVec v(4);
    for (auto& x : v) x = dist(rng);
    CHECK(lawrence_equals_lattice_ideal_check({v}));
  }
}

TEST_CASE("image and cokernel monomials per chamber") {
  Lattice L = principal_lattice(IntMat::from_rows({{1, 0}, {1, 1}, {0, 1}, {-1, -1}}));
  {
    // Triangle grid: one vertex orbit, label 1, nothing outside the module.
    IntMat B = IntMat::from_rows({{1, 0}, {0, 1}, {-1, -1}});
    WindowedComplex wc = build_arrangement({B, RatVec(3, Rat(0)), Int(1)});
    QuotientComplex qc = quotient_complex(wc, zm(2));
    Lattice Lp2 = principal_lattice(B);
    CHECK(image_monomials(qc) == std::vector<IntVec>{lab({0, 0, 0, 0, 0, 0})});
    CHECK(cokernel_extra_monomials(qc, Lp2).empty());
  }
  {
    // Undeformed blow-up: all vertices integral, so every label is inside.
    WindowedComplex wc = build_arrangement(blp2_spec(RatVec(4, Rat(0)), 2));
    QuotientComplex qc = quotient_complex(wc, zm(2));
    CHECK(cokernel_extra_monomials(qc, L).empty());
  }
  {
    RatVec eps = {Rat(1, 100), Rat(0), Rat(0), Rat(1, 100)};
    WindowedComplex wc = build_arrangement(blp2_spec(eps, 4));
    QuotientComplex qc = quotient_complex(wc, zm(2));
    std::vector<IntVec> img = {lab({0, -1, 0, 0, 0, 1, 0, 0}), lab({0, 0, 0, 0, 0, 0, 0, 0})};
    CHECK(image_monomials(qc) == img);
    CHECK(cokernel_extra_monomials(qc, L) ==
          std::vector<IntVec>{lab({0, -1, 0, 0, 0, 1, 0, 0})});
  }
  {
    RatVec eps = {Rat(0), Rat(1, 100), Rat(0), Rat(1, 100)};
    WindowedComplex wc = build_arrangement(blp2_spec(eps, 4));
    QuotientComplex qc = quotient_complex(wc, zm(2));
    std::vector<IntVec> extra = {lab({-1, 0, 0, 0, 1, 0, 0, 0}),
                                 lab({0, 0, -1, 0, 0, 0, 1, 0})};
    CHECK(cokernel_extra_monomials(qc, L) == extra);
  }
}

TEST_CASE("module membership is monotone under multiplication") {
  Lattice L = principal_lattice(IntMat::from_rows({{1, 0}, {1, 1}, {0, 1}, {-1, -1}}));
  std::mt19937_64 rng(57);
  std::uniform_int_distribution<int> coeff(-3, 3), pad(0, 3);
  for (int t = 0; t < 200; ++t) {
    IntVec c{Int(coeff(rng)), Int(coeff(rng))};
    IntVec u = L.basis.mul_vec(c);
    IntVec up = positive_part(u), un = negative_part(u);
    IntVec w(8);
    for (int i = 0; i < 4; ++i) {
      w[i] = up[i] + pad(rng);
      w[4 + i] = un[i] + pad(rng);
    }
    REQUIRE(in_lattice_module(L, w));
    IntVec bigger = w;
    for (auto& x : bigger) x += pad(rng);
    CHECK(in_lattice_module(L, bigger));
  }
}

TEST_CASE("torsion certificates against the irrelevant ideal") {
  Lattice L = principal_lattice(IntMat::from_rows({{1, 0}, {1, 1}, {0, 1}, {-1, -1}}));
  Fan blp2 = load_fan("blp2.json");
  auto gens = irrelevant_ideal_product(blp2);
  REQUIRE(gens.size() == 16);

  IntVec m = lab({0, -1, 0, 0, 0, 1, 0, 0});  // y2/x2
  TorsionCertificate cert = torsion_certificate(m, gens, L);
  CHECK(cert.ok());
  CHECK(!cert.degenerate);
  CHECK(cert.k == 1);
  for (long p : cert.power) CHECK(p == 1);
  check_witnesses(cert, gens, L);

  Fan other = load_fan("blp2_other_chamber.json");
  auto ogens = irrelevant_ideal_product(other);
  REQUIRE(ogens.size() == 9);
  for (const IntVec& mm : {lab({-1, 0, 0, 0, 1, 0, 0, 0}), lab({0, 0, -1, 0, 0, 0, 1, 0})}) {
    TorsionCertificate c = torsion_certificate(mm, ogens, L);
    CHECK(c.ok());
    CHECK(c.k == 1);
    check_witnesses(c, ogens, L);
  }

  // The unit monomial is already in the module: flagged, still certified.
  TorsionCertificate unit = torsion_certificate(lab({0, 0, 0, 0, 0, 0, 0, 0}), gens, L);
  CHECK(unit.degenerate);
  CHECK(unit.ok());
  CHECK(unit.k == 1);

  // A single variable off the irrelevant ideal cannot clear y2/x2.
  IntVec x1 = lab({1, 0, 0, 0, 0, 0, 0, 0});
  TorsionCertificate bad = torsion_certificate(m, {x1}, L, 4);
  CHECK(!bad.ok());
  CHECK(bad.exhausted == std::vector<int>{0});
  CHECK(bad.power == std::vector<long>{0});
  TorsionCertificate mixed = torsion_certificate(m, {x1, gens[0]}, L, 4);
  CHECK(mixed.exhausted == std::vector<int>{0});
  CHECK(mixed.power[1] == 1);

  CHECK_THROWS_AS(torsion_certificate(m, {lab({-1, 0, 0, 0, 0, 0, 0, 0})}, L), input_error);
  CHECK_THROWS_AS(torsion_certificate(m, gens, L, 0), input_error);
  CHECK_THROWS_AS(torsion_certificate(lab({1, 0}), gens, L), input_error);
}

TEST_CASE("floor commutes with integer shifts") {
  RatVec p = {Rat(1, 3), Rat(-1, 3)};
  IntVec v = lab({1, -1});
  CHECK(floor_rat(p[0] + Rat(v[0])) == 1);
  CHECK(floor_rat(p[1] + Rat(v[1])) == -2);
  CHECK(floor_shift_check(p, v));

  std::mt19937_64 rng(91);
  std::uniform_int_distribution<int> num(-20, 20), den(1, 7), shift(-6, 6);
  for (int t = 0; t < 1000; ++t) {
    int n = 1 + t % 4;
    RatVec q(n);
    IntVec u(n);
    for (int i = 0; i < n; ++i) {
      q[i] = Rat(num(rng), den(rng));
      q[i].canonicalize();
      u[i] = shift(rng);
    }
    CHECK(floor_shift_check(q, u));
  }
  CHECK_THROWS_AS(floor_shift_check(p, lab({1})), input_error);
}

TEST_CASE("chart-moving vectors") {
  Fan p1 = load_fan("p1.json");
  CHECK(v_sigma_finder({Rat(1, 2), Rat(1, 2)}, p1, 0) == lab({-1, 1}));
  CHECK(v_sigma_finder({Rat(1, 2), Rat(1, 2)}, p1, 1) == lab({1, -1}));

  Fan p2 = load_fan("p2.json");
  RatVec base = {Rat(1, 3), Rat(1, 3), Rat(1, 3)};
  CHECK(v_sigma_finder(base, p2, 0) == lab({-1, -1, 2}));
  // A far translate of the same point must land in the same chart.
  RatVec far = {Rat(10, 3), Rat(-5, 3), Rat(-2, 3)};
  Lattice Lp2 = principal_lattice(p2);
  for (int s = 0; s < 3; ++s) {
    for (const RatVec& pt : {base, far}) {
      IntVec v = v_sigma_finder(pt, p2, s);
      CHECK(contains(Lp2, v));
      for (int r = 0; r < p2.nrays(); ++r) {
        bool inside = false;
        for (int cr : p2.max_cones[s]) inside |= (cr == r);
        CHECK(sign_of(pt[r] + Rat(v[r])) == (inside ? -1 : 1));
      }
    }
  }

  Fan blp2 = load_fan("blp2.json");
  Lattice Lb = principal_lattice(blp2);
  RatVec pt = {Rat(1, 5), Rat(2, 5), Rat(3, 5), Rat(-4, 5)};
  for (int s = 0; s < 4; ++s) {
    IntVec v = v_sigma_finder(pt, blp2, s);
    CHECK(contains(Lb, v));
    for (int r = 0; r < blp2.nrays(); ++r) {
      bool inside = false;
      for (int cr : blp2.max_cones[s]) inside |= (cr == r);
      CHECK(sign_of(pt[r] + Rat(v[r])) == (inside ? -1 : 1));
    }
  }

  // A cone whose rays positively span the others' directions: no shift can
  // separate, and the bounded search reports that.
  Json j;
  j["dim"] = 2;
  j["rays"] = Json::array({Json::array({1, 0}), Json::array({0, 1}), Json::array({1, 1})});
  j["max_cones"] = Json::array({Json::array({2})});
  Fan wedge = fan_from_json(j);
  CHECK_THROWS_AS(v_sigma_finder({Rat(1, 2), Rat(1, 2), Rat(1, 2)}, wedge, 0, 6), verify_error);

  CHECK_THROWS_AS(v_sigma_finder({Rat(1, 2)}, p1, 0), input_error);
  CHECK_THROWS_AS(v_sigma_finder({Rat(1, 2), Rat(1, 2)}, p1, 5), input_error);
}
