#pragma once

// Fans with primitive rays and their toric invariants: class group,
// principal-divisor lattice, smooth/simplicial/complete tests, per-chart
// unimodularity, irrelevant ideals (single and product form), separating
// functionals, and per-cone support vectors with prescribed boundary values.

#include "cellres/jsonio.hpp"
#include "cellres/lattice.hpp"

namespace cellres {

struct Fan {
  int dim = 0;
  IntMat rays;                              // n x dim, rows are primitive
  std::vector<std::vector<int>> max_cones;  // sorted ray-index lists
  std::vector<int> I_empty;                 // rays lying in no maximal cone

  int nrays() const { return rays.rows; }
};

// Validates primitivity, duplicates, index ranges, and pairwise
// non-nesting; derives I_empty.
Fan fan_from_json(const Json& j);
Json fan_to_json(const Fan& f);

struct FanChecks {
  bool smooth = false;
  bool simplicial = false;
  // Completeness runs on simplicial fans (facet pairing); nullopt when the
  // fan is non-simplicial and the test does not apply.
  std::optional<bool> complete;
};
FanChecks smooth_simplicial_complete_checks(const Fan& f);

// Cokernel of the ray matrix: the divisor class group with its projection.
// Throws input_error when the rays do not span (torus factor).
CokernelPresentation class_group(const Fan& f);

// Column span of the ray matrix inside Z^nrays.
Lattice principal_lattice(const Fan& f);

// Per maximal cone: determinant-one test for full-dimensional cones,
// nullopt for lower-dimensional ones (skipped).
std::vector<std::optional<bool>> affine_chart_check(const Fan& f);

// Squarefree generators as 0/1 exponent vectors. Single form: one
// generator per maximal cone, supported on every ray outside the cone
// (which automatically includes I_empty). Product form: all pairwise
// x-side/y-side combinations over 2n variables.
std::vector<IntVec> irrelevant_ideal_single(const Fan& f);
std::vector<IntVec> irrelevant_ideal_product(const Fan& f);

// Integer functional u with u = 0 on shared rays, u > 0 on rays only in
// cone s1, u < 0 on rays only in s2. Zero vector when s1 == s2.
IntVec separation_functional(const Fan& f, int s1, int s2);

// The principal divisor taking value -1 on every ray of the cone and >= 0
// on all others, as a vector in Z^nrays; nullopt when no such divisor
// exists (the cone is not compatible with an anticanonical-type support).
std::optional<IntVec> fano_support_vector(const Fan& f, int sigma);

}  // namespace cellres
