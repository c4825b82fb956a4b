#pragma once

// Exact feasibility for systems of rational linear constraints
// (equalities, weak and strict inequalities) by Fourier-Motzkin
// elimination with back-substitution. Small systems only; every answer
// comes with an explicit satisfying point.

#include "cellres/numeric.hpp"

namespace cellres {

enum class Rel { EQ, GE, GT };  // a.x = c, a.x >= c, a.x > c

struct LinCon {
  RatVec a;
  Rel rel;
  Rat c;
};

// A point satisfying every constraint, or nullopt when the system is
// infeasible (exact either way).
std::optional<RatVec> feasible_point(int dim, std::vector<LinCon> cons);

}  // namespace cellres
