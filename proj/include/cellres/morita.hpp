#pragma once

// Graded comparison for affine-space quotients by a finite abelian
// character group: the endomorphism-algebra basis w^alpha e_{rho1,rho2},
// the tensored-down lattice-module basis x^alpha (x) z^vbar, the mutually
// inverse maps between the two, bimodule-action compatibility, and the
// anti-diagonal splitting of the doubled lattice ring.

#include <map>

#include "cellres/lattice.hpp"

namespace cellres {

// Character group with coordinate weights |z_i| and the kernel lattice the
// cosets of Z^n are read against. Group elements are reduced tuples in the
// invariant-factor presentation; the coset of v in Z^n / Lt is labeled by
// weights * v, which is well defined exactly because Lt is the kernel.
struct MoritaSetup {
  int n = 0;
  FiniteAbelianGroup G;
  IntMat weights;  // moduli.size() x n, column i = |z_i|
  Lattice Lt;      // kernel of the weight map on Z^n

  IntVec weight_of(const IntVec& alpha) const { return G.reduce(weights.mul_vec(alpha)); }
};
MoritaSetup morita_setup(int n, const FiniteAbelianGroup& G, const IntMat& weights);

// w^alpha e_{rho1,rho2} with |alpha| = rho1 - rho2 in the group.
struct AlgebraElt {
  IntVec alpha;  // exponent in N^n
  IntVec rho1, rho2;
  bool operator==(const AlgebraElt&) const = default;
};

// x^alpha (x) z^vbar, the coset written by its group label.
struct PiElt {
  IntVec alpha;
  IntVec vbar;
  bool operator==(const PiElt&) const = default;
};

// All admissible basis elements with |alpha|_1 <= N: rho2 ranges over the
// group and rho1 = |alpha| + rho2 is forced by the grading constraint.
std::vector<AlgebraElt> build_algebra(const IntMat& weights, const FiniteAbelianGroup& G,
                                      long N);

// Basis x^alpha (x) z^vbar with |alpha|_1 <= N and vbar over all cosets.
std::vector<PiElt> build_pi_module(const MoritaSetup& ms, long N);

// psi: w^alpha e_{rho1,rho2} -> x^alpha (x) z^{rho2};
// phi: x^alpha (x) z^vbar -> w^alpha e_{|alpha|+vbar, vbar}.
PiElt psi(const AlgebraElt& a);
AlgebraElt phi(const PiElt& p, const MoritaSetup& ms);

// GxG-degrees: (rho1, -rho2) for the algebra, (|alpha|+vbar, -vbar) for
// the module, both returned as one concatenated label.
IntVec algebra_degree(const AlgebraElt& a, const FiniteAbelianGroup& G);
IntVec pi_degree(const PiElt& p, const MoritaSetup& ms);

// psi and phi compose to the identity both ways on the truncated bases and
// preserve the GxG-degree.
bool bijection_check(const MoritaSetup& ms, long N);

// Per-degree basis counts (algebra, module); equal in every degree when
// the comparison holds.
std::map<IntVec, std::pair<long, long>, IntVecLess> graded_dimensions(const MoritaSetup& ms,
                                                                      long N);

// psi intertwines both actions for every basis element at truncation N and
// every |beta|_1 <= N/2: the x-side raises rho1 by |beta|, the y-side
// lowers rho2, and on the module side y^beta multiplies by
// x^beta (x) z^{-beta}.
bool action_compatibility(const MoritaSetup& ms, long N);

// Every monomial of the doubled ring of L with basis coefficients in
// [-N, N] factors uniquely as a doubled monomial of Lt times one fixed
// coset representative.
bool antidiagonal_decomposition_check(const Lattice& L, const Lattice& Lt, long N);

}  // namespace cellres
