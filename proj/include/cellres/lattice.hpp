#pragma once

// Sublattices of Z^n with canonical (Hermite) bases, finite abelian
// quotients, and exact membership / box-search routines.

#include "cellres/matrix.hpp"

namespace cellres {

struct FiniteAbelianGroup {
  std::vector<Int> moduli;  // invariant-style factors, each >= 2; empty = trivial

  Int order() const {
    Int o(1);
    for (const auto& m : moduli) o *= m;
    return o;
  }
  IntVec reduce(IntVec v) const {
    if (v.size() != moduli.size())
      throw input_error("[E_GROUP_ELT] element length does not match group rank");
    for (size_t i = 0; i < v.size(); ++i) v[i] = ((v[i] % moduli[i]) + moduli[i]) % moduli[i];
    return v;
  }
};

// Rank-m sublattice of Z^n held by its unique column-HNF basis.
struct Lattice {
  int ambient = 0;
  IntMat basis;  // ambient x rank, full column rank, HNF-canonical

  int rank() const { return basis.cols; }
  bool operator==(const Lattice& o) const { return ambient == o.ambient && basis == o.basis; }
};

// Canonicalize an arbitrary generating set (columns of gens).
Lattice lattice_from_generators(int ambient, const IntMat& gens);

// Column span of the ray matrix B (rows = one vector per variable).
Lattice principal_lattice(const IntMat& B);

// All maximal minors of the basis in {0, +1, -1}.
bool is_unimodular(const Lattice& L);

// {(v, -v) : v in L} inside Z^(2n).
Lattice lawrence_lift(const Lattice& L);

// Integer coordinates of v in the basis, or nullopt when v is outside L.
std::optional<IntVec> coefficients(const Lattice& L, const IntVec& v);
bool contains(const Lattice& L, const IntVec& v);

// Kernel of the surjection L -> G sending basis column j to the group
// element in column j of phi (phi is moduli.size() x rank(L)). Throws
// input_error when the map is not onto G, since then the quotient would be
// a proper subgroup and the stated group would be wrong.
Lattice cofinite_sublattice(const Lattice& L, const FiniteAbelianGroup& G, const IntMat& phi);

// L / Lsub presented by invariant factors, with the map that labels cosets.
struct QuotientGroup {
  FiniteAbelianGroup group;
  IntMat label;  // group.moduli.size() x rank(L), applied to basis coefficients

  IntVec coset(const Lattice& L, const IntVec& v) const;
};
QuotientGroup quotient_group(const Lattice& L, const Lattice& Lsub);

// Some v in L with lo <= v <= hi componentwise, or nullopt when no such
// point exists (the coefficient search is exhaustive, so absence is proof).
// Returns the zero vector whenever it qualifies, otherwise the point with
// the lexicographically least coefficient vector.
std::optional<IntVec> box_lattice_point(const Lattice& L, const IntVec& lo, const IntVec& hi);

// Laurent monomial z^w (w in Z^(2n)) lies in the module generated by the
// monomials of the lifted lattice: exists v in L with -w_y <= v <= w_x.
bool in_lattice_module(const Lattice& L, const IntVec& w);

}  // namespace cellres
