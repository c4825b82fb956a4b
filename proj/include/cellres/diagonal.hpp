#pragma once

// Checks that the quotient complex resolves the diagonal: binomial
// generators of lattice and Lawrence ideals, image and cokernel monomials
// read off the vertex labels, torsion certificates of the cokernel against
// irrelevant-ideal generators, and the chart-moving lattice vectors the
// local argument rests on.

#include "cellres/arrangement.hpp"
#include "cellres/fan.hpp"
#include "cellres/monomial.hpp"

namespace cellres {

enum class IdealKind {
  lattice,   // v gives x^{v+} - x^{v-} in n variables
  lawrence,  // v gives x^{v+} y^{v-} - x^{v-} y^{v+} in 2n variables
};

// Generator binomials read off the spanning vectors verbatim; no
// saturation or reduction is performed.
std::vector<Binomial> binomial_generators(const std::vector<IntVec>& vectors, IdealKind kind);

// The lattice-ideal generator of each lifted vector (v, -v) coincides
// syntactically with the Lawrence-ideal generator of v itself.
bool lawrence_equals_lattice_ideal_check(const std::vector<IntVec>& vectors);

// Distinct vertex labels of the quotient complex, sorted.
std::vector<IntVec> image_monomials(const QuotientComplex& qc);

// The vertex labels whose monomial lies outside the lattice module of L.
std::vector<IntVec> cokernel_extra_monomials(const QuotientComplex& qc, const Lattice& L);

// Witnessed statement that g^k * m lies in the lattice module for every
// irrelevant generator g: per generator the smallest power together with
// the lattice point u behind the membership, so g^k * m / m_u has
// nonnegative exponents.
struct TorsionCertificate {
  IntVec monomial;              // exponent in Z^{2n}
  std::vector<long> power;      // per generator; 0 marks an exhausted one
  std::vector<IntVec> witness;  // per generator; empty for exhausted ones
  std::vector<int> exhausted;   // generators with no power <= k_max
  long k = 0;                   // max over the successful powers
  bool degenerate = false;      // the monomial itself was already inside
  bool ok() const { return exhausted.empty(); }
};
TorsionCertificate torsion_certificate(const IntVec& monomial, const std::vector<IntVec>& gens,
                                       const Lattice& L, long k_max = 16);

// floor(p + v) == floor(p) + v componentwise for integer shifts, together
// with the identity it induces on the monomial labels:
// (floor(p+v), -floor(p+v)) == (floor(p), -floor(p)) + (v, -v).
bool floor_shift_check(const RatVec& p, const IntVec& v);

// A vector of the principal lattice moving p into the chart of a cone:
// (p + v)_rho < 0 exactly on the rays of sigma and > 0 on every other
// ray. Tries r * v0 + k * vt over |r|, |k| <= bound, where v0 is the
// cone's support vector and vt the rounded solution zeroing the
// sigma-coordinates of p, then falls back to a search over the
// coefficient box [-bound, bound]^rank; throws verify_error when nothing
// in the search space qualifies.
IntVec v_sigma_finder(const RatVec& p, const Fan& f, int sigma, long bound = 20);

}  // namespace cellres
