#pragma once

// Chain complexes of free modules over the polynomial ring in 2n variables,
// assembled from a labelled quotient complex. Differentials are sparse
// matrices with entries sign * x^exp; degree k+1 maps to degree k.

#include <vector>

#include "cellres/arrangement.hpp"
#include "cellres/jsonio.hpp"
#include "cellres/matrix.hpp"

namespace cellres {

struct ChainSummand {
  int cell = 0;  // quotient cell id
  IntVec label;  // exponent in Z^{2n}
};

struct SparseEntry {
  int row = 0, col = 0;
  int sign = 0;  // +1 or -1
  IntVec exp;    // in N^{2n}; the entry is sign * x^exp
};

struct Differential {
  int rows = 0, cols = 0;
  std::vector<SparseEntry> entries;
};

// Twist of a summand: the classes of the two label halves in the grading
// group (free coordinates first, then cyclic ones reduced to [0, modulus)).
struct Twist {
  IntVec x, y;
  bool operator==(const Twist& o) const { return x == o.x && y == o.y; }
};

struct ChainComplex {
  int nvars = 0;                                   // 2n
  std::vector<std::vector<ChainSummand>> summands;  // per homological degree
  std::vector<Differential> diff;                   // diff[k]: C_{k+1} -> C_k
  std::vector<std::vector<Twist>> twists;           // filled by graded_twists
};

// Columns are the degree-(k+1) summands, rows the degree-k ones; the entry
// for a boundary incidence is sign * x^(label(F) - label(F') - shift part).
ChainComplex cellular_differential(const QuotientComplex& qc);

std::vector<int> f_vector(const ChainComplex& cc);

// All composites of consecutive differentials vanish as polynomial matrices.
bool verify_d_squared(const ChainComplex& cc);

// No differential entry is a constant (every exponent nonzero).
bool minimality_lint(const ChainComplex& cc);

struct ExactnessReport {
  long candidates = 0;      // translation-normalized label-join degrees
  long checked = 0;         // degrees whose support region fits the window
  long skipped_window = 0;  // degrees dropped because the region spills out
  std::vector<IntVec> nonacyclic;    // degrees failing the certificate
  std::vector<IntVec> disconnected;  // deformed-only: extra components at
                                     // degrees that are otherwise clean
  bool ok() const { return checked > 0 && nonacyclic.empty(); }
};

// Restricted-subcomplex homology at window scale: for every degree b in
// the join-closure of cell labels whose support region fits inside the
// window box, the subcomplex of cells with label <= b must have vanishing
// reduced rational homology in positive degrees. An undeformed complex
// must also be connected at every such degree; a deformed one may split
// into several contractible pieces (the same phenomenon that enlarges the
// augmentation image), and those degrees are listed as `disconnected`
// without failing the certificate. Cells whose orbit is missing from qc
// are treated as deleted. Pass `degrees` to check an explicit list.
ExactnessReport exactness_certificate(const WindowedComplex& wc, const QuotientComplex& qc,
                                      const std::vector<IntVec>* degrees = nullptr);

// Fills cc.twists with the classes of each summand's label halves under
// `pres` and verifies every differential entry is degree-preserving.
void graded_twists(ChainComplex& cc, const CokernelPresentation& pres);

Json chain_to_json(const ChainComplex& cc);
ChainComplex chain_from_json(const Json& j);

}  // namespace cellres
