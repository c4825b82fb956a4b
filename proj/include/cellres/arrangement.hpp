#pragma once

// Periodic hyperplane arrangements in lattice coordinates. Family i is the
// set of affine hyperplanes b_i . t = j - eps_i (j ranging over Z), where
// b_i is row i of an n x m integer matrix B of full column rank. Cells are
// enumerated exactly inside a window box, quotiented by a full-rank
// translation lattice in Z^m, and labelled by Laurent exponents in Z^{2n}.

#include <map>
#include <optional>
#include <vector>

#include "cellres/jsonio.hpp"
#include "cellres/lattice.hpp"
#include "cellres/matrix.hpp"

namespace cellres {

struct ArrangementSpec {
  IntMat B;        // n x m, rows are the hyperplane normals
  RatVec epsilon;  // n entries, each in [0, 1)
  Int window;      // half-width k of the box [-k, k]^m, k >= 1
};

// Per-family data of a cell: alpha_i(t) = b_i . t + eps_i is pinned to the
// integer `offset` (on == true) or strictly between `offset` and `offset`+1
// (on == false) throughout the open cell.
struct CellKey {
  std::vector<Int> offset;
  std::vector<bool> on;
  bool operator==(const CellKey& o) const { return offset == o.offset && on == o.on; }
  bool operator<(const CellKey& o) const;
};

// `sub` lies in the closure of the cell with key `face`.
bool in_closure(const CellKey& face, const CellKey& sub);

struct WCell {
  int dim = 0;
  CellKey key;
  RatVec rep;                      // exact interior point; the barycenter of
                                   // the closure vertices for kept cells
  IntVec label;                    // exponent in Z^{2n}; vertices and kept
                                   // cells only, empty otherwise
  std::vector<int> closure_verts;  // ids of the vertices in the closure
  bool kept = false;               // closure meets the window box
};

struct WindowedComplex {
  ArrangementSpec spec;
  int n = 0, m = 0;
  Int delta;                 // upper bound on the diameter of any cell
  std::vector<WCell> cells;  // sorted by (dim, key)
  std::map<CellKey, int> by_key;
  std::vector<std::vector<int>> kept_by_dim;  // size m+1

  Rat alpha(int i, const RatVec& t) const;
};

// Enumerates every cell whose closure meets [-k, k]^m (plus some spill-over
// cells near the boundary, marked kept == false). Supports m <= 3 and
// requires the rows of B to positively span R^m so that all cells are
// bounded polytopes.
WindowedComplex build_arrangement(const ArrangementSpec& spec);

struct TransversalityReport {
  bool ok = false;
  std::vector<RatVec> witnesses;  // points of vertices on > m hyperplanes
};
// Every kept vertex lies on exactly m hyperplane families.
TransversalityReport check_transversality(const WindowedComplex& wc);

// Every kept vertex is an integer point of Z^m. Only meaningful for the
// undeformed arrangement; rejects nonzero epsilon.
bool vertices_equal_lattice(const WindowedComplex& wc);

// Labels: a vertex v gets (floor(alpha(v)), -floor(alpha(v))) over the n
// families; a higher cell gets the componentwise max over its closure
// vertices. Filled for all vertices and all kept cells.
void monomial_labels(WindowedComplex& wc);

// Key of the cell translated by u in Z^m: every offset moves by b_i . u.
CellKey shift_key(const CellKey& k, const IntMat& B, const IntVec& u);

// Codimension-one faces of a kept cell, as (cell index, orientation sign).
// A facet that fell outside the window throws resource_error, unless
// `hit_window_edge` is supplied, in which case it is flagged and skipped.
std::vector<std::pair<int, int>> facets_with_signs(const WindowedComplex& wc, int cell,
                                                   bool* hit_window_edge = nullptr);

// The lattice translation w taking the canonical copy of p, the one inside
// the origin-centered half-open fundamental domain of `lambda`, to p.
IntVec orbit_translation(const RatVec& p, const Lattice& lambda);

struct QuotientCell {
  int id = 0;
  int dim = 0;
  CellKey key;
  RatVec rep;
  IntVec label;
};

struct QuotientIncidence {
  int from = 0, to = 0;  // cell ids with dim(to) == dim(from) - 1
  int sign = 0;          // +1 or -1
  IntVec shift;          // w in the translation lattice: the geometric facet
                         // of `from` is the cell `to` translated by w
};

struct QuotientComplex {
  ArrangementSpec spec;
  Lattice translation;  // full-rank sublattice of Z^m
  int n = 0, m = 0;
  std::vector<QuotientCell> cells;  // sorted by (dim, key)
  std::vector<QuotientIncidence> incidence;
  std::vector<int> f_vector;  // size m+1
  std::map<CellKey, int> by_key;

  const QuotientCell* find(const CellKey& k) const;
};

// One canonical representative per translation orbit: the member whose
// representative point lies in the origin-centered half-open fundamental
// domain of the Hermite basis of `lambda`. Throws resource_error when the
// window is too small to contain a representative or all of its facets.
QuotientComplex quotient_complex(const WindowedComplex& wc, const Lattice& lambda);

struct CoveringMap {
  Int degree;                 // index of the fine translation lattice in Z^m
  std::vector<int> image;     // fine cell id -> coarse cell id
  std::vector<IntVec> shift;  // v with label_fine = label_coarse + (Bv, -Bv)
};
// fine is a quotient by a sublattice of Z^m, coarse the quotient by Z^m
// itself, both of the same arrangement. Verifies the map is degree-to-1 in
// every dimension, commutes with incidence, and matches labels.
CoveringMap covering_map(const QuotientComplex& fine, const QuotientComplex& coarse);

// Halving epsilon must not change the combinatorial fingerprint of the
// quotient: f-vector and the per-dimension multiset of on-patterns.
bool epsilon_stability_check(const ArrangementSpec& spec, const Lattice& lambda);

Json quotient_to_json(const QuotientComplex& qc);

}  // namespace cellres
