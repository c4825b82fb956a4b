#pragma once

// Integer and rational matrices with the normal-form algorithms everything
// else is built on: column Hermite form, Smith form, saturated kernels,
// exact rank/determinant/solve. No floating point anywhere.

#include <functional>

#include "cellres/numeric.hpp"

namespace cellres {

struct IntMat {
  int rows = 0, cols = 0;
  IntVec a;  // row-major

  IntMat() = default;
  IntMat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c, Int(0)) {}

  Int& at(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
  const Int& at(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }

  static IntMat identity(int n) {
    IntMat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }

  static IntMat from_rows(const std::vector<IntVec>& rs) {
    IntMat m(static_cast<int>(rs.size()), rs.empty() ? 0 : static_cast<int>(rs[0].size()));
    for (int i = 0; i < m.rows; ++i) {
      if (static_cast<int>(rs[i].size()) != m.cols)
        throw input_error("[E_MAT_RAGGED] ragged row list");
      for (int j = 0; j < m.cols; ++j) m.at(i, j) = rs[i][j];
    }
    return m;
  }

  static IntMat from_cols(const std::vector<IntVec>& cs) {
    IntMat m(cs.empty() ? 0 : static_cast<int>(cs[0].size()), static_cast<int>(cs.size()));
    for (int j = 0; j < m.cols; ++j) {
      if (static_cast<int>(cs[j].size()) != m.rows)
        throw input_error("[E_MAT_RAGGED] ragged column list");
      for (int i = 0; i < m.rows; ++i) m.at(i, j) = cs[j][i];
    }
    return m;
  }

  IntVec row(int i) const {
    IntVec r(cols);
    for (int j = 0; j < cols; ++j) r[j] = at(i, j);
    return r;
  }

  IntVec col(int j) const {
    IntVec c(rows);
    for (int i = 0; i < rows; ++i) c[i] = at(i, j);
    return c;
  }

  IntMat transpose() const {
    IntMat t(cols, rows);
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j) t.at(j, i) = at(i, j);
    return t;
  }

  IntMat mul(const IntMat& o) const {
    if (cols != o.rows) throw input_error("[E_MAT_SHAPE] matrix product shape mismatch");
    IntMat r(rows, o.cols);
    for (int i = 0; i < rows; ++i)
      for (int k = 0; k < cols; ++k) {
        if (at(i, k) == 0) continue;
        for (int j = 0; j < o.cols; ++j) r.at(i, j) += at(i, k) * o.at(k, j);
      }
    return r;
  }

  IntVec mul_vec(const IntVec& v) const {
    if (static_cast<int>(v.size()) != cols)
      throw input_error("[E_MAT_SHAPE] matrix-vector shape mismatch");
    IntVec r(rows, Int(0));
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j) r[i] += at(i, j) * v[j];
    return r;
  }

  RatVec mul_vec(const RatVec& v) const {
    if (static_cast<int>(v.size()) != cols)
      throw input_error("[E_MAT_SHAPE] matrix-vector shape mismatch");
    RatVec r(rows, Rat(0));
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j) r[i] += Rat(at(i, j)) * v[j];
    return r;
  }

  bool operator==(const IntMat& o) const {
    return rows == o.rows && cols == o.cols && a == o.a;
  }
};

struct RatMat {
  int rows = 0, cols = 0;
  RatVec a;

  RatMat() = default;
  RatMat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c, Rat(0)) {}

  Rat& at(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
  const Rat& at(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }

  static RatMat from_int(const IntMat& m) {
    RatMat r(m.rows, m.cols);
    for (int i = 0; i < m.rows; ++i)
      for (int j = 0; j < m.cols; ++j) r.at(i, j) = Rat(m.at(i, j));
    return r;
  }
};

// H = A*U with U unimodular. H is in column echelon form: pivot rows strictly
// increase column by column, pivots are positive, entries left of a pivot in
// its row are reduced into [0, pivot). Zero columns are trailing.
struct HNFResult {
  IntMat H, U;
};
HNFResult hermite_normal_form(const IntMat& A);

// D = P*A*Q with P, Q unimodular, D diagonal with nonnegative entries
// d1 | d2 | ... (trailing zeros last).
struct SNFResult {
  IntMat D, P, Q;
};
SNFResult smith_normal_form(const IntMat& A);

// Basis (as columns, HNF-canonical) of the saturated lattice {v : A v = 0}.
IntMat kernel_basis(const IntMat& A);

int rank_of(const IntMat& A);
int rank_of(const RatMat& A);

Int det_int(const IntMat& A);  // Bareiss fraction-free; square input

// Any exact rational solution of A x = b, or nullopt when inconsistent.
// When A has full column rank the solution returned is the unique one.
std::optional<RatVec> solve_rational(const IntMat& A, const RatVec& b);
std::optional<RatVec> solve_rational(const RatMat& A, const RatVec& b);

// Solve A X = B columnwise; nullopt if any column is inconsistent.
std::optional<RatMat> solve_rational_mat(const RatMat& A, const RatMat& B);

RatMat inverse(const RatMat& A);  // throws input_error if singular

// All maximal minors of a full-column-rank matrix lie in {0, +1, -1}.
// Throws input_error when the columns are dependent (the notion needs a
// genuine rank-m lattice basis).
bool is_unimodular_cols(const IntMat& B);

// Presentation of Z^rows(A) / column-span(A) as a projection: degree of v is
// proj*v with row i reduced modulo moduli[i] when moduli[i] > 0 (moduli 0
// rows are free coordinates). Free rows come first, then torsion rows.
struct CokernelPresentation {
  IntMat proj;              // k x rows(A)
  std::vector<Int> moduli;  // k entries, 0 = free, otherwise >= 2
  int free_rank = 0;

  IntVec degree(const IntVec& v) const {
    IntVec d = proj.mul_vec(v);
    for (size_t i = 0; i < d.size(); ++i)
      if (moduli[i] > 0) d[i] = ((d[i] % moduli[i]) + moduli[i]) % moduli[i];
    return d;
  }
};
CokernelPresentation cokernel_presentation(const IntMat& A);

}  // namespace cellres
