#include "cellres/matrix.hpp"

#include <algorithm>

namespace cellres {

namespace {

void col_swap(IntMat& M, int j1, int j2) {
  for (int i = 0; i < M.rows; ++i) std::swap(M.at(i, j1), M.at(i, j2));
}

void col_neg(IntMat& M, int j) {
  for (int i = 0; i < M.rows; ++i) M.at(i, j) = -M.at(i, j);
}

// col j2 += q * col j1
void col_axpy(IntMat& M, int j2, const Int& q, int j1) {
  if (q == 0) return;
  for (int i = 0; i < M.rows; ++i) M.at(i, j2) += q * M.at(i, j1);
}

void row_swap(IntMat& M, int i1, int i2) {
  for (int j = 0; j < M.cols; ++j) std::swap(M.at(i1, j), M.at(i2, j));
}

void row_neg(IntMat& M, int i) {
  for (int j = 0; j < M.cols; ++j) M.at(i, j) = -M.at(i, j);
}

void row_axpy(IntMat& M, int i2, const Int& q, int i1) {
  if (q == 0) return;
  for (int j = 0; j < M.cols; ++j) M.at(i2, j) += q * M.at(i1, j);
}

}  // namespace

HNFResult hermite_normal_form(const IntMat& A) {
  IntMat H = A;
  IntMat U = IntMat::identity(A.cols);
  int pivot_col = 0;
  for (int r = 0; r < H.rows && pivot_col < H.cols; ++r) {
    // Reduce columns pivot_col.. against each other at row r until one
    // nonzero entry remains (gcd of the originals).
    for (;;) {
      int jmin = -1;
      for (int j = pivot_col; j < H.cols; ++j) {
        if (H.at(r, j) == 0) continue;
        if (jmin < 0 || abs(H.at(r, j)) < abs(H.at(r, jmin))) jmin = j;
      }
      if (jmin < 0) break;  // row r is zero from pivot_col on
      if (jmin != pivot_col) {
        col_swap(H, pivot_col, jmin);
        col_swap(U, pivot_col, jmin);
      }
      bool cleared = true;
      for (int j = pivot_col + 1; j < H.cols; ++j) {
        if (H.at(r, j) == 0) continue;
        Int q = -floor_div(H.at(r, j), H.at(r, pivot_col));
        col_axpy(H, j, q, pivot_col);
        col_axpy(U, j, q, pivot_col);
        if (H.at(r, j) != 0) cleared = false;
      }
      if (cleared) break;
    }
    if (pivot_col < H.cols && H.at(r, pivot_col) != 0) {
      if (H.at(r, pivot_col) < 0) {
        col_neg(H, pivot_col);
        col_neg(U, pivot_col);
      }
      // Reduce earlier columns at the pivot row into [0, pivot).
      for (int j = 0; j < pivot_col; ++j) {
        Int q = -floor_div(H.at(r, j), H.at(r, pivot_col));
        col_axpy(H, j, q, pivot_col);
        col_axpy(U, j, q, pivot_col);
      }
      ++pivot_col;
    }
  }
  return {H, U};
}

SNFResult smith_normal_form(const IntMat& A) {
  IntMat D = A;
  IntMat P = IntMat::identity(A.rows);
  IntMat Q = IntMat::identity(A.cols);
  int n = std::min(D.rows, D.cols);
  for (int k = 0; k < n; ++k) {
    for (;;) {
      // Lex-first entry of minimal absolute value in the trailing block.
      int pi = -1, pj = -1;
      for (int i = k; i < D.rows; ++i)
        for (int j = k; j < D.cols; ++j) {
          if (D.at(i, j) == 0) continue;
          if (pi < 0 || abs(D.at(i, j)) < abs(D.at(pi, pj))) {
            pi = i;
            pj = j;
          }
        }
      if (pi < 0) {
        pi = pj = -1;
        break;
      }
      if (pi != k) {
        row_swap(D, k, pi);
        row_swap(P, k, pi);
      }
      if (pj != k) {
        col_swap(D, k, pj);
        col_swap(Q, k, pj);
      }
      bool clean = true;
      for (int i = k + 1; i < D.rows; ++i) {
        if (D.at(i, k) == 0) continue;
        Int q = -floor_div(D.at(i, k), D.at(k, k));
        row_axpy(D, i, q, k);
        row_axpy(P, i, q, k);
        if (D.at(i, k) != 0) clean = false;
      }
      for (int j = k + 1; j < D.cols; ++j) {
        if (D.at(k, j) == 0) continue;
        Int q = -floor_div(D.at(k, j), D.at(k, k));
        col_axpy(D, j, q, k);
        col_axpy(Q, j, q, k);
        if (D.at(k, j) != 0) clean = false;
      }
      if (!clean) continue;
      // Divisibility: D[k][k] must divide every later entry.
      bool fixed = true;
      for (int i = k + 1; i < D.rows && fixed; ++i)
        for (int j = k + 1; j < D.cols && fixed; ++j)
          if (D.at(i, j) % D.at(k, k) != 0) {
            row_axpy(D, k, Int(1), i);
            row_axpy(P, k, Int(1), i);
            fixed = false;
          }
      if (fixed) break;
    }
    if (D.at(k, k) < 0) {
      row_neg(D, k);
      row_neg(P, k);
    }
  }
  return {D, P, Q};
}

IntMat kernel_basis(const IntMat& A) {
  HNFResult hf = hermite_normal_form(A);
  // Columns of U where H's column is zero span the kernel lattice; HNF is
  // from a unimodular transform so the span is automatically saturated.
  std::vector<IntVec> ker_cols;
  for (int j = 0; j < hf.H.cols; ++j) {
    bool zero = true;
    for (int i = 0; i < hf.H.rows && zero; ++i)
      if (hf.H.at(i, j) != 0) zero = false;
    if (zero) ker_cols.push_back(hf.U.col(j));
  }
  IntMat K = IntMat::from_cols(ker_cols);
  if (K.cols == 0) return IntMat(A.cols, 0);
  // Re-canonicalize so the basis is unique for the kernel lattice.
  HNFResult kh = hermite_normal_form(K);
  std::vector<IntVec> nz;
  for (int j = 0; j < kh.H.cols; ++j) {
    bool zero = true;
    for (int i = 0; i < kh.H.rows && zero; ++i)
      if (kh.H.at(i, j) != 0) zero = false;
    if (!zero) nz.push_back(kh.H.col(j));
  }
  if (nz.empty()) return IntMat(A.cols, 0);
  return IntMat::from_cols(nz);
}

int rank_of(const IntMat& A) {
  HNFResult hf = hermite_normal_form(A);
  int r = 0;
  for (int j = 0; j < hf.H.cols; ++j) {
    bool zero = true;
    for (int i = 0; i < hf.H.rows && zero; ++i)
      if (hf.H.at(i, j) != 0) zero = false;
    if (!zero) ++r;
  }
  return r;
}

int rank_of(const RatMat& A) {
  RatMat M = A;
  int r = 0;
  for (int j = 0; j < M.cols && r < M.rows; ++j) {
    int piv = -1;
    for (int i = r; i < M.rows; ++i)
      if (M.at(i, j) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    for (int jj = 0; jj < M.cols; ++jj) std::swap(M.at(r, jj), M.at(piv, jj));
    Rat p = M.at(r, j);
    for (int i = r + 1; i < M.rows; ++i) {
      if (M.at(i, j) == 0) continue;
      Rat f = M.at(i, j) / p;
      for (int jj = j; jj < M.cols; ++jj) M.at(i, jj) -= f * M.at(r, jj);
    }
    ++r;
  }
  return r;
}

Int det_int(const IntMat& A) {
  if (A.rows != A.cols) throw input_error("[E_MAT_SHAPE] determinant of non-square matrix");
  int n = A.rows;
  if (n == 0) return Int(1);
  IntMat M = A;
  Int prev(1);
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (M.at(k, k) == 0) {
      int piv = -1;
      for (int i = k + 1; i < n; ++i)
        if (M.at(i, k) != 0) {
          piv = i;
          break;
        }
      if (piv < 0) return Int(0);
      row_swap(M, k, piv);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) {
        M.at(i, j) = (M.at(i, j) * M.at(k, k) - M.at(i, k) * M.at(k, j)) / prev;
      }
    prev = M.at(k, k);
  }
  Int d = M.at(n - 1, n - 1);
  return sign < 0 ? Int(-d) : d;
}

std::optional<RatVec> solve_rational(const RatMat& A, const RatVec& b) {
  if (static_cast<int>(b.size()) != A.rows)
    throw input_error("[E_MAT_SHAPE] solve: rhs length mismatch");
  RatMat M(A.rows, A.cols + 1);
  for (int i = 0; i < A.rows; ++i) {
    for (int j = 0; j < A.cols; ++j) M.at(i, j) = A.at(i, j);
    M.at(i, A.cols) = b[i];
  }
  std::vector<int> pivot_col_of_row;
  int r = 0;
  for (int j = 0; j < A.cols && r < M.rows; ++j) {
    int piv = -1;
    for (int i = r; i < M.rows; ++i)
      if (M.at(i, j) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    for (int jj = 0; jj <= A.cols; ++jj) std::swap(M.at(r, jj), M.at(piv, jj));
    Rat p = M.at(r, j);
    for (int jj = j; jj <= A.cols; ++jj) M.at(r, jj) /= p;
    for (int i = 0; i < M.rows; ++i) {
      if (i == r || M.at(i, j) == 0) continue;
      Rat f = M.at(i, j);
      for (int jj = j; jj <= A.cols; ++jj) M.at(i, jj) -= f * M.at(r, jj);
    }
    pivot_col_of_row.push_back(j);
    ++r;
  }
  for (int i = r; i < M.rows; ++i)
    if (M.at(i, A.cols) != 0) return std::nullopt;
  RatVec x(A.cols, Rat(0));  // free variables set to 0
  for (int i = 0; i < r; ++i) x[pivot_col_of_row[i]] = M.at(i, A.cols);
  return x;
}

std::optional<RatVec> solve_rational(const IntMat& A, const RatVec& b) {
  return solve_rational(RatMat::from_int(A), b);
}

std::optional<RatMat> solve_rational_mat(const RatMat& A, const RatMat& B) {
  if (A.rows != B.rows) throw input_error("[E_MAT_SHAPE] solve: rhs rows mismatch");
  RatMat X(A.cols, B.cols);
  for (int j = 0; j < B.cols; ++j) {
    RatVec b(B.rows);
    for (int i = 0; i < B.rows; ++i) b[i] = B.at(i, j);
    auto x = solve_rational(A, b);
    if (!x) return std::nullopt;
    for (int i = 0; i < A.cols; ++i) X.at(i, j) = (*x)[i];
  }
  return X;
}

RatMat inverse(const RatMat& A) {
  if (A.rows != A.cols) throw input_error("[E_MAT_SHAPE] inverse of non-square matrix");
  RatMat I(A.rows, A.rows);
  for (int i = 0; i < A.rows; ++i) I.at(i, i) = 1;
  auto X = solve_rational_mat(A, I);
  if (!X || rank_of(A) != A.rows) throw input_error("[E_MAT_SINGULAR] singular matrix");
  return *X;
}

bool is_unimodular_cols(const IntMat& B) {
  int n = B.rows, m = B.cols;
  if (rank_of(B) != m)
    throw input_error("[E_LATTICE_RANK] unimodularity needs independent columns");
  // Enumerate all m-subsets of rows and their m x m minors.
  std::vector<int> idx(m);
  for (int i = 0; i < m; ++i) idx[i] = i;
  if (m == 0) return true;
  for (;;) {
    IntMat S(m, m);
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) S.at(i, j) = B.at(idx[i], j);
    Int d = det_int(S);
    if (d > 1 || d < -1) return false;
    int p = m - 1;
    while (p >= 0 && idx[p] == n - m + p) --p;
    if (p < 0) break;
    ++idx[p];
    for (int q = p + 1; q < m; ++q) idx[q] = idx[q - 1] + 1;
  }
  return true;
}

CokernelPresentation cokernel_presentation(const IntMat& A) {
  SNFResult sf = smith_normal_form(A);
  int n = std::min(sf.D.rows, sf.D.cols);
  // Row i of P maps v to the i-th coordinate in the diagonalized basis;
  // coordinate i is killed mod D[i][i] (trivial when D[i][i] == 1, free when
  // the diagonal runs out or is zero).
  CokernelPresentation cp;
  std::vector<int> free_rows, torsion_rows;
  std::vector<Int> torsion_mod;
  for (int i = 0; i < sf.D.rows; ++i) {
    Int d = (i < n) ? sf.D.at(i, i) : Int(0);
    if (d == 0) {
      free_rows.push_back(i);
    } else if (d > 1) {
      torsion_rows.push_back(i);
      torsion_mod.push_back(d);
    }
  }
  std::vector<IntVec> prows;
  std::vector<Int> mods;
  for (int i : free_rows) {
    prows.push_back(sf.P.row(i));
    mods.push_back(Int(0));
  }
  for (size_t t = 0; t < torsion_rows.size(); ++t) {
    prows.push_back(sf.P.row(torsion_rows[t]));
    mods.push_back(torsion_mod[t]);
  }
  cp.proj = IntMat::from_rows(prows);
  if (cp.proj.cols == 0) cp.proj.cols = A.rows;  // empty presentation keeps width
  cp.moduli = mods;
  cp.free_rank = static_cast<int>(free_rows.size());
  return cp;
}

}  // namespace cellres
