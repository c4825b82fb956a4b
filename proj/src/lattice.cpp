#include "cellres/lattice.hpp"

namespace cellres {

Lattice lattice_from_generators(int ambient, const IntMat& gens) {
  if (gens.rows != ambient) throw input_error("[E_MAT_SHAPE] generator rows != ambient");
  if (gens.cols == 0) return Lattice{ambient, IntMat(ambient, 0)};
  auto hf = hermite_normal_form(gens);
  std::vector<IntVec> nz;
  for (int j = 0; j < hf.H.cols; ++j) {
    bool zero = true;
    for (int i = 0; i < hf.H.rows && zero; ++i)
      if (hf.H.at(i, j) != 0) zero = false;
    if (!zero) nz.push_back(hf.H.col(j));
  }
  if (nz.empty()) return Lattice{ambient, IntMat(ambient, 0)};
  return Lattice{ambient, IntMat::from_cols(nz)};
}

Lattice principal_lattice(const IntMat& B) { return lattice_from_generators(B.rows, B); }

bool is_unimodular(const Lattice& L) {
  if (L.rank() == 0) return true;
  return is_unimodular_cols(L.basis);
}

Lattice lawrence_lift(const Lattice& L) {
  int n = L.ambient, m = L.rank();
  IntMat lifted(2 * n, m);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < m; ++j) {
      lifted.at(i, j) = L.basis.at(i, j);
      lifted.at(n + i, j) = -L.basis.at(i, j);
    }
  return lattice_from_generators(2 * n, lifted);
}

std::optional<IntVec> coefficients(const Lattice& L, const IntVec& v) {
  if (static_cast<int>(v.size()) != L.ambient)
    throw input_error("[E_MAT_SHAPE] vector length != ambient");
  if (L.rank() == 0) {
    for (const auto& x : v)
      if (x != 0) return std::nullopt;
    return IntVec{};
  }
  RatVec b(v.size());
  for (size_t i = 0; i < v.size(); ++i) b[i] = Rat(v[i]);
  auto c = solve_rational(L.basis, b);
  if (!c) return std::nullopt;
  IntVec ci(c->size());
  for (size_t i = 0; i < c->size(); ++i) {
    if (!is_integer((*c)[i])) return std::nullopt;
    ci[i] = (*c)[i].get_num();
  }
  // Full column rank makes the solution unique, but the residual check keeps
  // this safe even for defective bases.
  if (L.basis.mul_vec(ci) != v) return std::nullopt;
  return ci;
}

bool contains(const Lattice& L, const IntVec& v) { return coefficients(L, v).has_value(); }

Lattice cofinite_sublattice(const Lattice& L, const FiniteAbelianGroup& G, const IntMat& phi) {
  int m = L.rank();
  int k = static_cast<int>(G.moduli.size());
  if (phi.rows != k || phi.cols != m)
    throw input_error("[E_MAT_SHAPE] group map must be |moduli| x rank");
  if (k == 0) return L;  // trivial group: kernel is everything

  // Surjectivity: (c, y) -> phi*c + diag(moduli)*y covers Z^k exactly when
  // the stacked matrix has all invariant factors 1.
  IntMat stacked(k, m + k);
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < m; ++j) stacked.at(i, j) = phi.at(i, j);
    stacked.at(i, m + i) = G.moduli[i];
  }
  auto sf = smith_normal_form(stacked);
  for (int i = 0; i < k; ++i)
    if (sf.D.at(i, i) != 1)
      throw input_error("[E_GROUP_NOT_SURJ] group map is not onto the stated group");

  // Kernel of c -> phi*c mod moduli: solve phi*c = diag(moduli)*y.
  IntMat M(k, m + k);
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < m; ++j) M.at(i, j) = phi.at(i, j);
    M.at(i, m + i) = -G.moduli[i];
  }
  IntMat K = kernel_basis(M);
  std::vector<IntVec> coeff_cols;
  for (int j = 0; j < K.cols; ++j) {
    IntVec c(m);
    for (int i = 0; i < m; ++i) c[i] = K.at(i, j);
    coeff_cols.push_back(c);
  }
  IntMat C = IntMat::from_cols(coeff_cols);
  if (C.cols == 0) C = IntMat(m, 0);
  return lattice_from_generators(L.ambient, L.basis.mul(C));
}

QuotientGroup quotient_group(const Lattice& L, const Lattice& Lsub) {
  if (L.ambient != Lsub.ambient) throw input_error("[E_MAT_SHAPE] ambient mismatch");
  int m = L.rank();
  // Express Lsub's basis in L's coordinates; non-integral entries mean Lsub
  // is no sublattice of L.
  IntMat C(m, Lsub.rank());
  for (int j = 0; j < Lsub.rank(); ++j) {
    auto c = coefficients(L, Lsub.basis.col(j));
    if (!c) throw input_error("[E_NOT_SUBLATTICE] second lattice is not contained in the first");
    for (int i = 0; i < m; ++i) C.at(i, j) = (*c)[i];
  }
  if (rank_of(C) < m)
    throw input_error("[E_INFINITE_INDEX] sublattice has infinite index");
  auto sf = smith_normal_form(C);
  QuotientGroup qg;
  std::vector<IntVec> label_rows;
  for (int i = 0; i < m; ++i) {
    Int d = (i < std::min(sf.D.rows, sf.D.cols)) ? sf.D.at(i, i) : Int(0);
    if (d > 1) {
      qg.group.moduli.push_back(d);
      label_rows.push_back(sf.P.row(i));
    }
  }
  qg.label = IntMat::from_rows(label_rows);
  if (qg.label.cols == 0) qg.label.cols = m;
  return qg;
}

IntVec QuotientGroup::coset(const Lattice& L, const IntVec& v) const {
  auto c = coefficients(L, v);
  if (!c) throw input_error("[E_NOT_IN_LATTICE] vector is outside the lattice");
  return group.reduce(label.mul_vec(*c));
}

std::optional<IntVec> box_lattice_point(const Lattice& L, const IntVec& lo, const IntVec& hi) {
  int n = L.ambient, m = L.rank();
  if (static_cast<int>(lo.size()) != n || static_cast<int>(hi.size()) != n)
    throw input_error("[E_MAT_SHAPE] box bounds length != ambient");
  for (int i = 0; i < n; ++i)
    if (lo[i] > hi[i]) return std::nullopt;
  bool zero_ok = true;
  for (int i = 0; i < n && zero_ok; ++i)
    if (lo[i] > 0 || hi[i] < 0) zero_ok = false;
  if (zero_ok) return IntVec(n, Int(0));
  if (m == 0) return std::nullopt;

  // Pick m independent rows of the basis and bound the coefficients through
  // the inverse, turning the ambient box into a finite coefficient box.
  std::vector<int> rows_used;
  {
    std::vector<IntVec> chosen;
    for (int i = 0; i < n && static_cast<int>(rows_used.size()) < m; ++i) {
      chosen.push_back(L.basis.row(i));
      IntMat T = IntMat::from_rows(chosen);
      if (rank_of(T) == static_cast<int>(chosen.size())) {
        rows_used.push_back(i);
      } else {
        chosen.pop_back();
      }
    }
  }
  if (static_cast<int>(rows_used.size()) < m)
    throw input_error("[E_LATTICE_RANK] basis does not have full column rank");
  IntMat R(m, m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) R.at(i, j) = L.basis.at(rows_used[i], j);
  RatMat Rinv = inverse(RatMat::from_int(R));

  IntVec clo(m), chi(m);
  for (int i = 0; i < m; ++i) {
    Rat mn(0), mx(0);
    for (int j = 0; j < m; ++j) {
      const Rat& w = Rinv.at(i, j);
      Rat a = w * Rat(lo[rows_used[j]]);
      Rat b = w * Rat(hi[rows_used[j]]);
      if (a > b) std::swap(a, b);
      mn += a;
      mx += b;
    }
    clo[i] = ceil_rat(mn);
    chi[i] = floor_rat(mx);
    if (clo[i] > chi[i]) return std::nullopt;
  }

  Int cells(1);
  for (int i = 0; i < m; ++i) cells *= chi[i] - clo[i] + 1;
  if (cells > 4000000)
    throw resource_error("[E_BOX_TOO_LARGE] coefficient box has too many points");

  IntVec c = clo;
  for (;;) {
    IntVec v = L.basis.mul_vec(c);
    bool ok = true;
    for (int i = 0; i < n && ok; ++i)
      if (v[i] < lo[i] || v[i] > hi[i]) ok = false;
    if (ok) return v;
    int p = m - 1;
    while (p >= 0 && c[p] == chi[p]) {
      c[p] = clo[p];
      --p;
    }
    if (p < 0) return std::nullopt;
    c[p] += 1;
  }
}

bool in_lattice_module(const Lattice& L, const IntVec& w) {
  int n = L.ambient;
  if (static_cast<int>(w.size()) != 2 * n)
    throw input_error("[E_MAT_SHAPE] monomial must have 2*ambient exponents");
  IntVec lo(n), hi(n);
  for (int i = 0; i < n; ++i) {
    hi[i] = w[i];
    lo[i] = -w[n + i];
  }
  return box_lattice_point(L, lo, hi).has_value();
}

}  // namespace cellres
