#include "cellres/diagonal.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>
#include <utility>

namespace cellres {

namespace {

IntVec concat(const IntVec& a, const IntVec& b) {
  IntVec r = a;
  r.insert(r.end(), b.begin(), b.end());
  return r;
}

}  // namespace

std::vector<Binomial> binomial_generators(const std::vector<IntVec>& vectors, IdealKind kind) {
  std::vector<Binomial> out;
  out.reserve(vectors.size());
  for (const IntVec& v : vectors) {
    IntVec pos = positive_part(v), neg = negative_part(v);
    if (kind == IdealKind::lattice)
      out.push_back({pos, neg});
    else
      out.push_back({concat(pos, neg), concat(neg, pos)});
  }
  return out;
}

bool lawrence_equals_lattice_ideal_check(const std::vector<IntVec>& vectors) {
  for (const IntVec& v : vectors) {
    Binomial law = binomial_generators({v}, IdealKind::lawrence)[0];
    Binomial lat = binomial_generators({concat(v, vec_neg(v))}, IdealKind::lattice)[0];
    if (!(law == lat)) return false;
  }
  return true;
}

std::vector<IntVec> image_monomials(const QuotientComplex& qc) {
  std::set<IntVec, IntVecLess> seen;
  for (const auto& c : qc.cells)
    if (c.dim == 0) seen.insert(c.label);
  return {seen.begin(), seen.end()};
}

std::vector<IntVec> cokernel_extra_monomials(const QuotientComplex& qc, const Lattice& L) {
  std::vector<IntVec> out;
  for (const IntVec& w : image_monomials(qc))
    if (!in_lattice_module(L, w)) out.push_back(w);
  return out;
}

TorsionCertificate torsion_certificate(const IntVec& monomial, const std::vector<IntVec>& gens,
                                       const Lattice& L, long k_max) {
  int n = L.ambient;
  if (static_cast<int>(monomial.size()) != 2 * n)
    throw input_error("[E_MAT_SHAPE] monomial must have 2*ambient exponents");
  if (k_max < 1) throw input_error("[E_TORSION_BOUND] power bound must be >= 1");
  TorsionCertificate cert;
  cert.monomial = monomial;
  cert.degenerate = in_lattice_module(L, monomial);
  for (size_t g = 0; g < gens.size(); ++g) {
    const IntVec& e = gens[g];
    if (static_cast<int>(e.size()) != 2 * n)
      throw input_error("[E_MAT_SHAPE] generator must have 2*ambient exponents");
    for (const Int& x : e)
      if (x < 0) throw input_error("[E_TORSION_GEN] generators must be polynomial monomials");
    long found = 0;
    IntVec found_u;
    IntVec w = monomial;
    for (long k = 1; k <= k_max && found == 0; ++k) {
      w = vec_add(w, e);  // exponent of g^k * m
      IntVec lo(n), hi(n);
      for (int i = 0; i < n; ++i) {
        hi[i] = w[i];
        lo[i] = -w[n + i];
      }
      if (auto u = box_lattice_point(L, lo, hi)) {
        found = k;
        found_u = std::move(*u);
      }
    }
    cert.power.push_back(found);
    cert.witness.push_back(found_u);
    if (found == 0)
      cert.exhausted.push_back(static_cast<int>(g));
    else
      cert.k = std::max(cert.k, found);
  }
  return cert;
}

bool floor_shift_check(const RatVec& p, const IntVec& v) {
  if (p.size() != v.size()) throw input_error("[E_MAT_SHAPE] point and shift lengths differ");
  size_t n = p.size();
  IntVec fp(n), fs(n);
  for (size_t i = 0; i < n; ++i) {
    fp[i] = floor_rat(p[i]);
    fs[i] = floor_rat(p[i] + Rat(v[i]));
  }
  for (size_t i = 0; i < n; ++i)
    if (fs[i] != fp[i] + v[i]) return false;
  IntVec lhs = concat(fs, vec_neg(fs));
  IntVec rhs = vec_add(concat(fp, vec_neg(fp)), concat(v, vec_neg(v)));
  return lhs == rhs;
}

IntVec v_sigma_finder(const RatVec& p, const Fan& f, int sigma, long bound) {
  int n = f.nrays(), m = f.dim;
  if (static_cast<int>(p.size()) != n)
    throw input_error("[E_VSIGMA] point length != number of rays");
  if (sigma < 0 || sigma >= static_cast<int>(f.max_cones.size()))
    throw input_error("[E_VSIGMA] cone index out of range");
  if (bound < 1) throw input_error("[E_VSIGMA] search bound must be >= 1");

  std::vector<bool> in_cone(n, false);
  for (int r : f.max_cones[sigma]) in_cone[r] = true;

  auto fits = [&](const IntVec& v) {
    for (int i = 0; i < n; ++i)
      if (sign_of(p[i] + Rat(v[i])) != (in_cone[i] ? -1 : 1)) return false;
    return true;
  };

  // Both seed vectors need a full-dimensional cone; a lower-dimensional one
  // leaves only the fallback box search.
  IntVec zero_amb(n, Int(0));
  const auto& cone = f.max_cones[sigma];
  bool full_dim = static_cast<int>(cone.size()) == m;
  IntVec v0 = full_dim ? fano_support_vector(f, sigma).value_or(zero_amb) : zero_amb;

  // Zeroing vector: solve b_rho . t = -p_rho over the cone's rays and
  // round the solution to the nearest integer coefficients.
  IntVec vt = zero_amb;
  if (full_dim) {
    IntMat A(m, m);
    RatVec rhs(m);
    for (int i = 0; i < m; ++i) {
      for (int j = 0; j < m; ++j) A.at(i, j) = f.rays.at(cone[i], j);
      rhs[i] = -p[cone[i]];
    }
    if (auto t = solve_rational(A, rhs)) {
      IntVec s(m);
      for (int j = 0; j < m; ++j) s[j] = floor_rat((*t)[j] + Rat(1, 2));
      vt = f.rays.mul_vec(s);
    }
  }

  std::vector<std::pair<long, long>> pairs;
  for (long r = -bound; r <= bound; ++r)
    for (long k = -bound; k <= bound; ++k) pairs.emplace_back(r, k);
  std::sort(pairs.begin(), pairs.end(), [](const auto& a, const auto& b) {
    long sa = std::labs(a.first) + std::labs(a.second);
    long sb = std::labs(b.first) + std::labs(b.second);
    if (sa != sb) return sa < sb;
    return a < b;
  });
  for (const auto& [r, k] : pairs) {
    IntVec v(n);
    for (int i = 0; i < n; ++i) v[i] = Int(r) * v0[i] + Int(k) * vt[i];
    if (fits(v)) return v;
  }

  // Fallback: walk the coefficient box of the principal lattice outward
  // by Chebyshev shells, so small vectors still win.
  Lattice L = principal_lattice(f);
  int rk = L.rank();
  for (long rad = 0; rad <= bound; ++rad) {
    IntVec c(rk, Int(-rad));
    while (true) {
      bool on_shell = rad == 0;
      for (int j = 0; j < rk && !on_shell; ++j)
        if (abs(c[j]) == rad) on_shell = true;
      if (on_shell) {
        IntVec v = L.basis.mul_vec(c);
        if (fits(v)) return v;
      }
      int j = 0;
      while (j < rk && c[j] == rad) {
        c[j] = -rad;
        ++j;
      }
      if (j == rk) break;
      c[j] += 1;
    }
    if (rk == 0) break;
  }

  throw verify_error("[E_VSIGMA] no lattice vector with the required sign pattern for cone " +
                     std::to_string(sigma) + ": searched r*v0 + k*vt with |r|,|k| <= " +
                     std::to_string(bound) + " and the coefficient box [-" +
                     std::to_string(bound) + ", " + std::to_string(bound) + "]^" +
                     std::to_string(rk));
}

}  // namespace cellres
