#include "cellres/morita.hpp"

#include <algorithm>

namespace cellres {

namespace {

constexpr long kBasisCap = 200000;

std::vector<IntVec> group_elements(const FiniteAbelianGroup& G) {
  std::vector<IntVec> out;
  IntVec c(G.moduli.size(), Int(0));
  while (true) {
    out.push_back(c);
    size_t j = 0;
    while (j < c.size() && c[j] == G.moduli[j] - 1) {
      c[j] = 0;
      ++j;
    }
    if (j == c.size()) break;
    c[j] += 1;
  }
  return out;
}

void monomials_rec(int pos, int n, long rem, IntVec& cur, std::vector<IntVec>& out) {
  if (pos == n - 1) {
    cur[pos] = rem;
    out.push_back(cur);
    return;
  }
  for (long a = 0; a <= rem; ++a) {
    cur[pos] = a;
    monomials_rec(pos + 1, n, rem - a, cur, out);
  }
}

// All alpha in N^n with |alpha|_1 <= N, by total degree then lex.
std::vector<IntVec> monomials_up_to(int n, long N) {
  std::vector<IntVec> out;
  IntVec cur(n, Int(0));
  for (long d = 0; d <= N; ++d) monomials_rec(0, n, d, cur, out);
  return out;
}

IntVec gadd(const FiniteAbelianGroup& G, const IntVec& a, const IntVec& b) {
  return G.reduce(vec_add(a, b));
}

IntVec gneg(const FiniteAbelianGroup& G, const IntVec& a) { return G.reduce(vec_neg(a)); }

IntVec concat(const IntVec& a, const IntVec& b) {
  IntVec r = a;
  r.insert(r.end(), b.begin(), b.end());
  return r;
}

void check_truncation(long N) {
  if (N < 0) throw input_error("[E_MORITA_TRUNC] truncation degree must be >= 0");
}

}  // namespace

MoritaSetup morita_setup(int n, const FiniteAbelianGroup& G, const IntMat& weights) {
  if (n < 1) throw input_error("[E_MORITA_SHAPE] need at least one coordinate");
  if (weights.rows != static_cast<int>(G.moduli.size()) || weights.cols != n)
    throw input_error("[E_MORITA_SHAPE] weight matrix must be moduli x coordinates");
  MoritaSetup ms;
  ms.n = n;
  ms.G = G;
  ms.weights = weights;
  ms.Lt = cofinite_sublattice(principal_lattice(IntMat::identity(n)), G, weights);
  return ms;
}

std::vector<AlgebraElt> build_algebra(const IntMat& weights, const FiniteAbelianGroup& G,
                                      long N) {
  check_truncation(N);
  int n = weights.cols;
  if (n < 1) throw input_error("[E_MORITA_SHAPE] need at least one coordinate");
  if (weights.rows != static_cast<int>(G.moduli.size()))
    throw input_error("[E_MORITA_SHAPE] weight matrix must be moduli x coordinates");
  auto alphas = monomials_up_to(n, N);
  auto elts = group_elements(G);
  if (static_cast<long>(alphas.size()) * static_cast<long>(elts.size()) > kBasisCap)
    throw resource_error("[E_MORITA_SIZE] truncated basis exceeds the enumeration cap");
  std::vector<AlgebraElt> out;
  out.reserve(alphas.size() * elts.size());
  for (const IntVec& a : alphas) {
    IntVec wa = G.reduce(weights.mul_vec(a));
    for (const IntVec& r2 : elts) out.push_back({a, gadd(G, wa, r2), r2});
  }
  return out;
}

std::vector<PiElt> build_pi_module(const MoritaSetup& ms, long N) {
  check_truncation(N);
  auto alphas = monomials_up_to(ms.n, N);
  auto elts = group_elements(ms.G);
  if (static_cast<long>(alphas.size()) * static_cast<long>(elts.size()) > kBasisCap)
    throw resource_error("[E_MORITA_SIZE] truncated basis exceeds the enumeration cap");
  std::vector<PiElt> out;
  out.reserve(alphas.size() * elts.size());
  for (const IntVec& a : alphas)
    for (const IntVec& v : elts) out.push_back({a, v});
  return out;
}

PiElt psi(const AlgebraElt& a) { return {a.alpha, a.rho2}; }

AlgebraElt phi(const PiElt& p, const MoritaSetup& ms) {
  return {p.alpha, gadd(ms.G, ms.weight_of(p.alpha), p.vbar), p.vbar};
}

IntVec algebra_degree(const AlgebraElt& a, const FiniteAbelianGroup& G) {
  return concat(G.reduce(a.rho1), gneg(G, a.rho2));
}

IntVec pi_degree(const PiElt& p, const MoritaSetup& ms) {
  return concat(gadd(ms.G, ms.weight_of(p.alpha), p.vbar), gneg(ms.G, p.vbar));
}

bool bijection_check(const MoritaSetup& ms, long N) {
  auto alg = build_algebra(ms.weights, ms.G, N);
  auto mod = build_pi_module(ms, N);
  if (alg.size() != mod.size()) return false;
  for (const AlgebraElt& a : alg) {
    PiElt p = psi(a);
    if (!(phi(p, ms) == a)) return false;
    if (pi_degree(p, ms) != algebra_degree(a, ms.G)) return false;
  }
  for (const PiElt& p : mod)
    if (!(psi(phi(p, ms)) == p)) return false;
  return true;
}

std::map<IntVec, std::pair<long, long>, IntVecLess> graded_dimensions(const MoritaSetup& ms,
                                                                      long N) {
  std::map<IntVec, std::pair<long, long>, IntVecLess> out;
  for (const AlgebraElt& a : build_algebra(ms.weights, ms.G, N))
    out[algebra_degree(a, ms.G)].first += 1;
  for (const PiElt& p : build_pi_module(ms, N)) out[pi_degree(p, ms)].second += 1;
  return out;
}

bool action_compatibility(const MoritaSetup& ms, long N) {
  check_truncation(N);
  auto alg = build_algebra(ms.weights, ms.G, N);
  auto betas = monomials_up_to(ms.n, N / 2);
  for (const AlgebraElt& a : alg) {
    for (const IntVec& b : betas) {
      IntVec wb = ms.weight_of(b);
      IntVec ab = vec_add(a.alpha, b);
      AlgebraElt left{ab, gadd(ms.G, a.rho1, wb), a.rho2};
      AlgebraElt right{ab, a.rho1, gadd(ms.G, a.rho2, gneg(ms.G, wb))};
      PiElt base = psi(a);
      PiElt x_side{vec_add(base.alpha, b), base.vbar};
      PiElt y_side{vec_add(base.alpha, b), gadd(ms.G, base.vbar, gneg(ms.G, wb))};
      if (!(psi(left) == x_side)) return false;
      if (!(psi(right) == y_side)) return false;
    }
  }
  return true;
}

bool antidiagonal_decomposition_check(const Lattice& L, const Lattice& Lt, long N) {
  check_truncation(N);
  QuotientGroup qg = quotient_group(L, Lt);
  long order = to_ll(qg.group.order());

  // One representative per coset, found by walking coefficient shells out
  // from the origin; radius `order` always suffices.
  std::map<IntVec, IntVec, IntVecLess> reps;
  int rk = L.rank();
  for (long rad = 0; rad <= order && static_cast<long>(reps.size()) < order; ++rad) {
    IntVec c(rk, Int(-rad));
    while (true) {
      bool on_shell = rad == 0;
      for (int j = 0; j < rk && !on_shell; ++j)
        if (abs(c[j]) == rad) on_shell = true;
      if (on_shell) {
        IntVec v = L.basis.mul_vec(c);
        reps.emplace(qg.coset(L, v), v);
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
  if (static_cast<long>(reps.size()) != order) return false;

  // Unique factorization: exactly one representative differs from v by an
  // element of the sublattice.
  IntVec c(rk, Int(-N));
  while (true) {
    IntVec v = L.basis.mul_vec(c);
    int hits = 0;
    for (const auto& [label, r] : reps)
      if (contains(Lt, vec_sub(v, r))) ++hits;
    if (hits != 1) return false;
    int j = 0;
    while (j < rk && c[j] == N) {
      c[j] = -N;
      ++j;
    }
    if (j == rk) break;
    c[j] += 1;
  }
  return true;
}

}  // namespace cellres
