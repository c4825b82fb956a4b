#include "cellres/linineq.hpp"

#include <algorithm>

namespace cellres {

namespace {

struct Bound {
  Rat cst;
  RatVec coef;  // bound value = cst + coef . x
  bool strict;
};

struct Resolver {
  enum Kind { FROM_EQ, FROM_FM, FREE } kind;
  int var;
  // FROM_EQ: x_var = cst + coef . x; FROM_FM: interval from bounds.
  Rat cst;
  RatVec coef;
  std::vector<Bound> lowers, uppers;
};

Rat eval(const Rat& cst, const RatVec& coef, const RatVec& x) {
  Rat v = cst;
  for (size_t j = 0; j < coef.size(); ++j)
    if (coef[j] != 0) v += coef[j] * x[j];
  return v;
}

}  // namespace

std::optional<RatVec> feasible_point(int dim, std::vector<LinCon> cons) {
  for (const auto& c : cons)
    if (static_cast<int>(c.a.size()) != dim)
      throw input_error("[E_MAT_SHAPE] constraint arity mismatch");

  std::vector<bool> eliminated(dim, false);
  std::vector<Resolver> stack;

  auto has_coef = [&](const LinCon& c, int k) { return c.a[k] != 0; };

  // Equality substitution.
  for (;;) {
    int ci = -1, k = -1;
    for (size_t i = 0; i < cons.size() && ci < 0; ++i) {
      if (cons[i].rel != Rel::EQ) continue;
      for (int j = 0; j < dim; ++j)
        if (has_coef(cons[i], j)) {
          ci = static_cast<int>(i);
          k = j;
          break;
        }
    }
    if (ci < 0) break;
    LinCon eq = cons[ci];
    cons.erase(cons.begin() + ci);
    // x_k = (c - sum_{j != k} a_j x_j) / a_k
    Resolver r;
    r.kind = Resolver::FROM_EQ;
    r.var = k;
    r.cst = eq.c / eq.a[k];
    r.coef.assign(dim, Rat(0));
    for (int j = 0; j < dim; ++j)
      if (j != k) r.coef[j] = -eq.a[j] / eq.a[k];
    for (auto& c : cons) {
      if (c.a[k] == 0) continue;
      Rat f = c.a[k];
      c.a[k] = 0;
      c.c -= f * r.cst;
      for (int j = 0; j < dim; ++j) c.a[j] += f * r.coef[j];
    }
    eliminated[k] = true;
    stack.push_back(std::move(r));
  }
  // Leftover equalities are constant.
  for (size_t i = 0; i < cons.size();) {
    if (cons[i].rel == Rel::EQ) {
      if (cons[i].c != 0) return std::nullopt;
      cons.erase(cons.begin() + i);
    } else {
      ++i;
    }
  }

  // Fourier-Motzkin on the inequalities.
  for (;;) {
    int k = -1;
    for (int j = 0; j < dim && k < 0; ++j) {
      if (eliminated[j]) continue;
      for (const auto& c : cons)
        if (has_coef(c, j)) {
          k = j;
          break;
        }
    }
    if (k < 0) break;
    Resolver r;
    r.kind = Resolver::FROM_FM;
    r.var = k;
    std::vector<LinCon> next;
    for (const auto& c : cons) {
      if (c.a[k] == 0) {
        next.push_back(c);
        continue;
      }
      Bound b;
      b.strict = (c.rel == Rel::GT);
      b.cst = c.c / c.a[k];
      b.coef.assign(dim, Rat(0));
      for (int j = 0; j < dim; ++j)
        if (j != k) b.coef[j] = -c.a[j] / c.a[k];
      if (c.a[k] > 0)
        r.lowers.push_back(std::move(b));  // x_k >= bound
      else
        r.uppers.push_back(std::move(b));  // x_k <= bound (division flipped)
    }
    for (const auto& lo : r.lowers)
      for (const auto& up : r.uppers) {
        // up - lo >= 0 (or > 0 when either side is strict).
        LinCon c;
        c.rel = (lo.strict || up.strict) ? Rel::GT : Rel::GE;
        c.c = lo.cst - up.cst;
        c.a.assign(dim, Rat(0));
        for (int j = 0; j < dim; ++j) c.a[j] = up.coef[j] - lo.coef[j];
        next.push_back(std::move(c));
      }
    if (next.size() > 200000)
      throw resource_error("[E_FM_BLOWUP] inequality elimination exceeded size budget");
    cons = std::move(next);
    eliminated[k] = true;
    stack.push_back(std::move(r));
  }

  // Everything left is a constant inequality.
  for (const auto& c : cons) {
    if (c.rel == Rel::GE && !(0 >= c.c)) return std::nullopt;
    if (c.rel == Rel::GT && !(0 > c.c)) return std::nullopt;
  }

  for (int j = 0; j < dim; ++j)
    if (!eliminated[j]) {
      Resolver r;
      r.kind = Resolver::FREE;
      r.var = j;
      stack.push_back(std::move(r));
    }

  RatVec x(dim, Rat(0));
  for (auto it = stack.rbegin(); it != stack.rend(); ++it) {
    const Resolver& r = *it;
    if (r.kind == Resolver::FREE) {
      x[r.var] = 0;
    } else if (r.kind == Resolver::FROM_EQ) {
      x[r.var] = eval(r.cst, r.coef, x);
    } else {
      bool have_lo = !r.lowers.empty(), have_up = !r.uppers.empty();
      Rat lo, hi;
      bool lo_strict = false, hi_strict = false;
      for (size_t i = 0; i < r.lowers.size(); ++i) {
        Rat v = eval(r.lowers[i].cst, r.lowers[i].coef, x);
        if (i == 0 || v > lo) {
          lo = v;
          lo_strict = r.lowers[i].strict;
        } else if (v == lo) {
          lo_strict = lo_strict || r.lowers[i].strict;
        }
      }
      for (size_t i = 0; i < r.uppers.size(); ++i) {
        Rat v = eval(r.uppers[i].cst, r.uppers[i].coef, x);
        if (i == 0 || v < hi) {
          hi = v;
          hi_strict = r.uppers[i].strict;
        } else if (v == hi) {
          hi_strict = hi_strict || r.uppers[i].strict;
        }
      }
      if (have_lo && have_up) {
        // The eliminated pair constraints guarantee lo <= hi, with equality
        // only when both achieving bounds are weak.
        x[r.var] = (lo == hi) ? lo : (lo + hi) / 2;
      } else if (have_lo) {
        x[r.var] = lo + 1;
      } else if (have_up) {
        x[r.var] = hi - 1;
      } else {
        x[r.var] = 0;
      }
    }
  }
  return x;
}

}  // namespace cellres
