#pragma once

// Laurent monomials as exponent vectors and small polynomial arithmetic
// (just enough to multiply differential matrices symbolically).

#include <map>
#include <sstream>

#include "cellres/numeric.hpp"

namespace cellres {

// Renders an exponent vector over variables x1..xn, y1..yn (len = 2n) or
// x1..xn (len = n). Negative exponents go to the denominator: "y2/x2".
inline std::string monomial_str(const IntVec& e, int n) {
  auto var = [&](size_t i) {
    std::ostringstream os;
    if (static_cast<int>(i) < n)
      os << "x" << (i + 1);
    else
      os << "y" << (i - n + 1);
    return os.str();
  };
  std::string num, den;
  for (size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    std::string& side = (e[i] > 0) ? num : den;
    if (!side.empty()) side += "*";
    side += var(i);
    Int a = abs(e[i]);
    if (a != 1) side += "^" + a.get_str();
  }
  if (num.empty()) num = "1";
  if (den.empty()) return num;
  return num + "/" + (den.find('*') != std::string::npos ? "(" + den + ")" : den);
}

// One signed monomial term of a differential entry.
struct MonoTerm {
  Int coeff;
  IntVec expo;
};

// Sparse polynomial keyed by exponent; zero coefficients are dropped.
struct Poly {
  std::map<IntVec, Int, IntVecLess> terms;

  void add(const Int& c, const IntVec& e) {
    if (c == 0) return;
    auto it = terms.find(e);
    if (it == terms.end()) {
      terms.emplace(e, c);
    } else {
      it->second += c;
      if (it->second == 0) terms.erase(it);
    }
  }
  bool is_zero() const { return terms.empty(); }
};

// Binomial x^a - x^b style pair; `vars` fixes the exponent length.
struct Binomial {
  IntVec lead, trail;  // monomial exponents, lead - trail

  bool operator==(const Binomial& o) const {
    return (lead == o.lead && trail == o.trail) || (lead == o.trail && trail == o.lead);
  }
  std::string str(int n) const {
    return monomial_str(lead, n) + " - " + monomial_str(trail, n);
  }
};

inline IntVec positive_part(const IntVec& v) {
  IntVec r(v.size(), Int(0));
  for (size_t i = 0; i < v.size(); ++i)
    if (v[i] > 0) r[i] = v[i];
  return r;
}

inline IntVec negative_part(const IntVec& v) {
  IntVec r(v.size(), Int(0));
  for (size_t i = 0; i < v.size(); ++i)
    if (v[i] < 0) r[i] = -v[i];
  return r;
}

}  // namespace cellres
