#pragma once

// Exact arithmetic primitives shared by every module. All core computations
// run on GMP integers/rationals; floating point never enters any result.

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace cellres {

using Int = mpz_class;
using Rat = mpq_class;
using IntVec = std::vector<Int>;
using RatVec = std::vector<Rat>;

// Error taxonomy. The CLI maps these onto distinct exit codes, so core code
// must pick the right class: malformed or out-of-contract input (3),
// a mathematical verification that failed (2), a configured bound that was
// exceeded (4). Messages start with a stable bracketed code.
struct input_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct verify_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct resource_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline Int floor_div(const Int& a, const Int& b) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

// Componentwise floor of a rational, exact.
inline Int floor_rat(const Rat& q) {
  Int z;
  mpz_fdiv_q(z.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return z;
}

inline Int ceil_rat(const Rat& q) {
  Int z;
  mpz_cdiv_q(z.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return z;
}

inline bool is_integer(const Rat& q) { return q.get_den() == 1; }

inline long long to_ll(const Int& z) {
  if (!z.fits_slong_p())
    throw resource_error("[E_BIGNUM_RANGE] value does not fit a machine integer: " + z.get_str());
  return z.get_si();
}

inline int sign_of(const Rat& q) { return sgn(q); }
inline int sign_of(const Int& z) { return sgn(z); }

// ---- vector helpers ------------------------------------------------------

inline IntVec vec_add(const IntVec& a, const IntVec& b) {
  IntVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

inline IntVec vec_sub(const IntVec& a, const IntVec& b) {
  IntVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

inline IntVec vec_neg(const IntVec& a) {
  IntVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
  return r;
}

inline IntVec vec_max(const IntVec& a, const IntVec& b) {
  IntVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] >= b[i] ? a[i] : b[i];
  return r;
}

inline bool vec_leq(const IntVec& a, const IntVec& b) {
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

inline bool vec_is_zero(const IntVec& a) {
  for (const Int& x : a)
    if (x != 0) return false;
  return true;
}

inline Int vec_dot(const IntVec& a, const IntVec& b) {
  Int s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline Rat vec_dot(const IntVec& a, const RatVec& b) {
  Rat s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += Rat(a[i]) * b[i];
  return s;
}

inline Rat vec_dot(const RatVec& a, const RatVec& b) {
  Rat s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

// Strict weak order for rational vectors; used as a map key comparator so
// every container iteration below stays deterministic.
struct RatVecLess {
  bool operator()(const RatVec& a, const RatVec& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    for (size_t i = 0; i < a.size(); ++i) {
      int c = cmp(a[i], b[i]);
      if (c != 0) return c < 0;
    }
    return false;
  }
};

struct IntVecLess {
  bool operator()(const IntVec& a, const IntVec& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    for (size_t i = 0; i < a.size(); ++i) {
      int c = cmp(a[i], b[i]);
      if (c != 0) return c < 0;
    }
    return false;
  }
};

// ---- parsing / printing --------------------------------------------------

inline Int parse_int(const std::string& s) {
  if (s.empty()) throw input_error("[E_PARSE_INT] empty integer literal");
  size_t pos = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (pos == s.size()) throw input_error("[E_PARSE_INT] bare sign: '" + s + "'");
  for (size_t i = pos; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i])))
      throw input_error("[E_PARSE_INT] bad integer literal: '" + s + "'");
  return Int(s);
}

// Accepts "p" or "p/q" with q > 0 after canonicalization.
inline Rat parse_rat(const std::string& s) {
  auto slash = s.find('/');
  Rat r;
  if (slash == std::string::npos) {
    r = Rat(parse_int(s));
  } else {
    Int num = parse_int(s.substr(0, slash));
    Int den = parse_int(s.substr(slash + 1));
    if (den == 0) throw input_error("[E_PARSE_RAT] zero denominator: '" + s + "'");
    r = Rat(num, den);
  }
  r.canonicalize();
  return r;
}

inline std::string rat_str(const Rat& q) {
  return q.get_str();
}

inline std::string vec_str(const IntVec& v) {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ")";
  return os.str();
}

inline std::string vec_str(const RatVec& v) {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i].get_str();
  os << ")";
  return os.str();
}

}  // namespace cellres
