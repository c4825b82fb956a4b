#include "cellres/fan.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "cellres/linineq.hpp"

namespace cellres {

Fan fan_from_json(const Json& j) {
  Fan f;
  if (!j.contains("dim") || !j.contains("rays") || !j.contains("max_cones"))
    throw input_error("[E_FAN_FORMAT] fan needs dim/rays/max_cones");
  f.dim = j["dim"].get<int>();
  if (f.dim < 1) throw input_error("[E_FAN_FORMAT] dim must be >= 1");
  std::vector<IntVec> ray_rows;
  for (const auto& r : j["rays"]) {
    IntVec v = intvec_from_json(r);
    if (static_cast<int>(v.size()) != f.dim)
      throw input_error("[E_FAN_FORMAT] ray length != dim");
    Int g(0);
    for (const auto& x : v) g = gcd(g, x);
    if (g == 0) throw input_error("[E_FAN_RAY] zero ray");
    if (g != 1) throw input_error("[E_FAN_RAY] ray is not primitive");
    ray_rows.push_back(v);
  }
  if (ray_rows.empty()) throw input_error("[E_FAN_FORMAT] fan needs at least one ray");
  for (size_t a = 0; a < ray_rows.size(); ++a)
    for (size_t b = a + 1; b < ray_rows.size(); ++b)
      if (ray_rows[a] == ray_rows[b]) throw input_error("[E_FAN_RAY] duplicate ray");
  f.rays = IntMat::from_rows(ray_rows);

  for (const auto& c : j["max_cones"]) {
    std::vector<int> cone;
    for (const auto& i : c) {
      int idx = i.get<int>();
      if (idx < 0 || idx >= f.nrays()) throw input_error("[E_FAN_CONE] ray index out of range");
      cone.push_back(idx);
    }
    std::sort(cone.begin(), cone.end());
    cone.erase(std::unique(cone.begin(), cone.end()), cone.end());
    if (cone.empty()) throw input_error("[E_FAN_CONE] empty cone");
    f.max_cones.push_back(cone);
  }
  if (f.max_cones.empty()) throw input_error("[E_FAN_FORMAT] fan needs at least one cone");
  for (size_t a = 0; a < f.max_cones.size(); ++a)
    for (size_t b = 0; b < f.max_cones.size(); ++b) {
      if (a == b) continue;
      if (std::includes(f.max_cones[a].begin(), f.max_cones[a].end(), f.max_cones[b].begin(),
                        f.max_cones[b].end()))
        throw input_error("[E_FAN_CONE] nested maximal cones");
    }

  std::set<int> used;
  for (const auto& c : f.max_cones) used.insert(c.begin(), c.end());
  for (int i = 0; i < f.nrays(); ++i)
    if (!used.count(i)) f.I_empty.push_back(i);
  return f;
}

Json fan_to_json(const Fan& f) {
  Json j;
  j["dim"] = f.dim;
  Json rays = Json::array();
  for (int i = 0; i < f.nrays(); ++i) rays.push_back(intvec_to_json(f.rays.row(i)));
  j["rays"] = rays;
  Json cones = Json::array();
  for (const auto& c : f.max_cones) cones.push_back(c);
  j["max_cones"] = cones;
  return j;
}

namespace {

IntMat cone_ray_matrix(const Fan& f, const std::vector<int>& cone) {
  std::vector<IntVec> rows;
  for (int i : cone) rows.push_back(f.rays.row(i));
  return IntMat::from_rows(rows);
}

bool cone_is_smooth(const IntMat& R) {
  if (rank_of(R) != R.rows) return false;  // not even simplicial
  auto sf = smith_normal_form(R);
  for (int i = 0; i < R.rows; ++i)
    if (sf.D.at(i, i) != 1) return false;
  return true;
}

}  // namespace

FanChecks smooth_simplicial_complete_checks(const Fan& f) {
  FanChecks rep;
  rep.simplicial = true;
  rep.smooth = true;
  for (const auto& c : f.max_cones) {
    IntMat R = cone_ray_matrix(f, c);
    if (rank_of(R) != R.rows) rep.simplicial = false;
    if (!cone_is_smooth(R)) rep.smooth = false;
  }
  if (!rep.simplicial) {
    rep.complete = std::nullopt;  // facet pairing needs simplicial cones
    return rep;
  }
  // Complete simplicial fan: every maximal cone is full-dimensional and
  // every facet (cone minus one ray) is shared by exactly two cones. A
  // facet on one cone only is a boundary of the support.
  bool complete = true;
  for (const auto& c : f.max_cones)
    if (static_cast<int>(c.size()) != f.dim) complete = false;
  if (complete) {
    std::map<std::vector<int>, int> facet_count;
    for (const auto& c : f.max_cones)
      for (size_t drop = 0; drop < c.size(); ++drop) {
        std::vector<int> facet;
        for (size_t i = 0; i < c.size(); ++i)
          if (i != drop) facet.push_back(c[i]);
        facet_count[facet] += 1;
      }
    for (const auto& [facet, cnt] : facet_count)
      if (cnt != 2) complete = false;
  }
  rep.complete = complete;
  return rep;
}

CokernelPresentation class_group(const Fan& f) {
  if (rank_of(f.rays) != f.dim)
    throw input_error("[E_FAN_TORUS_FACTOR] rays do not span; torus factor present");
  return cokernel_presentation(f.rays);
}

Lattice principal_lattice(const Fan& f) {
  if (rank_of(f.rays) != f.dim)
    throw input_error("[E_FAN_TORUS_FACTOR] rays do not span; torus factor present");
  return principal_lattice(f.rays);
}

std::vector<std::optional<bool>> affine_chart_check(const Fan& f) {
  std::vector<std::optional<bool>> out;
  for (const auto& c : f.max_cones) {
    if (static_cast<int>(c.size()) != f.dim) {
      out.push_back(std::nullopt);
      continue;
    }
    IntMat R = cone_ray_matrix(f, c);
    Int d = det_int(R);
    out.push_back(d == 1 || d == -1);
  }
  return out;
}

std::vector<IntVec> irrelevant_ideal_single(const Fan& f) {
  std::set<IntVec, IntVecLess> gens;
  for (const auto& c : f.max_cones) {
    IntVec g(f.nrays(), Int(1));
    for (int i : c) g[i] = 0;
    gens.insert(g);
  }
  return {gens.begin(), gens.end()};
}

std::vector<IntVec> irrelevant_ideal_product(const Fan& f) {
  std::vector<IntVec> singles = irrelevant_ideal_single(f);
  std::vector<IntVec> out;
  int n = f.nrays();
  for (const auto& gx : singles)
    for (const auto& gy : singles) {
      IntVec g(2 * n, Int(0));
      for (int i = 0; i < n; ++i) {
        g[i] = gx[i];
        g[n + i] = gy[i];
      }
      out.push_back(g);
    }
  return out;
}

IntVec separation_functional(const Fan& f, int s1, int s2) {
  if (s1 < 0 || s1 >= static_cast<int>(f.max_cones.size()) || s2 < 0 ||
      s2 >= static_cast<int>(f.max_cones.size()))
    throw input_error("[E_FAN_CONE] cone index out of range");
  if (s1 == s2) return IntVec(f.dim, Int(0));
  const auto& c1 = f.max_cones[s1];
  const auto& c2 = f.max_cones[s2];
  std::vector<int> shared, only1, only2;
  std::set_intersection(c1.begin(), c1.end(), c2.begin(), c2.end(), std::back_inserter(shared));
  std::set_difference(c1.begin(), c1.end(), c2.begin(), c2.end(), std::back_inserter(only1));
  std::set_difference(c2.begin(), c2.end(), c1.begin(), c1.end(), std::back_inserter(only2));
  std::vector<LinCon> cons;
  auto add = [&](int ray, Rel rel, long rhs) {
    LinCon c;
    c.a.resize(f.dim);
    for (int j = 0; j < f.dim; ++j) c.a[j] = Rat(f.rays.at(ray, j));
    c.rel = rel;
    c.c = Rat(rhs);
    cons.push_back(std::move(c));
  };
  for (int r : shared) add(r, Rel::EQ, 0);
  for (int r : only1) add(r, Rel::GT, 0);
  for (int r : only2) {
    // u . ray < 0 as -(u . ray) > 0
    LinCon c;
    c.a.resize(f.dim);
    for (int j = 0; j < f.dim; ++j) c.a[j] = Rat(-f.rays.at(r, j));
    c.rel = Rel::GT;
    c.c = Rat(0);
    cons.push_back(std::move(c));
  }
  auto p = feasible_point(f.dim, cons);
  if (!p) throw input_error("[E_NOT_SEPARATED] cones admit no separating functional");
  // Clear denominators to get an integer functional.
  Int den(1);
  for (const auto& x : *p) den = lcm(den, Int(x.get_den()));
  IntVec u(f.dim);
  for (int j = 0; j < f.dim; ++j) {
    Rat scaled = (*p)[j] * Rat(den);
    u[j] = scaled.get_num();
  }
  return u;
}

std::optional<IntVec> fano_support_vector(const Fan& f, int sigma) {
  if (sigma < 0 || sigma >= static_cast<int>(f.max_cones.size()))
    throw input_error("[E_FAN_CONE] cone index out of range");
  const auto& c = f.max_cones[sigma];
  if (static_cast<int>(c.size()) != f.dim)
    throw input_error("[E_FAN_CONE] support vector needs a full-dimensional cone");
  IntMat R = cone_ray_matrix(f, c);
  RatVec rhs(f.dim, Rat(-1));
  auto m = solve_rational(R, rhs);
  if (!m || rank_of(R) != f.dim) return std::nullopt;
  // The defining values force m uniquely; reject non-integral or wrong-sign
  // evaluations off the cone.
  for (const auto& x : *m)
    if (!is_integer(x)) return std::nullopt;
  IntVec v(f.nrays());
  for (int i = 0; i < f.nrays(); ++i) {
    Rat val(0);
    for (int j = 0; j < f.dim; ++j) val += Rat(f.rays.at(i, j)) * (*m)[j];
    if (!is_integer(val)) return std::nullopt;
    v[i] = val.get_num();
  }
  for (int i : c)
    if (v[i] != -1) return std::nullopt;
  std::set<int> inc(c.begin(), c.end());
  for (int i = 0; i < f.nrays(); ++i)
    if (!inc.count(i) && v[i] < 0) return std::nullopt;
  return v;
}

}  // namespace cellres
