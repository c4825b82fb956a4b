#include "cellres/arrangement.hpp"

#include <algorithm>
#include <set>

#include "cellres/linineq.hpp"

namespace cellres {

bool CellKey::operator<(const CellKey& o) const {
  if (offset.size() != o.offset.size()) return offset.size() < o.offset.size();
  for (size_t i = 0; i < offset.size(); ++i) {
    int c = cmp(offset[i], o.offset[i]);
    if (c != 0) return c < 0;
    if (on[i] != o.on[i]) return on[i] < o.on[i];
  }
  return false;
}

bool in_closure(const CellKey& face, const CellKey& sub) {
  for (size_t i = 0; i < face.offset.size(); ++i) {
    if (face.on[i]) {
      if (!sub.on[i] || sub.offset[i] != face.offset[i]) return false;
    } else if (sub.on[i]) {
      if (sub.offset[i] != face.offset[i] && sub.offset[i] != face.offset[i] + 1) return false;
    } else if (sub.offset[i] != face.offset[i]) {
      return false;
    }
  }
  return true;
}

Rat WindowedComplex::alpha(int i, const RatVec& t) const {
  Rat s = spec.epsilon[i];
  for (int j = 0; j < m; ++j) s += Rat(spec.B.at(i, j)) * t[j];
  return s;
}

CellKey shift_key(const CellKey& k, const IntMat& B, const IntVec& u) {
  CellKey s = k;
  for (size_t i = 0; i < k.offset.size(); ++i) s.offset[i] += vec_dot(B.row(static_cast<int>(i)), u);
  return s;
}

namespace {

CellKey classify(const WindowedComplex& wc, const RatVec& t) {
  CellKey k;
  k.offset.resize(wc.n);
  k.on.resize(wc.n);
  for (int i = 0; i < wc.n; ++i) {
    Rat a = wc.alpha(i, t);
    k.on[i] = is_integer(a);
    k.offset[i] = floor_rat(a);
  }
  return k;
}

std::vector<int> on_rows(const CellKey& k) {
  std::vector<int> r;
  for (size_t i = 0; i < k.on.size(); ++i)
    if (k.on[i]) r.push_back(static_cast<int>(i));
  return r;
}

IntMat rows_of(const IntMat& B, const std::vector<int>& idx) {
  IntMat R(static_cast<int>(idx.size()), B.cols);
  for (size_t a = 0; a < idx.size(); ++a)
    for (int j = 0; j < B.cols; ++j) R.at(static_cast<int>(a), j) = B.at(idx[a], j);
  return R;
}

// Greedy prefix of `idx` whose rows are linearly independent.
std::vector<int> greedy_independent(const IntMat& B, const std::vector<int>& idx, int want) {
  std::vector<int> picked;
  for (int i : idx) {
    std::vector<int> trial = picked;
    trial.push_back(i);
    if (rank_of(rows_of(B, trial)) == static_cast<int>(trial.size())) picked = trial;
    if (static_cast<int>(picked.size()) == want) break;
  }
  return picked;
}

// Oriented tangent basis of a cell, canonical per on-pattern: the Hermite
// kernel basis of the on-rows, with the last column flipped if needed so
// that det[independent on-normals | basis] > 0.
IntMat tangent_basis(const IntMat& B, const CellKey& key) {
  std::vector<int> on = on_rows(key);
  int m = B.cols;
  IntMat K(m, 0);
  if (on.empty()) {
    K = IntMat::identity(m);
  } else {
    K = kernel_basis(rows_of(B, on));
  }
  int d = K.cols;
  if (d == 0) return K;
  std::vector<int> ind = greedy_independent(B, on, m - d);
  IntMat M(m, m);
  for (size_t a = 0; a < ind.size(); ++a)
    for (int j = 0; j < m; ++j) M.at(j, static_cast<int>(a)) = B.at(ind[a], j);
  for (int c = 0; c < d; ++c)
    for (int j = 0; j < m; ++j) M.at(j, static_cast<int>(ind.size()) + c) = K.at(j, c);
  Int det = det_int(M);
  if (det == 0) throw verify_error("[E_ORIENT] degenerate tangent frame");
  if (det < 0)
    for (int j = 0; j < m; ++j) K.at(j, d - 1) = -K.at(j, d - 1);
  return K;
}

int sgn_det_rat(const RatMat& X) {
  // Clearing denominators column by column scales the determinant by
  // positive factors only.
  IntMat Z(X.rows, X.cols);
  for (int j = 0; j < X.cols; ++j) {
    Int l = 1;
    for (int i = 0; i < X.rows; ++i) l = l / gcd(l, Int(X.at(i, j).get_den())) * X.at(i, j).get_den();
    for (int i = 0; i < X.rows; ++i) {
      Rat v = X.at(i, j) * Rat(l);
      Z.at(i, j) = v.get_num();
    }
  }
  return sign_of(det_int(Z));
}

// Sign of the facet Fp in the boundary of F: expresses [rep(Fp) - rep(F),
// tangent(Fp)] in the frame tangent(F) and takes the determinant sign.
int incidence_sign(const IntMat& B, const WCell& F, const WCell& Fp) {
  IntMat TF = tangent_basis(B, F.key);
  IntMat TP = tangent_basis(B, Fp.key);
  int m = B.cols, d = F.dim;
  RatMat rhs(m, d);
  for (int j = 0; j < m; ++j) rhs.at(j, 0) = Fp.rep[j] - F.rep[j];
  for (int c = 0; c < d - 1; ++c)
    for (int j = 0; j < m; ++j) rhs.at(j, c + 1) = Rat(TP.at(j, c));
  auto X = solve_rational_mat(RatMat::from_int(TF), rhs);
  if (!X) throw verify_error("[E_ORIENT] facet frame outside cell tangent space");
  int s = sgn_det_rat(*X);
  if (s == 0) throw verify_error("[E_ORIENT] degenerate facet frame");
  return s;
}

struct LocalCell {
  std::vector<int> sigma;  // one entry per on-row: 0, +1, -1
  RatVec dir;
};

}  // namespace

WindowedComplex build_arrangement(const ArrangementSpec& spec) {
  WindowedComplex wc;
  wc.spec = spec;
  wc.n = spec.B.rows;
  wc.m = spec.B.cols;
  const int n = wc.n, m = wc.m;
  const IntMat& B = spec.B;

  if (m < 1 || m > 3)
    throw input_error("[E_DIM_SUPPORT] cell enumeration supports 1 to 3 lattice coordinates, got " +
                      std::to_string(m));
  if (static_cast<int>(spec.epsilon.size()) != n)
    throw input_error("[E_EPSILON] deformation vector length does not match the number of rows");
  for (const Rat& e : spec.epsilon)
    if (e < 0 || e >= 1) throw input_error("[E_EPSILON] deformation entries must lie in [0,1)");
  if (spec.window < 1) throw input_error("[E_WINDOW_RADIUS] window radius must be >= 1");
  if (rank_of(B) != m) throw input_error("[E_LATTICE_RANK] hyperplane normals do not span");
  for (int i = 0; i < n; ++i) {
    bool zero = true;
    for (int j = 0; j < m; ++j)
      if (B.at(i, j) != 0) zero = false;
    if (zero && spec.epsilon[i] > 0)
      throw input_error("[E_DEGENERATE_FAMILY] zero normal with nonzero deformation in row " +
                        std::to_string(i));
  }
  // Bounded cells require the rows to positively span R^m: no nonzero
  // direction may satisfy B d >= 0.
  for (int j = 0; j < m; ++j)
    for (int s : {1, -1}) {
      std::vector<LinCon> cons;
      for (int i = 0; i < n; ++i) {
        RatVec a(m);
        for (int l = 0; l < m; ++l) a[l] = Rat(B.at(i, l));
        cons.push_back({a, Rel::GE, Rat(0)});
      }
      RatVec a(m, Rat(0));
      a[j] = Rat(s);
      cons.push_back({a, Rel::GT, Rat(0)});
      if (feasible_point(m, cons))
        throw input_error("[E_UNBOUNDED] arrangement has unbounded cells: row normals do not "
                          "positively span");
    }

  // Diameter bound: inside one cell every alpha_i varies by at most 1, so m
  // independent rows R give |t - t'|_inf <= max row sum of |R^{-1}|.
  std::vector<int> all_rows(n);
  for (int i = 0; i < n; ++i) all_rows[i] = i;
  std::vector<int> base = greedy_independent(B, all_rows, m);
  RatMat Rinv = inverse(RatMat::from_int(rows_of(B, base)));
  Rat dmax(0);
  for (int i = 0; i < m; ++i) {
    Rat s(0);
    for (int j = 0; j < m; ++j) s += abs(Rinv.at(i, j));
    if (s > dmax) dmax = s;
  }
  wc.delta = ceil_rat(dmax);
  if (wc.delta < 1) wc.delta = 1;

  const Int kp = spec.window + wc.delta;  // enlarged half-width

  // --- vertices: solve every m-subset of families across all offsets whose
  // hyperplane can meet the enlarged box.
  std::map<RatVec, int, RatVecLess> vert_id;
  std::vector<RatVec> verts;
  long long solves = 0;
  auto run_subset = [&](const std::vector<int>& S) {
    IntMat R = rows_of(B, S);
    if (rank_of(R) != m) return;
    std::vector<Int> lo(m), hi(m);
    for (int a = 0; a < m; ++a) {
      Int norm1 = 0;
      for (int j = 0; j < m; ++j) norm1 += abs(B.at(S[a], j));
      lo[a] = ceil_rat(Rat(-norm1 * kp) + spec.epsilon[S[a]]);
      hi[a] = floor_rat(Rat(norm1 * kp) + spec.epsilon[S[a]]);
      if (lo[a] > hi[a]) return;
    }
    std::vector<Int> off = lo;
    while (true) {
      if (++solves > 4000000)
        throw resource_error("[E_ENUM_BLOWUP] vertex candidate enumeration exceeded 4e6 solves");
      RatVec rhs(m);
      for (int a = 0; a < m; ++a) rhs[a] = Rat(off[a]) - spec.epsilon[S[a]];
      auto t = solve_rational(R, rhs);
      if (t) {
        bool inside = true;
        for (int j = 0; j < m; ++j)
          if (abs((*t)[j]) > Rat(kp)) inside = false;
        if (inside && !vert_id.count(*t)) {
          vert_id[*t] = static_cast<int>(verts.size());
          verts.push_back(*t);
        }
      }
      int a = 0;
      while (a < m) {
        if (++off[a] <= hi[a]) break;
        off[a] = lo[a];
        ++a;
      }
      if (a == m) break;
    }
  };
  std::vector<int> comb(m);
  auto rec = [&](auto&& self, int start, int depth) -> void {
    if (depth == m) {
      run_subset(comb);
      return;
    }
    for (int i = start; i <= n - (m - depth); ++i) {
      comb[depth] = i;
      self(self, i + 1, depth + 1);
    }
  };
  rec(rec, 0, 0);

  // --- cells: the star of every vertex, found by sign vectors over its
  // on-rows. The feasible sign vectors depend only on the on-row set, so
  // they are cached across vertices.
  std::map<CellKey, WCell> found;
  std::map<std::vector<int>, std::vector<LocalCell>> star_cache;
  for (const RatVec& v : verts) {
    CellKey vkey = classify(wc, v);
    std::vector<int> on = on_rows(vkey);
    WCell vc;
    vc.dim = 0;
    vc.key = vkey;
    vc.rep = v;
    found.emplace(vkey, vc);

    auto it = star_cache.find(on);
    if (it == star_cache.end()) {
      std::vector<LocalCell> local;
      int count = 1;
      for (size_t a = 0; a < on.size(); ++a) count *= 3;
      for (int code = 1; code < count; ++code) {
        std::vector<int> sigma(on.size());
        int c = code;
        for (size_t a = 0; a < on.size(); ++a) {
          int digit = c % 3;
          c /= 3;
          sigma[a] = digit == 2 ? -1 : digit;
        }
        std::vector<LinCon> cons;
        for (size_t a = 0; a < on.size(); ++a) {
          RatVec row(m);
          for (int j = 0; j < m; ++j) row[j] = Rat(B.at(on[a], j));
          if (sigma[a] == 0) {
            cons.push_back({row, Rel::EQ, Rat(0)});
          } else {
            if (sigma[a] < 0)
              for (int j = 0; j < m; ++j) row[j] = -row[j];
            cons.push_back({row, Rel::GT, Rat(0)});
          }
        }
        auto d = feasible_point(m, cons);
        if (d) local.push_back({sigma, *d});
      }
      it = star_cache.emplace(on, std::move(local)).first;
    }

    for (const LocalCell& lc : it->second) {
      // Largest step along dir before any hyperplane beyond the vertex's own
      // pencil is crossed; half of it keeps the point strictly interior.
      std::optional<Rat> lambda;
      for (int i = 0; i < n; ++i) {
        Rat c = vec_dot(B.row(i), lc.dir);
        if (c == 0) continue;
        Rat a = wc.alpha(i, v);
        Rat dist;
        if (is_integer(a))
          dist = Rat(1);
        else
          dist = c > 0 ? Rat(floor_rat(a) + 1) - a : a - Rat(floor_rat(a));
        Rat cand = dist / abs(c);
        if (!lambda || cand < *lambda) lambda = cand;
      }
      if (!lambda) continue;  // dir == 0 cannot happen for nonzero sigma
      Rat step = *lambda / 2;
      RatVec p(m);
      for (int j = 0; j < m; ++j) p[j] = v[j] + step * lc.dir[j];
      CellKey key = classify(wc, p);
      if (found.count(key)) continue;
      WCell cell;
      cell.key = key;
      cell.dim = m - rank_of(rows_of(B, on_rows(key)));
      cell.rep = p;
      found.emplace(key, cell);
      if (found.size() > 500000)
        throw resource_error("[E_ENUM_BLOWUP] cell enumeration exceeded 5e5 cells");
    }
  }

  // --- canonical order, then closure structure.
  wc.cells.reserve(found.size());
  for (auto& [key, cell] : found) wc.cells.push_back(std::move(cell));
  std::stable_sort(wc.cells.begin(), wc.cells.end(), [](const WCell& a, const WCell& b) {
    if (a.dim != b.dim) return a.dim < b.dim;
    return a.key < b.key;
  });
  for (size_t i = 0; i < wc.cells.size(); ++i) wc.by_key[wc.cells[i].key] = static_cast<int>(i);

  std::vector<int> vertex_ids;
  for (size_t i = 0; i < wc.cells.size(); ++i)
    if (wc.cells[i].dim == 0) vertex_ids.push_back(static_cast<int>(i));
  for (size_t i = 0; i < wc.cells.size(); ++i) {
    WCell& c = wc.cells[i];
    if (c.dim == 0) {
      c.closure_verts = {static_cast<int>(i)};
      continue;
    }
    for (int vid : vertex_ids)
      if (in_closure(c.key, wc.cells[vid].key)) c.closure_verts.push_back(vid);
    if (c.closure_verts.empty()) throw verify_error("[E_ENUM] bounded cell with no vertices");
  }

  // --- kept flag: the closed cell meets the window box.
  wc.kept_by_dim.assign(m + 1, {});
  for (size_t i = 0; i < wc.cells.size(); ++i) {
    WCell& c = wc.cells[i];
    if (c.dim == 0) {
      c.kept = true;
      for (int j = 0; j < m; ++j)
        if (abs(c.rep[j]) > Rat(spec.window)) c.kept = false;
    } else {
      std::vector<LinCon> cons;
      for (int f = 0; f < n; ++f) {
        RatVec row(m);
        for (int j = 0; j < m; ++j) row[j] = Rat(B.at(f, j));
        Rat base = Rat(c.key.offset[f]) - spec.epsilon[f];
        if (c.key.on[f]) {
          cons.push_back({row, Rel::EQ, base});
        } else {
          cons.push_back({row, Rel::GE, base});
          RatVec neg(m);
          for (int j = 0; j < m; ++j) neg[j] = -row[j];
          cons.push_back({neg, Rel::GE, -(base + 1)});
        }
      }
      for (int j = 0; j < m; ++j) {
        RatVec a(m, Rat(0));
        a[j] = Rat(1);
        cons.push_back({a, Rel::GE, Rat(-spec.window)});
        a[j] = Rat(-1);
        cons.push_back({a, Rel::GE, Rat(-spec.window)});
      }
      c.kept = feasible_point(m, cons).has_value();
    }
    if (c.kept) wc.kept_by_dim[c.dim].push_back(static_cast<int>(i));
  }

  // Kept cells get the canonical interior point: the barycenter of their
  // closure vertices (translation-equivariant, hence orbit-consistent).
  for (WCell& c : wc.cells) {
    if (!c.kept || c.dim == 0) continue;
    RatVec bary(m, Rat(0));
    for (int vid : c.closure_verts)
      for (int j = 0; j < m; ++j) bary[j] += wc.cells[vid].rep[j];
    Rat inv(1, static_cast<unsigned long>(c.closure_verts.size()));
    for (int j = 0; j < m; ++j) bary[j] *= inv;
    c.rep = bary;
  }

  monomial_labels(wc);
  return wc;
}

void monomial_labels(WindowedComplex& wc) {
  for (WCell& c : wc.cells) {
    if (c.dim != 0) continue;
    IntVec u(wc.n);
    for (int i = 0; i < wc.n; ++i) u[i] = floor_rat(wc.alpha(i, c.rep));
    c.label.assign(2 * wc.n, Int(0));
    for (int i = 0; i < wc.n; ++i) {
      c.label[i] = u[i];
      c.label[wc.n + i] = -u[i];
    }
  }
  for (WCell& c : wc.cells) {
    if (c.dim == 0 || !c.kept) continue;
    IntVec lab = wc.cells[c.closure_verts[0]].label;
    for (size_t a = 1; a < c.closure_verts.size(); ++a)
      lab = vec_max(lab, wc.cells[c.closure_verts[a]].label);
    c.label = lab;
  }
}

TransversalityReport check_transversality(const WindowedComplex& wc) {
  TransversalityReport rep;
  for (int id : wc.kept_by_dim[0]) {
    const WCell& v = wc.cells[id];
    if (static_cast<int>(on_rows(v.key).size()) != wc.m) rep.witnesses.push_back(v.rep);
  }
  rep.ok = rep.witnesses.empty();
  return rep;
}

bool vertices_equal_lattice(const WindowedComplex& wc) {
  for (const Rat& e : wc.spec.epsilon)
    if (e != 0)
      throw input_error("[E_EPS_NONZERO] vertex-lattice comparison requires zero deformation");
  for (int id : wc.kept_by_dim[0])
    for (const Rat& x : wc.cells[id].rep)
      if (!is_integer(x)) return false;
  return true;
}

std::vector<std::pair<int, int>> facets_with_signs(const WindowedComplex& wc, int cell,
                                                   bool* hit_window_edge) {
  const WCell& F = wc.cells[cell];
  std::vector<std::pair<int, int>> out;
  if (F.dim == 0) return out;
  for (size_t wid = 0; wid < wc.cells.size(); ++wid) {
    const WCell& Fp = wc.cells[wid];
    if (Fp.dim != F.dim - 1 || !in_closure(F.key, Fp.key)) continue;
    if (!Fp.kept) {
      if (hit_window_edge) {
        *hit_window_edge = true;
        continue;
      }
      throw resource_error("[E_WINDOW] window radius too small: facet " + vec_str(Fp.rep) +
                           " of cell " + vec_str(F.rep) + " fell outside the window");
    }
    out.emplace_back(static_cast<int>(wid), incidence_sign(wc.spec.B, F, Fp));
  }
  return out;
}

IntVec orbit_translation(const RatVec& p, const Lattice& lambda) {
  int m = lambda.ambient;
  const IntMat& H = lambda.basis;
  RatMat Hinv = inverse(RatMat::from_int(H));
  RatVec s(m, Rat(0));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) s[i] += Hinv.at(i, j) * p[j];
  IntVec w(m, Int(0));
  for (int i = 0; i < m; ++i) {
    Int f = floor_rat(s[i] + Rat(1, 2));
    for (int j = 0; j < m; ++j) w[j] += H.at(j, i) * f;
  }
  return w;
}

const QuotientCell* QuotientComplex::find(const CellKey& k) const {
  auto it = by_key.find(k);
  return it == by_key.end() ? nullptr : &cells[it->second];
}

QuotientComplex quotient_complex(const WindowedComplex& wc, const Lattice& lambda) {
  if (lambda.ambient != wc.m || lambda.rank() != wc.m)
    throw input_error("[E_LATTICE_RANK] translation lattice must have full rank in Z^m");
  QuotientComplex qc;
  qc.spec = wc.spec;
  qc.translation = lambda;
  qc.n = wc.n;
  qc.m = wc.m;
  // wid -> (canonical qc id, shift), built in two passes.
  std::vector<IntVec> wshift(wc.cells.size());
  std::vector<int> orbit_of(wc.cells.size(), -1);
  std::vector<int> canon_wid;
  for (size_t wid = 0; wid < wc.cells.size(); ++wid) {
    const WCell& c = wc.cells[wid];
    if (!c.kept) continue;
    IntVec w = orbit_translation(c.rep, lambda);
    wshift[wid] = w;
    if (vec_is_zero(w)) canon_wid.push_back(static_cast<int>(wid));
  }
  qc.f_vector.assign(wc.m + 1, 0);
  for (int wid : canon_wid) {
    const WCell& c = wc.cells[wid];
    QuotientCell q;
    q.id = static_cast<int>(qc.cells.size());
    q.dim = c.dim;
    q.key = c.key;
    q.rep = c.rep;
    q.label = c.label;
    qc.by_key[q.key] = q.id;
    qc.cells.push_back(std::move(q));
    qc.f_vector[c.dim] += 1;
  }
  for (size_t wid = 0; wid < wc.cells.size(); ++wid) {
    const WCell& c = wc.cells[wid];
    if (!c.kept) continue;
    CellKey ckey = shift_key(c.key, wc.spec.B, vec_neg(wshift[wid]));
    auto it = qc.by_key.find(ckey);
    if (it == qc.by_key.end())
      throw resource_error("[E_WINDOW] window radius too small: orbit of cell " +
                           vec_str(c.rep) + " has no canonical representative inside the window");
    orbit_of[wid] = it->second;
  }

  // Incidence: every facet of a canonical cell, resolved to the facet's
  // canonical orbit plus the connecting translation.
  for (const QuotientCell& q : qc.cells) {
    if (q.dim == 0) continue;
    for (auto [wid, sgn] : facets_with_signs(wc, wc.by_key.at(q.key))) {
      QuotientIncidence inc;
      inc.from = q.id;
      inc.to = orbit_of[wid];
      inc.sign = sgn;
      inc.shift = wshift[wid];
      // A facet label must divide the cell label after unshifting.
      const QuotientCell& t = qc.cells[inc.to];
      IntVec shifted = t.label;
      for (int i = 0; i < wc.n; ++i) {
        Int d = vec_dot(wc.spec.B.row(i), inc.shift);
        shifted[i] += d;
        shifted[wc.n + i] -= d;
      }
      if (!vec_leq(shifted, q.label))
        throw verify_error("[E_LABEL_DIV] facet label does not divide cell label");
      qc.incidence.push_back(std::move(inc));
    }
  }
  std::sort(qc.incidence.begin(), qc.incidence.end(),
            [](const QuotientIncidence& a, const QuotientIncidence& b) {
              if (a.from != b.from) return a.from < b.from;
              if (a.to != b.to) return a.to < b.to;
              return IntVecLess()(a.shift, b.shift);
            });
  return qc;
}

CoveringMap covering_map(const QuotientComplex& fine, const QuotientComplex& coarse) {
  if (!(fine.spec.B == coarse.spec.B) || fine.spec.epsilon != coarse.spec.epsilon)
    throw input_error("[E_COVERING_SPEC] quotients come from different arrangements");
  if (!(coarse.translation.basis == IntMat::identity(coarse.m)))
    throw input_error("[E_COVERING_SPEC] coarse quotient must be modulo Z^m");
  CoveringMap cm;
  cm.degree = abs(det_int(fine.translation.basis));
  cm.image.resize(fine.cells.size());
  cm.shift.resize(fine.cells.size());
  std::map<int, int> preimages;
  for (const QuotientCell& f : fine.cells) {
    IntVec w(fine.m);
    for (int j = 0; j < fine.m; ++j) w[j] = floor_rat(f.rep[j] + Rat(1, 2));
    CellKey ckey = shift_key(f.key, fine.spec.B, vec_neg(w));
    const QuotientCell* c = coarse.find(ckey);
    if (!c || c->dim != f.dim)
      throw verify_error("[E_COVERING] fine cell " + vec_str(f.rep) +
                         " has no coarse image");
    IntVec expect = c->label;
    for (int i = 0; i < fine.n; ++i) {
      Int d = vec_dot(fine.spec.B.row(i), w);
      expect[i] += d;
      expect[fine.n + i] -= d;
    }
    if (expect != f.label)
      throw verify_error("[E_COVERING] label mismatch over coarse cell " + vec_str(c->rep));
    cm.image[f.id] = c->id;
    cm.shift[f.id] = w;
    preimages[c->id] += 1;
  }
  if (static_cast<int>(preimages.size()) != static_cast<int>(coarse.cells.size()))
    throw verify_error("[E_COVERING] covering map is not surjective");
  for (const auto& [cid, cnt] : preimages)
    if (Int(cnt) != cm.degree)
      throw verify_error("[E_COVERING] coarse cell " + std::to_string(cid) + " has " +
                         std::to_string(cnt) + " preimages, expected " + cm.degree.get_str());
  // Incidence commutes: each fine boundary entry maps onto a coarse one.
  std::set<std::pair<std::pair<int, int>, std::pair<int, IntVec>>> coarse_inc;
  for (const QuotientIncidence& i : coarse.incidence)
    coarse_inc.insert({{i.from, i.to}, {i.sign, i.shift}});
  for (const QuotientIncidence& i : fine.incidence) {
    IntVec w = vec_add(cm.shift[i.to], vec_sub(i.shift, cm.shift[i.from]));
    if (!coarse_inc.count({{cm.image[i.from], cm.image[i.to]}, {i.sign, w}}))
      throw verify_error("[E_COVERING] incidence does not commute with the covering");
  }
  return cm;
}

bool epsilon_stability_check(const ArrangementSpec& spec, const Lattice& lambda) {
  auto fingerprint = [&](const ArrangementSpec& s) {
    QuotientComplex qc = quotient_complex(build_arrangement(s), lambda);
    std::vector<std::pair<int, std::vector<bool>>> pat;
    for (const QuotientCell& c : qc.cells) pat.push_back({c.dim, c.key.on});
    std::sort(pat.begin(), pat.end());
    return std::make_pair(qc.f_vector, pat);
  };
  ArrangementSpec half = spec;
  for (Rat& e : half.epsilon) e /= 2;
  return fingerprint(spec) == fingerprint(half);
}

Json quotient_to_json(const QuotientComplex& qc) {
  Json j;
  j["m"] = qc.m;
  j["n"] = qc.n;
  Json spec;
  spec["matrix"] = mat_to_json(qc.spec.B);
  Json eps = Json::array();
  for (const Rat& e : qc.spec.epsilon) eps.push_back(rat_to_json(e));
  spec["epsilon"] = eps;
  spec["window"] = int_to_json(qc.spec.window);
  j["spec"] = spec;
  j["translation_lattice"] = mat_to_json(qc.translation.basis);
  Json cells = Json::array();
  for (const QuotientCell& c : qc.cells) {
    Json jc;
    jc["id"] = c.id;
    jc["dim"] = c.dim;
    Json offs = Json::array(), on = Json::array();
    for (size_t i = 0; i < c.key.offset.size(); ++i) {
      offs.push_back(int_to_json(c.key.offset[i]));
      on.push_back(static_cast<bool>(c.key.on[i]));
    }
    jc["offsets"] = offs;
    jc["on"] = on;
    jc["rep"] = ratvec_to_json(c.rep);
    jc["label"] = intvec_to_json(c.label);
    cells.push_back(jc);
  }
  j["cells"] = cells;
  Json inc = Json::array();
  for (const QuotientIncidence& i : qc.incidence)
    inc.push_back(Json::array({i.from, i.to, i.sign, intvec_to_json(i.shift)}));
  j["incidence"] = inc;
  j["f_vector"] = qc.f_vector;
  return j;
}

}  // namespace cellres
