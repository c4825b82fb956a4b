#include "cellres/resolution.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <queue>
#include <set>

#include "cellres/linineq.hpp"

namespace cellres {

namespace {

// Top homological degree actually populated.
int top_dim(const std::vector<int>& f) {
  int d = 0;
  for (size_t i = 0; i < f.size(); ++i)
    if (f[i] > 0) d = static_cast<int>(i);
  return d;
}

IntVec half(const IntVec& v, int from, int len) {
  return IntVec(v.begin() + from, v.begin() + from + len);
}

IntVec join_vec(const IntVec& a, const IntVec& b) { return vec_max(a, b); }

}  // namespace

ChainComplex cellular_differential(const QuotientComplex& qc) {
  ChainComplex cc;
  cc.nvars = 2 * qc.n;
  int D = top_dim(qc.f_vector);
  cc.summands.resize(D + 1);
  std::vector<int> pos(qc.cells.size(), -1);
  for (const QuotientCell& c : qc.cells) {
    if (c.dim > D) throw verify_error("[E_CHAIN] cell above the top dimension");
    pos[c.id] = static_cast<int>(cc.summands[c.dim].size());
    cc.summands[c.dim].push_back({c.id, c.label});
  }
  cc.diff.resize(D);
  for (int k = 0; k < D; ++k) {
    cc.diff[k].rows = static_cast<int>(cc.summands[k].size());
    cc.diff[k].cols = static_cast<int>(cc.summands[k + 1].size());
  }
  for (const QuotientIncidence& inc : qc.incidence) {
    const QuotientCell& F = qc.cells[inc.from];
    const QuotientCell& Fp = qc.cells[inc.to];
    SparseEntry e;
    e.row = pos[Fp.id];
    e.col = pos[F.id];
    e.sign = inc.sign;
    e.exp.resize(2 * qc.n);
    for (int i = 0; i < qc.n; ++i) {
      Int d = vec_dot(qc.spec.B.row(i), inc.shift);
      e.exp[i] = F.label[i] - Fp.label[i] - d;
      e.exp[qc.n + i] = F.label[qc.n + i] - Fp.label[qc.n + i] + d;
    }
    for (const Int& x : e.exp)
      if (x < 0) throw verify_error("[E_LABEL_DIV] differential entry with negative exponent");
    cc.diff[F.dim - 1].entries.push_back(std::move(e));
  }
  return cc;
}

std::vector<int> f_vector(const ChainComplex& cc) {
  std::vector<int> f;
  for (const auto& s : cc.summands) f.push_back(static_cast<int>(s.size()));
  return f;
}

bool verify_d_squared(const ChainComplex& cc) {
  for (size_t k = 0; k + 1 < cc.diff.size(); ++k) {
    const Differential& A = cc.diff[k];      // C_{k+1} -> C_k
    const Differential& B = cc.diff[k + 1];  // C_{k+2} -> C_{k+1}
    std::vector<std::vector<const SparseEntry*>> by_col(A.cols);
    for (const SparseEntry& e : A.entries) by_col[e.col].push_back(&e);
    std::map<std::pair<int, int>, std::map<IntVec, long, IntVecLess>> acc;
    for (const SparseEntry& e2 : B.entries)
      for (const SparseEntry* e1 : by_col[e2.row])
        acc[{e1->row, e2.col}][vec_add(e1->exp, e2.exp)] += e1->sign * e2.sign;
    for (const auto& [rc, terms] : acc)
      for (const auto& [exp, coef] : terms)
        if (coef != 0) return false;
  }
  return true;
}

bool minimality_lint(const ChainComplex& cc) {
  for (const Differential& d : cc.diff)
    for (const SparseEntry& e : d.entries)
      if (vec_is_zero(e.exp)) return false;
  return true;
}

namespace {

// The closure of every cell with label <= b lies in the closed region
// -b_y <= alpha_i(t) <= b_x + 1; the degree is checkable at window scale
// when that region sits inside the window box.
bool region_fits_window(const WindowedComplex& wc, const IntVec& b) {
  int n = wc.n, m = wc.m;
  std::vector<LinCon> cons;
  for (int i = 0; i < n; ++i) {
    RatVec row(m);
    for (int j = 0; j < m; ++j) row[j] = Rat(wc.spec.B.at(i, j));
    cons.push_back({row, Rel::GE, Rat(-b[n + i]) - wc.spec.epsilon[i]});
    RatVec neg(m);
    for (int j = 0; j < m; ++j) neg[j] = -row[j];
    cons.push_back({neg, Rel::GE, Rat(-(b[i] + 1)) + wc.spec.epsilon[i]});
  }
  for (int j = 0; j < m; ++j) {
    for (int s : {1, -1}) {
      std::vector<LinCon> outside = cons;
      RatVec a(m, Rat(0));
      a[j] = Rat(s);
      outside.push_back({a, Rel::GT, Rat(wc.spec.window)});
      if (feasible_point(m, outside)) return false;
    }
  }
  return true;
}

// Integer boundary matrices of the subcomplex spanned by `members`
// (windowed cell ids, closed under faces except for deleted orbits), with
// the augmentation row as bnd[0]. Entries are tiny: -1, 0, +1. `facs` is
// the precomputed in-complex facet table indexed by windowed cell id.
std::vector<std::vector<std::vector<long>>> restriction_boundaries(
    const WindowedComplex& wc, const std::vector<int>& members,
    const std::vector<std::vector<std::pair<int, int>>>& facs) {
  std::map<int, int> local;
  int D = 0;
  for (int wid : members) D = std::max(D, wc.cells[wid].dim);
  std::vector<std::vector<int>> by_dim(D + 1);
  for (int wid : members) {
    local[wid] = static_cast<int>(by_dim[wc.cells[wid].dim].size());
    by_dim[wc.cells[wid].dim].push_back(wid);
  }
  std::vector<std::vector<std::vector<long>>> bnd(D + 1);
  bnd[0].assign(1, std::vector<long>(by_dim[0].size(), 1));
  for (int d = 1; d <= D; ++d) {
    bnd[d].assign(by_dim[d - 1].size(), std::vector<long>(by_dim[d].size(), 0));
    for (int c = 0; c < static_cast<int>(by_dim[d].size()); ++c)
      for (auto [fid, sign] : facs[by_dim[d][c]]) {
        auto it = local.find(fid);
        if (it == local.end())
          throw verify_error("[E_RESTRICT] facet escaped the restriction subcomplex");
        bnd[d][it->second][c] += sign;
      }
  }
  return bnd;
}

constexpr unsigned long long kModP = (1ULL << 61) - 1;

unsigned long long mulmod(unsigned long long a, unsigned long long b) {
  return static_cast<unsigned long long>(static_cast<unsigned __int128>(a) * b % kModP);
}

unsigned long long powmod(unsigned long long a, unsigned long long e) {
  unsigned long long r = 1;
  for (; e; e >>= 1, a = mulmod(a, a))
    if (e & 1) r = mulmod(r, a);
  return r;
}

int rank_mod_p(std::vector<std::vector<unsigned long long>> M) {
  int rows = static_cast<int>(M.size());
  int cols = rows ? static_cast<int>(M[0].size()) : 0;
  int rank = 0;
  for (int c = 0; c < cols && rank < rows; ++c) {
    int piv = -1;
    for (int r = rank; r < rows; ++r)
      if (M[r][c]) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    std::swap(M[rank], M[piv]);
    unsigned long long inv = powmod(M[rank][c], kModP - 2);
    for (int r = rank + 1; r < rows; ++r) {
      if (!M[r][c]) continue;
      unsigned long long f = mulmod(M[r][c], inv);
      for (int j = c; j < cols; ++j)
        M[r][j] = (M[r][j] + kModP - mulmod(f, M[rank][j])) % kModP;
    }
    ++rank;
  }
  return rank;
}

enum class Homology { acyclic, disconnected, nonacyclic };

// Reduced rational homology of the restriction: `acyclic` when it all
// vanishes, `disconnected` when only extra components appear (reduced
// degree 0), `nonacyclic` otherwise. Ranks are taken mod a 61-bit prime:
// composite entries are integers far below the prime, so the square-zero
// test is exact, and a modular rank can only undercount, which keeps
// `acyclic` verdicts rigorous. `exact` recomputes ranks over Q instead and
// is the authority on everything else.
Homology restriction_homology(const WindowedComplex& wc, const std::vector<int>& members,
                              const std::vector<std::vector<std::pair<int, int>>>& facs,
                              bool exact) {
  if (members.empty()) return Homology::acyclic;
  auto bnd = restriction_boundaries(wc, members, facs);
  int D = static_cast<int>(bnd.size()) - 1;
  // A damaged complex can fail the square-zero identity; entry magnitudes
  // are bounded by the cell count, so this integer test is exact.
  for (int d = 0; d < D; ++d) {
    int rows = static_cast<int>(bnd[d].size());
    int mid = static_cast<int>(bnd[d + 1].size());
    int cols = mid ? static_cast<int>(bnd[d + 1][0].size()) : 0;
    for (int r = 0; r < rows; ++r)
      for (int c = 0; c < cols; ++c) {
        long s = 0;
        for (int k = 0; k < mid; ++k) s += bnd[d][r][k] * bnd[d + 1][k][c];
        if (s != 0) return Homology::nonacyclic;
      }
  }
  std::vector<int> dims(D + 1), r(D + 2, 0);
  for (int d = 0; d <= D; ++d) dims[d] = static_cast<int>(bnd[d][0].size());
  for (int d = 0; d <= D; ++d) {
    if (exact) {
      RatMat M(static_cast<int>(bnd[d].size()), dims[d]);
      for (int i = 0; i < M.rows; ++i)
        for (int j = 0; j < M.cols; ++j) M.at(i, j) = Rat(bnd[d][i][j]);
      r[d] = rank_of(M);
    } else {
      std::vector<std::vector<unsigned long long>> M(bnd[d].size(),
                                                     std::vector<unsigned long long>(dims[d]));
      for (size_t i = 0; i < bnd[d].size(); ++i)
        for (int j = 0; j < dims[d]; ++j)
          M[i][j] = bnd[d][i][j] >= 0 ? bnd[d][i][j] : kModP + bnd[d][i][j];
      r[d] = rank_mod_p(std::move(M));
    }
  }
  for (int d = 1; d <= D; ++d)
    if (dims[d] - r[d] - r[d + 1] != 0) return Homology::nonacyclic;
  if (dims[0] - r[0] - r[1] != 0) return Homology::disconnected;
  return Homology::acyclic;
}

// An interior point of the support region of degree b, or nothing when the
// region is empty.
std::optional<RatVec> region_point(const WindowedComplex& wc, const IntVec& b) {
  int n = wc.n, m = wc.m;
  std::vector<LinCon> cons;
  for (int i = 0; i < n; ++i) {
    RatVec row(m);
    for (int j = 0; j < m; ++j) row[j] = Rat(wc.spec.B.at(i, j));
    cons.push_back({row, Rel::GE, Rat(-b[n + i]) - wc.spec.epsilon[i]});
    RatVec neg(m);
    for (int j = 0; j < m; ++j) neg[j] = -row[j];
    cons.push_back({neg, Rel::GE, Rat(-(b[i] + 1)) + wc.spec.epsilon[i]});
  }
  return feasible_point(m, cons);
}

}  // namespace

ExactnessReport exactness_certificate(const WindowedComplex& wc, const QuotientComplex& qc,
                                      const std::vector<IntVec>* degrees) {
  if (!(qc.spec.B == wc.spec.B) || qc.spec.epsilon != wc.spec.epsilon)
    throw input_error("[E_SPEC_MISMATCH] quotient and window come from different arrangements");
  // Orbit membership: cells whose canonical representative is absent count
  // as deleted from the complex.
  std::vector<char> in_complex(wc.cells.size(), 0);
  std::vector<int> live;
  for (size_t wid = 0; wid < wc.cells.size(); ++wid) {
    const WCell& c = wc.cells[wid];
    if (!c.kept) continue;
    IntVec w = orbit_translation(c.rep, qc.translation);
    const QuotientCell* q = qc.find(shift_key(c.key, wc.spec.B, vec_neg(w)));
    if (q && q->dim == c.dim) {
      in_complex[wid] = 1;
      live.push_back(static_cast<int>(wid));
    }
  }
  // In-complex facet lists, computed once; per-restriction boundary
  // assembly only has to localize them. Cells missing a facet to the
  // window edge are flagged; a fitting restriction never reaches them.
  std::vector<std::vector<std::pair<int, int>>> facs(wc.cells.size());
  std::vector<char> edge_of_window(wc.cells.size(), 0);
  for (int wid : live) {
    bool hit = false;
    for (auto [fid, sign] : facets_with_signs(wc, wid, &hit))
      if (in_complex[fid]) facs[wid].emplace_back(fid, sign);
    if (hit) edge_of_window[wid] = 1;
  }

  // Degrees differing by a lattice translation restrict to translated
  // subcomplexes with identical homology, so each candidate is normalized
  // by the translation that carries a point of its support region into
  // the fundamental domain.
  int n = wc.n;
  auto canon = [&](const IntVec& b) {
    auto p = region_point(wc, b);
    if (!p) return b;
    IntVec u = orbit_translation(*p, qc.translation);
    if (vec_is_zero(u)) return b;
    IntVec out = b;
    for (int i = 0; i < n; ++i) {
      Int s(0);
      for (int j = 0; j < wc.m; ++j) s += wc.spec.B.at(i, j) * u[j];
      out[i] -= s;
      out[n + i] += s;
    }
    return out;
  };

  // A cell's label is the join of its closure-vertex labels, so the
  // restriction to label <= b is induced by the vertex downset
  // {v : label_v <= b} and its homology changes only at joins of vertex
  // labels; those joins, one per translation class, are the candidates.
  ExactnessReport rep;
  std::set<IntVec, IntVecLess> seen_raw;
  std::set<IntVec, IntVecLess> seen;
  std::vector<IntVec> accepted;
  std::queue<IntVec> work;
  auto offer = [&](const IntVec& raw, bool normalize) {
    if (!seen_raw.insert(raw).second) return;
    if (seen_raw.size() > 200000)
      throw resource_error("[E_JOIN_BLOWUP] label join closure exceeded 2e5 degrees");
    IntVec b = normalize ? canon(raw) : raw;
    if (!seen.insert(b).second) return;
    if (region_fits_window(wc, b)) {
      accepted.push_back(b);
      work.push(b);
    } else {
      rep.skipped_window += 1;
    }
  };
  std::vector<int> kept_verts;
  for (size_t wid = 0; wid < wc.cells.size(); ++wid)
    if (wc.cells[wid].kept && wc.cells[wid].dim == 0) kept_verts.push_back(static_cast<int>(wid));
  std::vector<IntVec> seeds;
  {
    std::set<IntVec, IntVecLess> dedup;
    for (int wid : kept_verts)
      if (dedup.insert(wc.cells[wid].label).second) seeds.push_back(wc.cells[wid].label);
  }
  if (degrees) {
    for (const IntVec& b : *degrees) offer(b, false);
    while (!work.empty()) work.pop();  // explicit list: no closure
  } else {
    for (const IntVec& s : seeds) offer(s, true);
    while (!work.empty()) {
      IntVec b = work.front();
      work.pop();
      for (const IntVec& s : seeds) {
        IntVec j = join_vec(b, s);
        if (!(j == b)) offer(j, true);
      }
    }
  }
  rep.candidates = static_cast<long>(seen.size());

  // An undeformed complex must restrict to contractible pieces, so extra
  // components fail it; a deformed one is only required to be exact in
  // positive degrees, and splittings are reported informationally.
  bool deformed = false;
  for (const Rat& e : wc.spec.epsilon)
    if (e != 0) deformed = true;

  std::vector<char> in_downset(wc.cells.size(), 0);
  std::map<std::vector<int>, Homology> memo;
  for (const IntVec& b : accepted) {
    std::vector<int> verts;
    for (int wid : kept_verts)
      if (vec_leq(wc.cells[wid].label, b)) {
        verts.push_back(wid);
        in_downset[wid] = 1;
      }
    rep.checked += 1;
    auto it = memo.find(verts);
    Homology h;
    bool fresh = it == memo.end();
    if (!fresh) {
      h = it->second;
    } else {
      std::vector<int> members;
      for (int wid : live) {
        bool all = true;
        for (int v : wc.cells[wid].closure_verts)
          if (!in_downset[v]) {
            all = false;
            break;
          }
        if (!all) continue;
        if (edge_of_window[wid])
          throw resource_error("[E_WINDOW] window radius too small: restriction at degree " +
                               vec_str(b) + " reaches the window edge");
        members.push_back(wid);
      }
      h = restriction_homology(wc, members, facs, false);
      // Modular ranks can only undercount; an exact pass settles anything
      // short of a clean acyclicity verdict.
      if (h != Homology::acyclic) h = restriction_homology(wc, members, facs, true);
    }
    for (int wid : verts) in_downset[wid] = 0;
    if (fresh) memo.emplace(std::move(verts), h);
    if (h == Homology::nonacyclic || (h == Homology::disconnected && !deformed))
      rep.nonacyclic.push_back(b);
    else if (h == Homology::disconnected)
      rep.disconnected.push_back(b);
  }
  return rep;
}

void graded_twists(ChainComplex& cc, const CokernelPresentation& pres) {
  int n = cc.nvars / 2;
  cc.twists.assign(cc.summands.size(), {});
  for (size_t d = 0; d < cc.summands.size(); ++d)
    for (const ChainSummand& s : cc.summands[d])
      cc.twists[d].push_back({pres.degree(half(s.label, 0, n)), pres.degree(half(s.label, n, n))});
  for (size_t k = 0; k < cc.diff.size(); ++k)
    for (const SparseEntry& e : cc.diff[k].entries) {
      const ChainSummand& from = cc.summands[k + 1][e.col];
      const ChainSummand& to = cc.summands[k][e.row];
      Twist expect{pres.degree(vec_add(half(to.label, 0, n), half(e.exp, 0, n))),
                   pres.degree(vec_add(half(to.label, n, n), half(e.exp, n, n)))};
      if (!(cc.twists[k + 1][e.col] == expect))
        throw verify_error("[E_DEGREE] differential entry is not degree-preserving");
      (void)from;
    }
}

Json chain_to_json(const ChainComplex& cc) {
  Json j;
  j["ranks"] = f_vector(cc);
  j["differentials"] = Json::array();
  for (const Differential& d : cc.diff) {
    Json jd;
    jd["rows"] = d.rows;
    jd["cols"] = d.cols;
    jd["entries"] = Json::array();
    for (const SparseEntry& e : d.entries) {
      Json je;
      je["i"] = e.row;
      je["j"] = e.col;
      je["sign"] = e.sign;
      je["exp"] = intvec_to_json(e.exp);
      jd["entries"].push_back(std::move(je));
    }
    j["differentials"].push_back(std::move(jd));
  }
  j["labels"] = Json::array();
  for (const auto& deg : cc.summands) {
    Json row = Json::array();
    for (const ChainSummand& s : deg) row.push_back(intvec_to_json(s.label));
    j["labels"].push_back(std::move(row));
  }
  j["twists"] = Json::array();
  for (const auto& deg : cc.twists) {
    Json row = Json::array();
    for (const Twist& t : deg)
      row.push_back(Json{{"x", intvec_to_json(t.x)}, {"y", intvec_to_json(t.y)}});
    j["twists"].push_back(std::move(row));
  }
  return j;
}

ChainComplex chain_from_json(const Json& j) {
  ChainComplex cc;
  std::vector<int> ranks = j.at("ranks").get<std::vector<int>>();
  cc.summands.resize(ranks.size());
  for (size_t d = 0; d < ranks.size(); ++d) cc.summands[d].resize(ranks[d]);
  if (j.contains("labels"))
    for (size_t d = 0; d < j["labels"].size() && d < cc.summands.size(); ++d)
      for (size_t i = 0; i < j["labels"][d].size(); ++i) {
        cc.summands[d][i].label = intvec_from_json(j["labels"][d][i]);
        cc.nvars = static_cast<int>(cc.summands[d][i].label.size());
      }
  for (const Json& jd : j.at("differentials")) {
    Differential d;
    d.rows = jd.at("rows").get<int>();
    d.cols = jd.at("cols").get<int>();
    for (const Json& je : jd.at("entries")) {
      SparseEntry e;
      e.row = je.at("i").get<int>();
      e.col = je.at("j").get<int>();
      e.sign = je.at("sign").get<int>();
      e.exp = intvec_from_json(je.at("exp"));
      cc.nvars = static_cast<int>(e.exp.size());
      d.entries.push_back(std::move(e));
    }
    cc.diff.push_back(std::move(d));
  }
  if (j.contains("twists"))
    for (size_t d = 0; d < j["twists"].size(); ++d) {
      std::vector<Twist> row;
      for (const Json& jt : j["twists"][d])
        row.push_back({intvec_from_json(jt.at("x")), intvec_from_json(jt.at("y"))});
      if (!row.empty()) {
        cc.twists.resize(cc.summands.size());
        cc.twists[d] = std::move(row);
      }
    }
  return cc;
}

}  // namespace cellres
