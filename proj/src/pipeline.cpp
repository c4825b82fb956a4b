#include "cellres/pipeline.hpp"

#include <algorithm>

#include "cellres/cech.hpp"
#include "cellres/diagonal.hpp"
#include "cellres/monomial.hpp"
#include "cellres/morita.hpp"
#include "cellres/render.hpp"

namespace cellres {

namespace {

Int max_abs_entry(const IntMat& A) {
  Int m(0);
  for (const Int& v : A.a) m = std::max(m, Int(abs(v)));
  return m;
}

Fan load_fan(const JobSpec& job) {
  if (job.inputs.size() != 1)
    throw input_error("[E_JOB_INPUT] this command needs exactly one fan file");
  return fan_from_json(load_json_file(job.inputs[0]));
}

Json intvec_list(const std::vector<IntVec>& vs) {
  Json out = Json::array();
  for (const IntVec& v : vs) out.push_back(intvec_to_json(v));
  return out;
}

}  // namespace

Lattice translation_lattice(int m, const std::vector<Int>& group) {
  if (static_cast<int>(group.size()) > m)
    throw input_error("[E_GROUP_RANK] more invariant factors than lattice coordinates");
  IntMat D = IntMat::identity(m);
  for (size_t i = 0; i < group.size(); ++i) {
    if (group[i] < 1) throw input_error("[E_GROUP_FACTOR] invariant factors must be positive");
    D.at(static_cast<int>(i), static_cast<int>(i)) = group[i];
  }
  return lattice_from_generators(m, D);
}

ResolveResult build_quotient(const Fan& f, const ResolveOptions& opt) {
  int m = f.dim, n = f.nrays();
  RatVec eps = opt.epsilon.empty() ? RatVec(n, Rat(0)) : opt.epsilon;
  if (static_cast<int>(eps.size()) != n)
    throw input_error("[E_EPS_SHAPE] epsilon needs one entry per ray");

  ResolveResult rr;
  rr.translation = translation_lattice(m, opt.group);

  std::vector<Int> windows;
  if (opt.window != 0) {
    windows = {opt.window};
  } else {
    Int s = max_abs_entry(rr.translation.basis) + 2;
    if (s < 3) s = 3;
    windows = {s, s + 2, s * 2};
  }
  for (size_t wi = 0; wi < windows.size(); ++wi) {
    try {
      rr.spec = {f.rays, eps, windows[wi]};
      rr.wc = build_arrangement(rr.spec);
      rr.qc = quotient_complex(rr.wc, rr.translation);
      break;
    } catch (const resource_error&) {
      if (wi + 1 == windows.size()) throw;
    }
  }

  bool undeformed = true;
  for (const Rat& e : eps)
    if (e != 0) undeformed = false;
  rr.vertices_integral = undeformed && vertices_equal_lattice(rr.wc);
  rr.transversality = check_transversality(rr.wc);
  if (!rr.vertices_integral && !rr.transversality.ok)
    throw verify_error(
        "[E_VERTEX_GATE] vertices are neither integral nor transversal; pick a generic epsilon");
  return rr;
}

ChainComplex chain_with_twists(const ResolveResult& rr) {
  ChainComplex cc = cellular_differential(rr.qc);
  graded_twists(cc, cokernel_presentation(rr.spec.B.mul(rr.translation.basis)));
  return cc;
}

Json resolve_to_json(const ResolveResult& rr, const ChainComplex& cc) {
  Json j = chain_to_json(cc);
  Json arr;
  arr["matrix"] = mat_to_json(rr.spec.B);
  Json eps = Json::array();
  for (const Rat& e : rr.spec.epsilon) eps.push_back(rat_to_json(e));
  arr["epsilon"] = eps;
  arr["window"] = int_to_json(rr.spec.window);
  arr["translation_lattice"] = mat_to_json(rr.translation.basis);
  j["arrangement"] = arr;
  return j;
}

namespace {

RunResult run_fan_check(const JobSpec& job) {
  Fan f = load_fan(job);
  FanChecks fc = smooth_simplicial_complete_checks(f);
  Json j;
  j["smooth"] = fc.smooth;
  j["simplicial"] = fc.simplicial;
  j["complete"] = fc.complete ? Json(*fc.complete) : Json(nullptr);
  j["unimodular"] = is_unimodular_cols(f.rays);
  Json fano = Json::array();
  for (size_t s = 0; s < f.max_cones.size(); ++s) {
    if (static_cast<int>(f.max_cones[s].size()) != f.dim) {
      fano.push_back(nullptr);
      continue;
    }
    auto v = fano_support_vector(f, static_cast<int>(s));
    fano.push_back(v ? intvec_to_json(*v) : Json(nullptr));
  }
  j["fano_per_cone"] = fano;
  CokernelPresentation cg = class_group(f);
  Json moduli = Json::array();
  for (const Int& d : cg.moduli) moduli.push_back(int_to_json(d));
  j["class_group"] = Json{{"free_rank", cg.free_rank}, {"moduli", moduli}};
  j["I_empty"] = f.I_empty;
  return {0, j};
}

RunResult run_verify_exactness(const JobSpec& job) {
  if (job.inputs.size() != 1)
    throw input_error("[E_JOB_INPUT] this command needs exactly one complex file");
  Json j = load_json_file(job.inputs[0]);
  if (!j.contains("arrangement"))
    throw input_error("[E_JOB_INPUT] complex file lacks embedded arrangement data");
  const Json& arr = j["arrangement"];
  ArrangementSpec spec{mat_from_json(arr.at("matrix")), ratvec_from_json(arr.at("epsilon")),
                       int_from_json(arr.at("window"))};
  IntMat tbasis = mat_from_json(arr.at("translation_lattice"));
  WindowedComplex wc = build_arrangement(spec);
  QuotientComplex qc = quotient_complex(wc, lattice_from_generators(tbasis.rows, tbasis));
  ExactnessReport r = exactness_certificate(wc, qc);
  Json out;
  out["candidates"] = r.candidates;
  out["checked"] = r.checked;
  out["skipped_window"] = r.skipped_window;
  out["nonacyclic"] = intvec_list(r.nonacyclic);
  out["disconnected"] = intvec_list(r.disconnected);
  out["ok"] = r.ok();
  return {r.ok() ? 0 : 2, out};
}

RunResult run_cokernel(const JobSpec& job) {
  Fan f = load_fan(job);
  ResolveResult rr = build_quotient(f, {job.epsilon, job.group, job.window});
  Lattice L = lattice_from_generators(f.nrays(), rr.spec.B.mul(rr.translation.basis));
  std::vector<IntVec> extra = cokernel_extra_monomials(rr.qc, L);
  std::vector<IntVec> gens = irrelevant_ideal_product(f);

  Json out;
  Json ex = Json::array();
  for (const IntVec& e : extra)
    ex.push_back(Json{{"monomial", monomial_str(e, f.nrays())}, {"exponents", intvec_to_json(e)}});
  out["extra_monomials"] = ex;

  Json certs = Json::array(), failures = Json::array();
  for (const IntVec& e : extra) {
    TorsionCertificate tc = torsion_certificate(e, gens, L, job.kmax);
    Json jc;
    jc["monomial"] = monomial_str(e, f.nrays());
    jc["k"] = tc.k;
    jc["powers"] = tc.power;
    jc["degenerate"] = tc.degenerate;
    jc["exhausted"] = tc.exhausted;
    certs.push_back(jc);
    if (!tc.ok()) failures.push_back(monomial_str(e, f.nrays()));
  }
  out["certificates"] = certs;
  out["failures"] = failures;
  return {failures.empty() ? 0 : 2, out};
}

RunResult run_morita(const JobSpec& job) {
  FiniteAbelianGroup G;
  G.moduli = job.group;
  int k = static_cast<int>(G.moduli.size());
  int n = static_cast<int>(job.n);
  if (static_cast<int>(job.morita_weights.size()) != k * n)
    throw input_error("[E_JOB_INPUT] weights need one entry per group factor and coordinate");
  IntMat W(k, n);
  for (int i = 0; i < k; ++i)
    for (int c = 0; c < n; ++c) W.at(i, c) = Int(job.morita_weights[static_cast<size_t>(i) * n + c]);
  MoritaSetup ms = morita_setup(n, G, W);
  bool bij = bijection_check(ms, job.degree);
  bool act = action_compatibility(ms, job.degree);
  Json dims = Json::array();
  for (const auto& [deg, counts] : graded_dimensions(ms, job.degree))
    dims.push_back(Json{{"degree", intvec_to_json(deg)},
                        {"algebra", counts.first},
                        {"module", counts.second}});
  Json out{{"bijection", bij}, {"action_compat", act}, {"graded_dims", dims}};
  return {bij && act ? 0 : 2, out};
}

}  // namespace

RunResult run(const JobSpec& job) {
  RunResult res;
  if (job.command == "fan-check") {
    res = run_fan_check(job);
  } else if (job.command == "arrangement-build") {
    Fan f = load_fan(job);
    ResolveResult rr = build_quotient(f, {job.epsilon, job.group, job.window});
    res = {0, quotient_to_json(rr.qc)};
  } else if (job.command == "resolve") {
    Fan f = load_fan(job);
    ResolveResult rr = build_quotient(f, {job.epsilon, job.group, job.window});
    res = {0, resolve_to_json(rr, chain_with_twists(rr))};
  } else if (job.command == "verify-d2") {
    if (job.inputs.size() != 1)
      throw input_error("[E_JOB_INPUT] this command needs exactly one complex file");
    ChainComplex cc = chain_from_json(load_json_file(job.inputs[0]));
    bool ok = verify_d_squared(cc);
    res = {ok ? 0 : 2, Json{{"d_squared_zero", ok}}};
  } else if (job.command == "verify-exactness") {
    res = run_verify_exactness(job);
  } else if (job.command == "cokernel") {
    res = run_cokernel(job);
  } else if (job.command == "cech") {
    auto h = h_dims(job.wa, job.wb, job.twist);
    res = {0, Json{{"h0", h.first}, {"h1", h.second}}};
  } else if (job.command == "cech-exceptional") {
    ExcCollectionReport rep = exceptional_collection_check(job.wa, job.wb, job.twists);
    Json viols = Json::array();
    for (const ExtViolation& v : rep.violations)
      viols.push_back(Json{
          {"source", v.source}, {"target", v.target}, {"h0", v.h0}, {"h1", v.h1}});
    res = {rep.ok ? 0 : 2, Json{{"ok", rep.ok}, {"violations", viols}}};
  } else if (job.command == "morita-check") {
    res = run_morita(job);
  } else if (job.command == "render") {
    Fan f = load_fan(job);
    ResolveResult rr = build_quotient(f, {job.epsilon, job.group, job.window});
    std::string path = job.out.empty() ? "render.svg" : job.out;
    render_svg_file(rr.qc, path);
    res = {0, Json{{"out", path}, {"f_vector", rr.qc.f_vector}}};
  } else {
    throw input_error("[E_JOB_COMMAND] unknown command " + job.command);
  }
  if (!job.out.empty() && job.command != "render") write_json_file(job.out, res.output);
  return res;
}

}  // namespace cellres
