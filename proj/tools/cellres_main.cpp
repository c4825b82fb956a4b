// Command-line front end. Every command prints one JSON document on stdout;
// artifact-producing commands also honor --out. Exit codes: 0 ok, 2 a
// verification answered "no", 3 bad input, 4 resource bound hit.

#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cellres/pipeline.hpp"

namespace {

cellres::RatVec parse_eps(const std::vector<std::string>& toks) {
  cellres::RatVec out;
  for (const std::string& t : toks) out.push_back(cellres::rat_from_json(cellres::Json(t)));
  return out;
}

std::vector<cellres::Int> to_ints(const std::vector<long>& v) {
  std::vector<cellres::Int> out;
  for (long x : v) out.push_back(cellres::Int(x));
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  using cellres::JobSpec;

  CLI::App app{"cellular resolutions of toric diagonals"};
  app.require_subcommand(1);

  std::string out_path;
  long window = 0, kmax = 16;
  unsigned long seed = 0;
  std::vector<std::string> eps_toks;
  std::vector<long> group;
  app.add_option("--out", out_path, "write the JSON (or SVG for render) here too");
  app.add_option("--window", window, "arrangement half-width; 0 picks one");
  app.add_option("--kmax", kmax, "largest saturation power tried");
  app.add_option("--seed", seed, "recorded in randomized jobs");
  app.add_option("--epsilon", eps_toks, "per-ray deformations, rationals p/q")->delimiter(',');
  app.add_option("--group", group, "finite group invariant factors")->delimiter(',');

  std::string fan_file, complex_file;

  CLI::App* fan = app.add_subcommand("fan", "fan invariants");
  fan->require_subcommand(1);
  CLI::App* fan_check = fan->add_subcommand("check", "smoothness, unimodularity, class group");
  fan_check->add_option("file", fan_file, "fan JSON")->required();
  fan_check->fallthrough();

  CLI::App* arrangement = app.add_subcommand("arrangement", "periodic arrangement cells");
  arrangement->require_subcommand(1);
  CLI::App* arr_build = arrangement->add_subcommand("build", "quotient complex of the arrangement");
  arr_build->add_option("file", fan_file, "fan JSON")->required();
  arr_build->fallthrough();

  CLI::App* resolve = app.add_subcommand("resolve", "chain complex with graded twists");
  resolve->add_option("file", fan_file, "fan JSON")->required();
  resolve->fallthrough();

  CLI::App* verify = app.add_subcommand("verify", "re-check a stored complex");
  verify->require_subcommand(1);
  CLI::App* verify_d2 = verify->add_subcommand("d2", "composite differential vanishes");
  verify_d2->add_option("file", complex_file, "complex JSON")->required();
  verify_d2->fallthrough();
  CLI::App* verify_ex = verify->add_subcommand("exactness", "restricted-degree acyclicity");
  verify_ex->add_option("file", complex_file, "complex JSON")->required();
  verify_ex->fallthrough();

  CLI::App* cokernel = app.add_subcommand("cokernel", "augmentation cokernel and torsion powers");
  cokernel->add_option("file", fan_file, "fan JSON")->required();
  cokernel->fallthrough();

  std::vector<long> cech_weights, cech_twists;
  long cech_twist = 0;
  CLI::App* cech = app.add_subcommand("cech", "weighted projective line cohomology");
  cech->add_option("--weights", cech_weights, "the two weights a,b")->delimiter(',');
  cech->add_option("--twist", cech_twist, "twist degree n");
  cech->fallthrough();
  CLI::App* cech_exc = cech->add_subcommand("exceptional", "pairwise Ext vanishing for a run of twists");
  cech_exc->add_option("--twists", cech_twists, "increasing twist list")->delimiter(',');
  cech_exc->fallthrough();

  long morita_n = 1, morita_degree = 6;
  std::vector<long> morita_weights;
  CLI::App* morita = app.add_subcommand("morita-check", "skew algebra vs invariant module");
  morita->add_option("--n", morita_n, "coordinate count");
  morita->add_option("--degree", morita_degree, "truncation degree");
  morita->add_option("--weights", morita_weights, "row-major character matrix")->delimiter(',');
  morita->fallthrough();

  CLI::App* render = app.add_subcommand("render", "SVG picture of the quotient complex");
  render->add_option("file", fan_file, "fan JSON")->required();
  render->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 3;
  }

  JobSpec job;
  job.out = out_path;
  job.window = cellres::Int(window);
  job.kmax = kmax;
  job.seed = seed;
  job.epsilon = parse_eps(eps_toks);
  job.group = to_ints(group);
  job.wa = cech_weights.size() > 0 ? cech_weights[0] : 0;
  job.wb = cech_weights.size() > 1 ? cech_weights[1] : 0;
  job.twist = cech_twist;
  job.twists = cech_twists;
  job.n = morita_n;
  job.degree = morita_degree;
  job.morita_weights = morita_weights;

  if (fan_check->parsed()) {
    job.command = "fan-check";
    job.inputs = {fan_file};
  } else if (arr_build->parsed()) {
    job.command = "arrangement-build";
    job.inputs = {fan_file};
  } else if (resolve->parsed()) {
    job.command = "resolve";
    job.inputs = {fan_file};
  } else if (verify_d2->parsed()) {
    job.command = "verify-d2";
    job.inputs = {complex_file};
  } else if (verify_ex->parsed()) {
    job.command = "verify-exactness";
    job.inputs = {complex_file};
  } else if (cokernel->parsed()) {
    job.command = "cokernel";
    job.inputs = {fan_file};
  } else if (cech_exc->parsed()) {
    job.command = "cech-exceptional";
  } else if (cech->parsed()) {
    job.command = "cech";
  } else if (morita->parsed()) {
    job.command = "morita-check";
  } else if (render->parsed()) {
    job.command = "render";
    job.inputs = {fan_file};
  }

  try {
    cellres::RunResult res = cellres::run(job);
    std::cout << res.output.dump(2) << "\n";
    return res.exit_code;
  } catch (const cellres::input_error& e) {
    std::cout << cellres::Json{{"error", e.what()}}.dump(2) << "\n";
    return 3;
  } catch (const cellres::verify_error& e) {
    std::cout << cellres::Json{{"error", e.what()}}.dump(2) << "\n";
    return 2;
  } catch (const cellres::resource_error& e) {
    std::cout << cellres::Json{{"error", e.what()}}.dump(2) << "\n";
    return 4;
  } catch (const std::exception& e) {
    // schema mismatches inside artifact files land here
    std::cout << cellres::Json{{"error", e.what()}}.dump(2) << "\n";
    return 3;
  }
}
