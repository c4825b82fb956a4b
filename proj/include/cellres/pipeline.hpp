#pragma once

// End-to-end jobs gluing the library together: fan file -> arrangement ->
// quotient complex -> chain complex, plus the dispatcher behind the
// command-line tool. Every job returns canonical JSON so repeated runs are
// byte-identical.

#include <string>
#include <vector>

#include "cellres/fan.hpp"
#include "cellres/resolution.hpp"

namespace cellres {

// Fine translation lattice for a quotient by the group with the given
// invariant factors: coordinate i is scaled by the i-th factor, so the
// quotient Z^m / lattice is the requested group under coordinate
// projection. Needs at most m factors.
Lattice translation_lattice(int m, const std::vector<Int>& group);

struct ResolveOptions {
  RatVec epsilon;          // empty = undeformed
  std::vector<Int> group;  // invariant factors; empty = quotient by Z^m
  Int window = 0;          // half-width; 0 picks one automatically
};

struct ResolveResult {
  ArrangementSpec spec;  // window filled with the value actually used
  Lattice translation;
  WindowedComplex wc;
  QuotientComplex qc;
  // The two vertex gates. An undeformed unimodular arrangement has
  // integral vertices; a deformed one must be transversal instead. The
  // build records both and requires at least one to hold.
  bool vertices_integral = false;
  TransversalityReport transversality;
};

ResolveResult build_quotient(const Fan& f, const ResolveOptions& opt);

// Differential plus graded twists under the quotient's class-group-level
// presentation (the cokernel of B restricted to the translation lattice).
ChainComplex chain_with_twists(const ResolveResult& rr);

// Chain JSON with the arrangement data embedded, so verification jobs can
// rebuild the geometric complex from the artifact alone.
Json resolve_to_json(const ResolveResult& rr, const ChainComplex& cc);

struct JobSpec {
  std::string command;              // fan-check, arrangement-build, resolve,
                                    // verify-d2, verify-exactness, cokernel,
                                    // cech, cech-exceptional, morita-check,
                                    // render
  std::vector<std::string> inputs;  // file paths
  std::string out;                  // output artifact path, if any

  RatVec epsilon;
  std::vector<Int> group;  // invariant factors
  Int window = 0;
  long kmax = 16;
  long degree = 6;  // truncation for morita-check

  long wa = 0, wb = 0;       // cech weights
  long twist = 0;            // cech twist
  std::vector<long> twists;  // cech exceptional twists

  long n = 1;                         // morita coordinate count
  std::vector<long> morita_weights;   // row-major weight matrix entries

  unsigned long seed = 0;  // reserved for randomized jobs; recorded only
};

struct RunResult {
  int exit_code = 0;  // 0 ok, 2 verification failed
  Json output;
};

// Dispatches one job. Throws input_error / verify_error / resource_error
// for malformed requests; verification outcomes that are answers rather
// than crashes surface as exit_code 2 with the report in `output`.
RunResult run(const JobSpec& job);

}  // namespace cellres
