#pragma once

#include <string>
#include <vector>

#include "mumford/moduli.hpp"

namespace mumford {

// One (W, T, sigma) column of the verification matrix.
struct MatrixCell {
  std::string name;
  GAction sigma;
  int64_t expected_h2 = 0; // frozen |H^2(W,T)|
  bool brute_h2 = false;   // normalized-cochain space small enough to exhaust
};

std::vector<MatrixCell> matrix_cells();

// Anchors the transgression sign on the smallest cell: the sign under which
// fiber verification succeeds for every extension class; +1 is tried first.
int determine_transgression_sign(const Budget& budget = {});

struct CriterionResult {
  int number = 0;
  std::string name;
  bool pass = false;
  std::string detail;
};

struct AcceptanceOutcome {
  int transgression_sign = 1;
  std::vector<CriterionResult> results;
  bool all_pass = false;
  std::string payload; // deterministic JSON document for the whole run
};

// Runs the verification matrix: cohomology oracle equivalence, extension
// correspondence, dual hom counting, cover ranks, transgression properties,
// five-term exactness, the fiber theorem, orbit fibers, and the dihedral and
// Weyl suites.  The determinism criterion is exercised by callers that spawn
// the command-line tool and compare outputs.
AcceptanceOutcome run_acceptance(int workers = 1, const Budget& budget = {});

} // namespace mumford
