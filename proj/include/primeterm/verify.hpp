#pragma once

#include <string>
#include <vector>

#include "primeterm/term.hpp"

namespace primeterm {

// The verification suites: one per acceptance criterion, runnable from the
// CLI (`primeterm verify`) and from the acceptance test binary. Each suite
// is exact (no tolerances) and self-contained.

struct CheckResult {
  int number = 0;
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0;
};

const std::vector<std::string>& suite_names();

// Run one suite by name, or all of them in order.
CheckResult run_suite(const std::string& name, const EvalConfig& cfg = {});
std::vector<CheckResult> run_all_suites(const EvalConfig& cfg = {});

// Stretch cases (pi at 5, omega to 128) run only when PRIMETERM_STRETCH is
// set; they extend their suites, they are not separate criteria.
bool stretch_enabled();

}  // namespace primeterm
