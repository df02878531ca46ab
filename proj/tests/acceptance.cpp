// Acceptance runner: executes every verification suite, prints one line per
// criterion, exits nonzero if any fails. Stretch cases (pi at 5, omega to
// 128) are included when PRIMETERM_STRETCH is set.

#include <cstdio>

#include "primeterm/verify.hpp"

int main() {
  using namespace primeterm;
  if (stretch_enabled()) std::printf("stretch cases enabled\n");
  bool ok = true;
  for (const auto& r : run_all_suites()) {
    ok = ok && r.pass;
    std::printf("[%s] %2d %-11s %s (%.2fs)\n", r.pass ? "PASS" : "FAIL",
                r.number, r.name.c_str(), r.detail.c_str(), r.seconds);
  }
  return ok ? 0 : 1;
}
