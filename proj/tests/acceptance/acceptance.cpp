// Runs acceptance criteria 1-10 and prints one line per criterion. Exits
// nonzero if any criterion fails.
#include <cstdlib>
#include <iostream>

#include "superjac/tools/checks.hpp"

int main(int argc, char** argv) {
  superjac::checks::Config cfg;
  if (argc > 1) cfg.seed = std::strtoull(argv[1], nullptr, 0);
  std::cout << "acceptance seed " << cfg.seed << "\n";
  bool ok = true;
  for (const auto& r : superjac::checks::run_acceptance(cfg)) {
    std::cout << r.line() << "\n" << std::flush;
    ok = ok && r.passed;
  }
  std::cout << (ok ? "ACCEPTANCE PASSED" : "ACCEPTANCE FAILED") << "\n";
  return ok ? EXIT_SUCCESS : EXIT_FAILURE;
}
