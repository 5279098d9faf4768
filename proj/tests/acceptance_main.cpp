// Acceptance suite: one line per criterion with the measured values.
#include <iostream>

#include "ellipsoid/verify.hpp"

int main() {
  const auto results = ellipsoid::run_suite("all");
  bool all_pass = true;
  for (const auto& r : results) {
    std::cout << ellipsoid::format_criterion_line(r) << "\n";
    all_pass = all_pass && r.pass;
  }
  std::cout << (all_pass ? "acceptance: all criteria passed"
                         : "acceptance: at least one criterion FAILED")
            << " (" << results.size() << " run)\n";
  return all_pass ? 0 : 1;
}
