#pragma once

#include <string>
#include <vector>

namespace ellipsoid {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;   // measured values backing the verdict
  double seconds = 0.0;
};

// Criterion ids for a named suite: core, asymptotics, sobolev, montecarlo, all.
std::vector<int> suite_criteria(const std::string& suite);

std::vector<CriterionResult> run_criteria(const std::vector<int>& ids);

inline std::vector<CriterionResult> run_suite(const std::string& suite) {
  return run_criteria(suite_criteria(suite));
}

std::string format_criterion_line(const CriterionResult& r);

}  // namespace ellipsoid
