#pragma once

/* The acceptance suite: nine formula-level checks covering the reduction
   catalog, the crystal cokernel grid, the symbolic specialization, the
   oracle-backed Newton-polygon analyzer, the rank-2 lattice sweep, the fixed
   module, the tensor-order counterexample pipeline, the norm-generation
   enumeration, and the consistency tripwire fuzz. Each criterion carries a
   runtime budget; exceeding it fails the criterion. */

#include <string>
#include <vector>

namespace k3cm {

struct CriterionResult {
  int number = 0;
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
  double budget_seconds = 0.0;
};

std::vector<CriterionResult> run_acceptance(int workers = 0);

bool all_passed(const std::vector<CriterionResult>& results);

// one line per criterion, "criterion N (name): PASS/FAIL  detail"
std::string format_results(const std::vector<CriterionResult>& results);

}  // namespace k3cm
