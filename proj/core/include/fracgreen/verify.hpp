#pragma once

#include <string>
#include <vector>

namespace fracgreen {

enum class Suite { fast, full };

struct CheckResult {
  std::string name;
  bool passed = false;
  double measured = 0.0;   ///< the quantity compared against the threshold
  double threshold = 0.0;
  std::string detail;
};

/// Cross-module consistency checks: series identities, the Green function
/// forms, normalisation, Laplace pairs and the discretised PDE. `full` adds
/// the parameter sweeps and refinement-order checks. A check that throws is
/// reported as failed with the error text in `detail`.
std::vector<CheckResult> run_verification(Suite suite);

}  // namespace fracgreen
