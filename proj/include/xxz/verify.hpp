#pragma once

#include <string>
#include <vector>

namespace xxz {

/// Outcome of one verification check. `metric` is the quantity compared against
/// `tolerance` (a margin for bound checks, a deviation for identity checks).
struct CheckResult {
  std::string suite;
  std::string name;
  bool pass;
  double metric;
  double tolerance;
};

/// Runs the library's invariant suite. `suite` selects a subset
/// ("kernels", "special", "linsolve", "thermo", "fermi", "asympt", "bank" or "all");
/// gamma_grid_points controls how many anisotropies each regime check samples.
std::vector<CheckResult> run_verification(const std::string& suite = "all",
                                          int gamma_grid_points = 5);

}  // namespace xxz
