#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace fss {

// Tolerance profile of the verification suite. Strict pins every analytic
// (closed-form) comparison at 1e-12; integration-based checks and the
// rounded-table comparisons keep their stated tolerances in both profiles.
enum class Profile { Default, Strict };

Profile parse_profile(const std::string& name);

// Outcome of one acceptance criterion. `measured` and `tolerance` describe
// the binding sub-check (the one closest to, or beyond, its bound); `detail`
// says which sub-check that was.
struct CheckResult {
  std::string name;
  bool pass = true;
  double measured = 0.0;
  double tolerance = 0.0;
  std::string detail;
};

// Runs the full acceptance suite: table reproduction, the pure-shear
// equivalences, every closed-form stress solution, the hypoelastic
// integrations and their cross-scheme agreements, and the kinematic property
// suite. One result per criterion.
std::vector<CheckResult> run_acceptance_checks(Profile profile);

void print_report(const std::vector<CheckResult>& results, std::ostream& out);

bool all_passed(const std::vector<CheckResult>& results);

}  // namespace fss
