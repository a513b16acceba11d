// Acceptance suite runner: executes every verification criterion at its
// pinned tolerance, prints one pass/fail line per criterion, and exits
// nonzero if any criterion fails.

#include <cstring>
#include <iostream>

#include "fsslab/verify.hpp"

int main(int argc, char** argv) {
  fss::Profile profile = fss::Profile::Default;
  if (argc > 1 && std::strcmp(argv[1], "--strict") == 0)
    profile = fss::Profile::Strict;

  const std::vector<fss::CheckResult> results =
      fss::run_acceptance_checks(profile);
  fss::print_report(results, std::cout);
  return fss::all_passed(results) ? 0 : 1;
}
