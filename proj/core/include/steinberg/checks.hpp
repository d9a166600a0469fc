#pragma once

#include <functional>
#include <string>
#include <vector>

#include "steinberg/report.hpp"

namespace steinberg::checks {

// One acceptance criterion: a stable id, a one-line title, and a runner that
// appends its verified items to a report. The registry is shared by the
// command-line `verify` subcommands and the acceptance test binary so both
// always exercise the same checks.
struct CheckDef {
  std::string id;
  std::string title;
  std::function<void(report::VerificationReport&)> run;
};

// The ten acceptance criteria, in order.
const std::vector<CheckDef>& acceptance_checks();

// Run a list of checks into a single named report.
report::VerificationReport run_suite(const std::string& suite,
                                     const std::vector<CheckDef>& defs);

// Everything (suite "acceptance").
report::VerificationReport run_acceptance();

// Focused suites behind the CLI verify subcommands.
report::VerificationReport verify_weyl(int nmax);  // claim suites on S_3..S_nmax
report::VerificationReport verify_steinberg();     // components, fibers, tangents
report::VerificationReport verify_resolution();    // recorded complex and Betti data

}  // namespace steinberg::checks
