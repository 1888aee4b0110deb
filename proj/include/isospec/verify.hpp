// Self-verification checks: each one measures a residual against a pinned
// tolerance using an independent route (quadrature vs. closed form,
// finite differences vs. analytic spectra, hand-written reference displays
// vs. library evaluation).  The command-line `verify` subcommand and the
// acceptance runner both draw from this list.

#pragma once

#include <functional>
#include <string>
#include <vector>

namespace isospec::verify {

struct CheckResult {
  bool pass = false;
  double measured = 0.0;   // worst residual observed
  double tolerance = 0.0;  // pinned bound it must stay under
  std::string detail;
};

struct Check {
  std::string name;
  std::string suite;  // specfun | models | cprs-identities | susy | oracle | figures
  int criterion = 0;  // acceptance criterion 1..12, 0 for extra checks
  std::function<CheckResult()> run;
};

const std::vector<Check>& all_checks();

struct RanCheck {
  std::string name;
  std::string suite;
  int criterion = 0;
  CheckResult result;
};

// Runs the checks whose suite matches (or every check for "all"/"").
// A check that throws is reported as failed with the message in detail.
std::vector<RanCheck> run_suite(const std::string& suite);
std::vector<RanCheck> run_criterion(int criterion);

bool all_pass(const std::vector<RanCheck>& results);
std::string report_json(const std::vector<RanCheck>& results);

}  // namespace isospec::verify
