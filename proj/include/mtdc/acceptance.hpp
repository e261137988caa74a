#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace mtdc {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool pass = false;
  std::string detail;                  // one-line summary
  std::vector<std::string> failures;   // enumerated failing points
  double seconds = 0.0;
};

struct AcceptanceReport {
  std::vector<CriterionResult> criteria;
  bool all_pass = false;
};

// Runs the full acceptance suite headless. When out_dir is non-empty the
// supporting artifacts (grid report, pivot, oracle comparisons) are written
// there.
AcceptanceReport run_acceptance(const std::string& out_dir, int workers);

void print_report(const AcceptanceReport& report, std::ostream& os);

// 0 when everything passed, 3 otherwise.
int acceptance_exit_code(const AcceptanceReport& report);

}  // namespace mtdc
