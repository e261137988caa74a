#pragma once

#include <string>

#include "mtdc/scenario.hpp"
#include "mtdc/trace.hpp"

namespace mtdc {

// Cross-validation of the closed-form mode voltages against the time-domain
// simulator. Internal kinds run the simulator in stiff-source mode (the
// closed-form source blocks) and compare magnitudes at the first line-mode
// extremum; external kinds compare polarity only (the closed-form external
// networks ignore the faulted line's own impedance).
struct OracleComparison {
  Trace sim_line_mode;       // relay-tap V_L121, post-fault, sim engine
  Trace analytic_line_mode;  // inverted on the same time grid
  double extremum_time = 0.0;     // seconds after inception
  double sim_value = 0.0;         // V_L121 at the extremum (sim)
  double analytic_value = 0.0;    // V_L121 at the extremum (closed form)
  double rel_error = 0.0;         // |sim - analytic| / |analytic|
  double sim_zero_ratio = 0.0;        // max|V_L120| / max|V_L121| (sim)
  double analytic_zero_ratio = 0.0;   // same from the closed form
  int sim_line_sign = 0;
  int analytic_line_sign = 0;
  bool magnitude_checked = false;  // true for internal kinds
  bool pass = false;  // internal: rel_error <= 0.05; external: signs agree
};

OracleComparison compare_oracle(const Scenario& sc);

std::string oracle_report(const OracleComparison& oc);

}  // namespace mtdc
