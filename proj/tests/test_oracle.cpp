#include <cmath>
#include <stdexcept>

#include "doctest.h"
#include "mtdc/oracle.hpp"

using namespace mtdc;

namespace {

Scenario oracle_scenario(FaultKind kind, double r_f) {
  Scenario sc;
  sc.fault.kind = kind;
  sc.fault.r_f = r_f;
  sc.fault.t_fault = 1e-3;
  if (is_internal(kind)) sc.fault.location_d = 0.5;
  sc.sim.t_end = 4e-3;  // leaves the full comparison window after inception
  return sc;
}

}  // namespace

TEST_CASE("both engines agree on a mid-line ground fault through 100 ohm") {
  const OracleComparison oc =
      compare_oracle(oracle_scenario(FaultKind::InternalP_PTG, 100.0));
  CHECK(oc.magnitude_checked);
  CHECK(oc.pass);
  CHECK(oc.rel_error <= 0.05);
  CHECK(oc.extremum_time > 0.0);
  CHECK(oc.extremum_time <= 2e-3 + 1e-9);
  CHECK(oc.sim_line_sign == 1);
  CHECK(oc.analytic_line_sign == 1);
  // A ground fault couples the modes: a real share of the energy is zero-mode.
  CHECK(oc.sim_zero_ratio > 0.05);
  CHECK(oc.analytic_zero_ratio > 0.05);
  CHECK(oc.sim_line_mode.size() == oc.analytic_line_mode.size());
  CHECK(oc.sim_line_mode.t0 == doctest::Approx(oc.sim_line_mode.dt));
}

TEST_CASE("a bolted pole-to-pole fault leaves the zero mode silent in both engines") {
  const OracleComparison oc =
      compare_oracle(oracle_scenario(FaultKind::InternalPTP, 0.0));
  CHECK(oc.magnitude_checked);
  CHECK(oc.pass);
  CHECK(oc.rel_error <= 0.05);
  CHECK(oc.analytic_zero_ratio == 0.0);
  CHECK(oc.sim_zero_ratio < 1e-6);
  CHECK(oc.sim_line_sign == 1);
  CHECK(oc.analytic_line_sign == 1);
}

TEST_CASE("forward external contingencies compare polarity only") {
  const OracleComparison oc =
      compare_oracle(oracle_scenario(FaultKind::ExternalForwardPTG, 0.0));
  CHECK_FALSE(oc.magnitude_checked);
  CHECK(oc.pass);
  CHECK(oc.sim_line_sign == 1);
  CHECK(oc.analytic_line_sign == 1);
}

TEST_CASE("backward contingencies show the inverted line-mode polarity") {
  const OracleComparison oc =
      compare_oracle(oracle_scenario(FaultKind::ExternalBackwardPTG, 0.0));
  CHECK_FALSE(oc.magnitude_checked);
  CHECK(oc.pass);
  CHECK(oc.sim_line_sign == -1);
  CHECK(oc.analytic_line_sign == -1);
}

TEST_CASE("the oracle needs a fault and enough post-fault horizon") {
  Scenario none;
  CHECK_THROWS_AS(compare_oracle(none), std::invalid_argument);

  Scenario tight = oracle_scenario(FaultKind::InternalPTP, 0.0);
  tight.sim.t_end = 1.01e-3;  // fewer than eight post-fault samples
  CHECK_THROWS_AS(compare_oracle(tight), std::invalid_argument);
}

TEST_CASE("the textual report names the engines and the outcome") {
  const OracleComparison oc =
      compare_oracle(oracle_scenario(FaultKind::InternalP_PTG, 100.0));
  const std::string report = oracle_report(oc);
  CHECK(report.find("time-domain solver vs closed-form inversion") != std::string::npos);
  CHECK(report.find("relative error") != std::string::npos);
  CHECK(report.find("result: PASS") != std::string::npos);

  const OracleComparison ext =
      compare_oracle(oracle_scenario(FaultKind::ExternalBackwardPTG, 0.0));
  const std::string ext_report = oracle_report(ext);
  CHECK(ext_report.find("polarity only") != std::string::npos);
  CHECK(ext_report.find("result: PASS") != std::string::npos);
}
