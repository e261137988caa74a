#include <cmath>
#include <limits>
#include <string>

#include "doctest.h"
#include "mtdc/network.hpp"
#include "mtdc/relay.hpp"
#include "mtdc/simulate.hpp"
#include "mtdc/sweep.hpp"

using namespace mtdc;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

SweepSpec quick_spec() {
  SweepSpec spec;
  spec.base.fault.t_fault = 1e-3;
  spec.base.sim.t_end = 6e-3;  // decision lands well before the horizon
  return spec;
}

}  // namespace

TEST_CASE("sweep modes render their command-line spellings") {
  CHECK(to_string(SweepMode::Simulate) == "simulate");
  CHECK(to_string(SweepMode::Analytic) == "analytic");
  CHECK(to_string(SweepMode::Both) == "both");
}

TEST_CASE("every fault kind maps onto its ground-truth verdict") {
  CHECK(expected_verdict(FaultKind::None) == Verdict::NoFault);
  CHECK(expected_verdict(FaultKind::InternalPTP) == Verdict::InternalPTP);
  CHECK(expected_verdict(FaultKind::InternalP_PTG) == Verdict::InternalP_PTG);
  CHECK(expected_verdict(FaultKind::InternalN_PTG) == Verdict::InternalN_PTG);
  CHECK(expected_verdict(FaultKind::ExternalForwardPTG) == Verdict::ExternalForward);
  CHECK(expected_verdict(FaultKind::ExternalForwardPTP) == Verdict::ExternalForward);
  CHECK(expected_verdict(FaultKind::ExternalBackwardPTG) == Verdict::ExternalBackward);
  CHECK(expected_verdict(FaultKind::ExternalBackwardPTP) == Verdict::ExternalBackward);
}

TEST_CASE("grid size counts locations for internal kinds only") {
  SweepSpec spec;
  spec.kinds = {FaultKind::InternalPTP, FaultKind::ExternalForwardPTG};
  // defaults: 3 locations, 3 fault resistances, 3 reactors, 1 snr, 1 seed
  CHECK(spec.grid_size() == 3 * 3 * 3 + 1 * 3 * 3);

  spec.snr_db = {30.0, kInf};
  spec.seeds = {1, 2, 3};
  CHECK(spec.grid_size() == 36 * 2 * 3);

  spec.kinds = {};
  CHECK(spec.grid_size() == 0);
}

TEST_CASE("a single-point sweep reproduces the manual pipeline exactly") {
  SweepSpec spec = quick_spec();
  spec.kinds = {FaultKind::InternalPTP};
  spec.location_d = {0.5};
  spec.r_f = {0.0};
  spec.clr = {0.13};

  const SweepReport report = run_sweep(spec);
  REQUIRE(report.rows.size() == 1);
  const SweepRow& row = report.rows[0];
  CHECK(row.kind == FaultKind::InternalPTP);
  CHECK(row.location_d == 0.5);
  CHECK(row.verdict == Verdict::InternalPTP);
  CHECK(row.expected == Verdict::InternalPTP);
  CHECK(row.pass);
  CHECK(row.error.empty());
  CHECK(row.analytic_sign_zero == 9);  // analytic route not requested
  CHECK(row.analytic_sign_line == 9);

  // Re-run the same point by hand; the doubles must be identical, not close.
  Scenario sc = spec.base;
  sc.system.clr = {0.13, 0.13, 0.13, 0.13};
  sc.fault.kind = FaultKind::InternalPTP;
  sc.fault.location_d = 0.5;
  sc.fault.r_f = 0.0;
  const Topology topo = make_topology(sc.system);
  const NetworkModel net = build_network(topo, sc.fault, sc.sim);
  const StateSpaceModel model = build_state_space(net);
  const MeasurementSet ms = simulate(model, sc.fault, sc.sim);
  const RelayInputs in = condition_measurements(ms, sc.relay, sc.snr_db, sc.seed);
  const RelayDecision d = classify(in, sc.relay);
  CHECK(row.trigger_peak == d.evidence.trigger_peak);
  CHECK(row.trigger_time == d.evidence.trigger_time);
  CHECK(row.dominant_zero == d.evidence.dominant_zero);
  CHECK(row.dominant_line == d.evidence.dominant_line);
  CHECK(row.current_delta == d.evidence.current_delta);
  CHECK(row.decision_time == d.evidence.decision_time);
}

TEST_CASE("analytic mode skips simulation and fills the sign columns") {
  SweepSpec spec = quick_spec();
  spec.kinds = {FaultKind::InternalN_PTG, FaultKind::ExternalBackwardPTG};
  spec.location_d = {0.5};
  spec.r_f = {0.0, 100.0};
  spec.clr = {0.13};
  spec.mode = SweepMode::Analytic;

  const SweepReport report = run_sweep(spec);
  REQUIRE(report.rows.size() == 4);
  for (const SweepRow& row : report.rows) {
    CHECK(std::isnan(row.trigger_peak));
    CHECK(std::isnan(row.decision_time));
    CHECK(row.pass);
    CHECK(row.analytic_sign_zero == row.expected_sign_zero);
    CHECK(row.analytic_sign_line == row.expected_sign_line);
  }
  CHECK(report.rows[0].expected_sign_zero == -1);  // negative-pole ground fault
  CHECK(report.rows[0].expected_sign_line == +1);
  CHECK(report.rows[2].expected_sign_zero == -1);  // backward ground fault
  CHECK(report.rows[2].expected_sign_line == -1);
  CHECK(std::isnan(report.rows[2].location_d));
}

TEST_CASE("the report is deterministic and independent of the worker count") {
  SweepSpec spec = quick_spec();
  spec.base.sim.t_end = 4e-3;
  spec.kinds = {FaultKind::InternalPTP, FaultKind::InternalP_PTG};
  spec.location_d = {0.5};
  spec.r_f = {0.0};
  spec.clr = {0.13};
  spec.snr_db = {30.0};
  spec.seeds = {1, 2, 3};

  const std::string first = report_csv(run_sweep(spec));
  const std::string second = report_csv(run_sweep(spec));
  CHECK(first == second);

  spec.workers = 3;
  const std::string threaded = report_csv(run_sweep(spec));
  CHECK(threaded == first);

  // Different seeds perturb the measured evidence.
  const SweepReport report = run_sweep(spec);
  REQUIRE(report.rows.size() == 6);
  CHECK(report.rows[0].seed == 1);
  CHECK(report.rows[1].seed == 2);
  CHECK(report.rows[0].trigger_peak != report.rows[1].trigger_peak);
}

TEST_CASE("csv rendering freezes the header and the row prefix") {
  SweepSpec spec = quick_spec();
  spec.kinds = {FaultKind::InternalPTP};
  spec.location_d = {0.5};
  spec.r_f = {0.0};
  spec.clr = {0.13};
  const SweepReport report = run_sweep(spec);

  const std::string csv = report_csv(report);
  const std::string header = csv.substr(0, csv.find('\n'));
  CHECK(header ==
        "kind,location_d,r_f_ohm,clr_h,snr_db,seed,trigger_peak_v,trigger_time_s,"
        "dominant_zero_v,dominant_line_v,current_delta_a,decision_time_s,verdict,"
        "expected,analytic_sign_zero,analytic_sign_line,expected_sign_zero,"
        "expected_sign_line,pass,error");
  const std::string row = csv.substr(csv.find('\n') + 1);
  CHECK(row.rfind("internal_ptp,0.5,0,0.13,inf,1,", 0) == 0);
  CHECK(row.find(",internal_ptp,internal_ptp,9,9,9,9,1,\n") != std::string::npos);

  const std::string pivot = pivot_csv(report);
  CHECK(pivot.substr(0, pivot.find('\n')) == "kind,location_d,rf_0_clr_0.13");
  CHECK(pivot.find("\ninternal_ptp,0.5,") != std::string::npos);
}

TEST_CASE("per-point failures are recorded without aborting the sweep") {
  SweepSpec spec = quick_spec();
  spec.base.sim.t_end = 2e-3;
  spec.base.relay.delta_window = 1e-9;  // rounds to a zero-sample lag
  spec.kinds = {FaultKind::InternalPTP};
  spec.location_d = {0.5};
  spec.r_f = {0.0};
  spec.clr = {0.13};

  const SweepReport report = run_sweep(spec);
  REQUIRE(report.rows.size() == 1);
  CHECK_FALSE(report.rows[0].pass);
  CHECK_FALSE(report.rows[0].error.empty());
}
