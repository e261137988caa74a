#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "mtdc/relay.hpp"
#include "mtdc/simulate.hpp"

using namespace mtdc;

namespace {

constexpr double kDt = 1e-5;        // 100 kHz relay rate
constexpr std::size_t kN = 1000;    // 10 ms of samples
constexpr std::size_t kStep = 100;  // event at 1 ms

Trace flat(const std::string& name, const std::string& unit, double value = 0.0) {
  return Trace{name, unit, 0.0, kDt, std::vector<double>(kN, value)};
}

// Step from 0 to `level` at kStep.
Trace step(const std::string& name, const std::string& unit, double level) {
  Trace tr = flat(name, unit);
  for (std::size_t k = kStep; k < kN; ++k) tr.samples[k] = level;
  return tr;
}

// Ramp from 0 at kStep with the given per-sample increment.
Trace ramp(const std::string& name, const std::string& unit, double per_sample) {
  Trace tr = flat(name, unit);
  for (std::size_t k = kStep; k < kN; ++k)
    tr.samples[k] = per_sample * static_cast<double>(k - kStep);
  return tr;
}

RelayInputs inputs(Trace p, Trace n, Trace ip, Trace in_) {
  RelayInputs in;
  in.v_clr_p = std::move(p);
  in.v_clr_n = std::move(n);
  in.i_p = std::move(ip);
  in.i_n = std::move(in_);
  return in;
}

}  // namespace

TEST_CASE("a symmetric step with rising current is an internal pole-to-pole fault") {
  const RelayInputs in = inputs(step("v_clr_p", "V", 280e3), step("v_clr_n", "V", -280e3),
                                ramp("i_p", "A", 60.0), flat("i_n", "A"));
  const RelayDecision d = classify(in, RelaySettings{});
  CHECK(d.verdict == Verdict::InternalPTP);
  CHECK(d.evidence.trigger_time == doctest::Approx(1e-3));
  CHECK(d.evidence.trigger_peak == doctest::Approx(560e3));
  CHECK(std::fabs(d.evidence.dominant_zero) < 1.0);
  CHECK(d.evidence.dominant_line == doctest::Approx(560e3 / 1.4142135623730951));
  CHECK(d.evidence.current_delta == doctest::Approx(12e3));  // 60 A/sample over 2 ms
  CHECK(d.evidence.decision_time == doctest::Approx(3e-3));
  CHECK(d.evidence.latency_ms == doctest::Approx(2.0));
  CHECK_FALSE(d.evidence.tie_break_warning);
}

TEST_CASE("a weak disturbance below the trigger level reports no fault") {
  const RelayInputs in = inputs(step("v_clr_p", "V", 40e3), step("v_clr_n", "V", -40e3),
                                flat("i_p", "A"), flat("i_n", "A"));
  const RelayDecision d = classify(in, RelaySettings{});
  CHECK(d.verdict == Verdict::NoFault);
  CHECK(d.evidence.trigger_peak == doctest::Approx(80e3));
  CHECK(std::isnan(d.evidence.trigger_time));
  CHECK(std::isnan(d.evidence.latency_ms));
  CHECK(d.evidence.decision_time == doctest::Approx((kN - 1) * kDt));
}

TEST_CASE("reaching the trigger level exactly counts as a violation") {
  const RelayInputs in = inputs(step("v_clr_p", "V", 50e3), step("v_clr_n", "V", -50e3),
                                flat("i_p", "A"), flat("i_n", "A"));
  const RelayDecision d = classify(in, RelaySettings{});
  CHECK(d.verdict != Verdict::NoFault);
  CHECK(d.evidence.trigger_time == doctest::Approx(1e-3));
}

TEST_CASE("a dominant positive zero mode with rising positive-pole current is a positive-pole ground fault") {
  const RelayInputs in = inputs(step("v_clr_p", "V", 250e3), step("v_clr_n", "V", 30e3),
                                ramp("i_p", "A", 50.0), flat("i_n", "A"));
  const RelayDecision d = classify(in, RelaySettings{});
  CHECK(d.verdict == Verdict::InternalP_PTG);
  CHECK(d.evidence.dominant_zero > 10e3);
  CHECK(d.evidence.dominant_line > 0.0);
}

TEST_CASE("a dominant negative zero mode evaluates the negative pole current") {
  // Zero mode negative, line mode positive; only the negative pole carries a
  // rising current, so picking the wrong pole would misclassify as forward.
  const RelayInputs in = inputs(step("v_clr_p", "V", 110e3), step("v_clr_n", "V", -200e3),
                                flat("i_p", "A"), ramp("i_n", "A", 40.0));
  const RelayDecision d = classify(in, RelaySettings{});
  CHECK(d.verdict == Verdict::InternalN_PTG);
  CHECK(d.evidence.dominant_zero < -10e3);
  CHECK(d.evidence.current_delta == doctest::Approx(8e3));
}

TEST_CASE("matching negative mode polarities reject the fault as backward") {
  // Ground-fault family: both modes negative. The huge current ramp proves
  // the direction element is never consulted on the backward path.
  const RelayInputs in = inputs(step("v_clr_p", "V", -150e3), step("v_clr_n", "V", 20e3),
                                ramp("i_p", "A", 1000.0), ramp("i_n", "A", 1000.0));
  const RelayDecision d = classify(in, RelaySettings{});
  CHECK(d.verdict == Verdict::ExternalBackward);
  CHECK(d.evidence.dominant_zero < 0.0);
  CHECK(d.evidence.dominant_line < 0.0);
  CHECK(d.evidence.current_delta == 0.0);  // untouched evidence field
}

TEST_CASE("a negative line mode with silent zero mode is a backward pole-to-pole fault") {
  const RelayInputs in = inputs(step("v_clr_p", "V", -100e3), step("v_clr_n", "V", 100e3),
                                ramp("i_p", "A", 1000.0), flat("i_n", "A"));
  const RelayDecision d = classify(in, RelaySettings{});
  CHECK(d.verdict == Verdict::ExternalBackward);
  CHECK(std::fabs(d.evidence.dominant_zero) < 1.0);
  CHECK(d.evidence.dominant_line < 0.0);
}

TEST_CASE("internal polarity with a weak current change is a forward external fault") {
  // Ground family, both modes positive, but only 1.2 kA of change: the
  // far-side reactor limits the through current.
  const RelayInputs in = inputs(step("v_clr_p", "V", 90e3), step("v_clr_n", "V", -48e3),
                                ramp("i_p", "A", 6.0), flat("i_n", "A"));
  const RelayDecision d = classify(in, RelaySettings{});
  CHECK(d.verdict == Verdict::ExternalForward);
  CHECK(d.evidence.dominant_zero > 10e3);
  CHECK(d.evidence.current_delta == doctest::Approx(1.2e3));
  CHECK(d.evidence.latency_ms == doctest::Approx(2.0));
}

TEST_CASE("reaching the current threshold exactly resolves as internal") {
  const RelayInputs in = inputs(step("v_clr_p", "V", 280e3), step("v_clr_n", "V", -280e3),
                                step("i_p", "A", 2000.0), flat("i_n", "A"));
  const RelayDecision d = classify(in, RelaySettings{});
  CHECK(d.verdict == Verdict::InternalPTP);
  CHECK(d.evidence.current_delta == doctest::Approx(2000.0));
}

TEST_CASE("family threshold equality keeps the pole-to-pole reading") {
  RelaySettings rs;
  rs.e_set = 0.0;
  // Exactly antisymmetric poles give a numerically zero dominant zero mode;
  // |0| at a zero-width threshold still reads as the pole-to-pole family.
  const RelayInputs in = inputs(step("v_clr_p", "V", 280e3), step("v_clr_n", "V", -280e3),
                                ramp("i_p", "A", 60.0), flat("i_n", "A"));
  const RelayDecision d = classify(in, rs);
  CHECK(d.verdict == Verdict::InternalPTP);
  CHECK_FALSE(d.evidence.tie_break_warning);
}

TEST_CASE("classification is deterministic") {
  const RelayInputs in = inputs(step("v_clr_p", "V", 250e3), step("v_clr_n", "V", 30e3),
                                ramp("i_p", "A", 50.0), flat("i_n", "A"));
  const RelayDecision a = classify(in, RelaySettings{});
  const RelayDecision b = classify(in, RelaySettings{});
  CHECK(a.verdict == b.verdict);
  CHECK(a.evidence.trigger_peak == b.evidence.trigger_peak);
  CHECK(a.evidence.trigger_time == b.evidence.trigger_time);
  CHECK(a.evidence.dominant_zero == b.evidence.dominant_zero);
  CHECK(a.evidence.dominant_line == b.evidence.dominant_line);
  CHECK(a.evidence.current_delta == b.evidence.current_delta);
}

TEST_CASE("classify rejects empty channels") {
  RelayInputs in = inputs(step("v_clr_p", "V", 250e3), step("v_clr_n", "V", -250e3),
                          flat("i_p", "A"), flat("i_n", "A"));
  in.i_n.samples.clear();
  CHECK_THROWS_AS(classify(in, RelaySettings{}), std::invalid_argument);
}

TEST_CASE("measurement conditioning decimates to the relay rate") {
  MeasurementSet ms;
  ms.dt = 2e-6;
  ms.t_fault = 1e-3;
  const std::size_t n = 5001;
  auto make = [&](const std::string& name, const std::string& unit, double level) {
    Trace tr{name, unit, 0.0, 2e-6, std::vector<double>(n, 0.0)};
    for (std::size_t k = 500; k < n; ++k) tr.samples[k] = level;
    return tr;
  };
  ms.v_clr_p = make("v_clr_p", "V", 200e3);
  ms.v_clr_n = make("v_clr_n", "V", -200e3);
  ms.i_p = make("i_p", "A", 3e3);
  ms.i_n = make("i_n", "A", -3e3);

  RelaySettings rs;
  rs.filter_enabled = false;
  const double inf = std::numeric_limits<double>::infinity();
  const RelayInputs in = condition_measurements(ms, rs, inf, 1);
  REQUIRE(in.v_clr_p.size() == 1001);  // stride 5
  CHECK(in.v_clr_p.dt == doctest::Approx(1e-5));
  CHECK(in.v_clr_p.samples[99] == doctest::Approx(0.0));
  CHECK(in.v_clr_p.samples[100] == doctest::Approx(200e3));

  // The rolling filter keeps the first sample and smears the edge.
  rs.filter_enabled = true;
  const RelayInputs filtered = condition_measurements(ms, rs, inf, 1);
  CHECK(filtered.v_clr_p.samples[0] == doctest::Approx(0.0));
  CHECK(filtered.v_clr_p.samples[101] < 200e3);
  CHECK(filtered.v_clr_p.samples[101] > 0.0);

  // Finite snr: deterministic per seed, decorrelated across channels.
  rs.filter_enabled = false;
  const RelayInputs n1 = condition_measurements(ms, rs, 30.0, 9);
  const RelayInputs n2 = condition_measurements(ms, rs, 30.0, 9);
  const RelayInputs n3 = condition_measurements(ms, rs, 30.0, 10);
  CHECK(n1.v_clr_p.samples == n2.v_clr_p.samples);
  CHECK(n1.v_clr_p.samples != n3.v_clr_p.samples);
  CHECK(n1.v_clr_p.samples[50] != n1.v_clr_n.samples[50]);  // noise differs per channel

  // With the conditioning filter active (the deployed configuration), a
  // noisy internal fault still lands on the right verdict.
  const RelaySettings deployed;
  const RelayDecision d =
      classify(condition_measurements(ms, deployed, 30.0, 9), deployed);
  CHECK(d.verdict == Verdict::InternalPTP);

  // Guard rails.
  MeasurementSet bad = ms;
  bad.v_clr_p.samples.clear();
  CHECK_THROWS_AS(condition_measurements(bad, rs, inf, 1), std::invalid_argument);
  RelaySettings bad_rs = rs;
  bad_rs.sample_rate = 0.0;
  CHECK_THROWS_AS(condition_measurements(ms, bad_rs, inf, 1), std::invalid_argument);
  MeasurementSet bad_dt = ms;
  bad_dt.dt = 0.0;
  CHECK_THROWS_AS(condition_measurements(bad_dt, rs, inf, 1), std::invalid_argument);
}

TEST_CASE("decision records render as csv and prose") {
  const RelayInputs in = inputs(step("v_clr_p", "V", 280e3), step("v_clr_n", "V", -280e3),
                                ramp("i_p", "A", 60.0), flat("i_n", "A"));
  const RelayDecision d = classify(in, RelaySettings{});

  const std::string header = decision_csv_header();
  CHECK(header.rfind("scenario,verdict", 0) == 0);
  const std::string row = decision_csv_row("case_a", d);
  CHECK(row.find("case_a,internal_ptp") == 0);

  const std::string text = decision_text("case_a", d);
  CHECK(text.find("verdict=internal_ptp") != std::string::npos);
  CHECK(text.find("kV") != std::string::npos);
  CHECK(text.find("ms") != std::string::npos);

  const RelayInputs quiet = inputs(flat("v_clr_p", "V"), flat("v_clr_n", "V"),
                                   flat("i_p", "A"), flat("i_n", "A"));
  const RelayDecision dq = classify(quiet, RelaySettings{});
  const std::string tq = decision_text("quiet", dq);
  CHECK(tq.find("no trigger") != std::string::npos);
}

TEST_CASE("verdict names are stable") {
  CHECK(to_string(Verdict::NoFault) == "no_fault");
  CHECK(to_string(Verdict::InternalPTP) == "internal_ptp");
  CHECK(to_string(Verdict::InternalP_PTG) == "internal_p_ptg");
  CHECK(to_string(Verdict::InternalN_PTG) == "internal_n_ptg");
  CHECK(to_string(Verdict::ExternalForward) == "external_forward");
  CHECK(to_string(Verdict::ExternalBackward) == "external_backward");
}
