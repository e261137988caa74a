#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>

#include "doctest.h"
#include "mtdc/scenario.hpp"

using namespace mtdc;

namespace {

scenario_parse_error capture(const std::string& text) {
  try {
    (void)load_scenario(text);
  } catch (const scenario_parse_error& e) {
    return e;
  }
  FAIL("expected a parse error for: " << text);
  return scenario_parse_error(0, "", "unreachable");
}

}  // namespace

TEST_CASE("an empty document yields the documented defaults") {
  const Scenario sc = load_scenario("");
  CHECK(sc.fault.kind == FaultKind::None);
  CHECK_FALSE(sc.fault.location_d.has_value());
  CHECK(sc.fault.r_f == 0.0);
  CHECK(sc.fault.t_fault == doctest::Approx(1e-3));
  CHECK(sc.relay.u_set == doctest::Approx(100e3));
  CHECK(sc.relay.e_set == doctest::Approx(10e3));
  CHECK(sc.relay.i_set == doctest::Approx(2e3));
  CHECK(sc.relay.rolling_window == 50);
  CHECK(sc.relay.delta_window == doctest::Approx(0.5e-3));
  CHECK(sc.relay.current_delta_window == doctest::Approx(2e-3));
  CHECK(sc.relay.polarity_window == doctest::Approx(2e-3));
  CHECK(sc.relay.sample_rate == doctest::Approx(100e3));
  CHECK(sc.relay.filter_enabled);
  CHECK(std::isinf(sc.snr_db));
  CHECK(sc.seed == 1);
  CHECK(sc.sim.dt == doctest::Approx(2e-6));
  CHECK(sc.sim.t_end == doctest::Approx(10e-3));
  CHECK_FALSE(sc.sim.stiff_sources);
  CHECK(sc.sim.ptp_alpha == doctest::Approx(0.5));
  CHECK(sc.system.line12_length == doctest::Approx(20e3));
  CHECK(sc.system.c14 < 0.0);  // auto
  CHECK(sc.warnings.empty());
}

TEST_CASE("a full document is parsed with units, comments and both separators") {
  const char* text =
      "# headline comment\n"
      "[system]\n"
      "arm_resistance = 0.9 ohm\n"
      "clr: 0.11 H  # trailing comment\n"
      "\n"
      "[topology]\n"
      "line12_length = 30e3 m\n"
      "c14 = 2e-3 F\n"
      "c23 = auto\n"
      "\n"
      "[fault]\n"
      "kind = internal_n_ptg\n"
      "location_d : 0.25\n"
      "r_f = 120 ohm\n"
      "t_fault = 2e-3 s\n"
      "\n"
      "[relay]\n"
      "u_set = 90e3 V\n"
      "filter_enabled = false\n"
      "snr_db = 30 dB\n"
      "seed = 7\n"
      "\n"
      "[sim]\n"
      "dt = 1e-6 s\n"
      "t_end = 9e-3 s\n";
  const Scenario sc = load_scenario(text);
  CHECK(sc.system.mmc.arm_resistance == doctest::Approx(0.9));
  CHECK(sc.system.clr.clr12 == doctest::Approx(0.11));
  CHECK(sc.system.clr.clr21 == doctest::Approx(0.11));
  CHECK(sc.system.clr.clr14 == doctest::Approx(0.11));
  CHECK(sc.system.clr.clr23 == doctest::Approx(0.11));
  CHECK(sc.system.line12_length == doctest::Approx(30e3));
  CHECK(sc.system.c14 == doctest::Approx(2e-3));
  CHECK(sc.system.c23 < 0.0);
  CHECK(sc.fault.kind == FaultKind::InternalN_PTG);
  CHECK(sc.fault.location_d == doctest::Approx(0.25));
  CHECK(sc.fault.r_f == doctest::Approx(120.0));
  CHECK(sc.fault.t_fault == doctest::Approx(2e-3));
  CHECK(sc.relay.u_set == doctest::Approx(90e3));
  CHECK_FALSE(sc.relay.filter_enabled);
  CHECK(sc.snr_db == doctest::Approx(30.0));
  CHECK(sc.seed == 7);
  CHECK(sc.sim.dt == doctest::Approx(1e-6));
  CHECK(sc.sim.t_end == doctest::Approx(9e-3));
}

TEST_CASE("the grouped reactor key sets all four reactors, singles override") {
  const Scenario sc = load_scenario(
      "[system]\n"
      "clr = 0.1 H\n"
      "clr14 = 0.16 H\n");
  CHECK(sc.system.clr.clr12 == doctest::Approx(0.1));
  CHECK(sc.system.clr.clr21 == doctest::Approx(0.1));
  CHECK(sc.system.clr.clr14 == doctest::Approx(0.16));
  CHECK(sc.system.clr.clr23 == doctest::Approx(0.1));
}

TEST_CASE("parse errors carry the line and the offending field") {
  const scenario_parse_error range =
      capture("[fault]\nkind = internal_ptp\nlocation_d = 1.5\n");
  CHECK(range.field == "location_d");
  CHECK(range.line == 3);
  CHECK(std::string(range.what()).find("out of range") != std::string::npos);

  const scenario_parse_error missing = capture("[fault]\nkind = internal_ptp\n");
  CHECK(missing.field == "fault");
  CHECK(missing.line == 2);

  const scenario_parse_error misplaced =
      capture("[fault]\nkind = external_forward_ptg\nlocation_d = 0.5\n");
  CHECK(misplaced.field == "fault");
  CHECK(misplaced.line == 3);

  const scenario_parse_error late = capture(
      "[fault]\nkind = internal_ptp\nlocation_d = 0.5\nt_fault = 20e-3 s\n");
  CHECK(late.field == "t_fault");

  const scenario_parse_error bad_unit = capture("[system]\nclr = 0.13 farad\n");
  CHECK(bad_unit.field == "clr");
  CHECK(std::string(bad_unit.what()).find("SI base form") != std::string::npos);

  const scenario_parse_error glued = capture("[system]\nclr = 130mH\n");
  CHECK(glued.field == "clr");
  CHECK(std::string(glued.what()).find("not a number") != std::string::npos);

  const scenario_parse_error unitless = capture("[system]\nsm_count = 200 farad\n");
  CHECK(unitless.field == "sm_count");
  CHECK(std::string(unitless.what()).find("must not carry a unit") != std::string::npos);

  CHECK(capture("bogus = 1\n").field == "bogus");
  CHECK(capture("[weird]\n").field == "weird");
  CHECK(capture("no_separator_here\n").line == 1);
  CHECK(capture("[system]\nclr =\n").field == "clr");
  CHECK(capture("[relay]\nu_set = 1e5 V extra\n").field == "u_set");
  CHECK(capture("[topology]\nc14 = auto F\n").field == "c14");
  CHECK(capture("[sim]\nramp_fraction = 0.1\n").field == "sim");
  CHECK(capture("[relay]\nseed = -1\n").field == "seed");
  CHECK(capture("[system]\nsm_count = 0\n").field == "sm_count");
  CHECK(capture("[sim]\nptp_alpha = 0\n").field == "ptp_alpha");
  CHECK(capture("[system]\nline_mutual_ratio = 1.0\n").field == "line_mutual_ratio");
  CHECK(capture("[relay]\nfilter_enabled = maybe\n").field == "filter_enabled");
  CHECK(capture("[sim]\ndt = 0 s\n").field == "dt");
}

TEST_CASE("reactors outside the validated range raise a warning, not an error") {
  const Scenario sc = load_scenario("[system]\nclr = 0.2 H\n");
  REQUIRE(sc.warnings.size() == 1);
  CHECK(sc.warnings[0].find("outside the validated range") != std::string::npos);
  CHECK(sc.system.clr.clr12 == doctest::Approx(0.2));

  const Scenario ok = load_scenario("[system]\nclr = 0.13 H\n");
  CHECK(ok.warnings.empty());
}

TEST_CASE("serialization round-trips every semantic field") {
  const char* text =
      "[system]\n"
      "arm_resistance = 0.9 ohm\n"
      "clr = 0.11 H\n"
      "[topology]\n"
      "line14_length = 25e3 m\n"
      "c14 = 2e-3 F\n"
      "[fault]\n"
      "kind = internal_n_ptg\n"
      "location_d = 0.25\n"
      "r_f = 120 ohm\n"
      "[relay]\n"
      "snr_db = 30 dB\n"
      "seed = 9\n"
      "[sim]\n"
      "stiff_sources = true\n"
      "ramp_fraction = -0.1\n"
      "ramp_duration = 50e-3 s\n"
      "prefault_current = 1.5e3 A\n";
  const Scenario sc = load_scenario(text);
  const std::string canon = serialize(sc);
  const Scenario back = load_scenario(canon);
  CHECK(back == sc);
  CHECK(serialize(back) == canon);  // canonical form is a fixed point

  // The default document round-trips too (including the infinite snr).
  const Scenario def = load_scenario("");
  CHECK(load_scenario(serialize(def)) == def);
}

TEST_CASE("scenario files load like inline text") {
  const char* path = "scenario_roundtrip_tmp.txt";
  {
    std::ofstream os(path);
    os << "[fault]\nkind = internal_ptp\nlocation_d = 0.5\n";
  }
  const Scenario sc = load_scenario_file(path);
  CHECK(sc.fault.kind == FaultKind::InternalPTP);
  std::remove(path);

  // An unopenable path reports through the same error channel as bad content.
  CHECK_THROWS_AS(load_scenario_file("definitely_missing_file.txt"),
                  scenario_parse_error);
}
