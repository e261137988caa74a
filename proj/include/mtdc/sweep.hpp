#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mtdc/scenario.hpp"

namespace mtdc {

enum class SweepMode { Simulate, Analytic, Both };
std::string to_string(SweepMode m);

struct SweepSpec {
  std::vector<FaultKind> kinds;
  std::vector<double> location_d = {0.1, 0.5, 0.9};  // internal kinds only
  std::vector<double> r_f = {0.0, 100.0, 200.0};
  std::vector<double> clr = {0.09, 0.13, 0.17};  // applied to every reactor
  std::vector<double> snr_db = {std::numeric_limits<double>::infinity()};
  std::vector<std::uint64_t> seeds = {1};
  SweepMode mode = SweepMode::Simulate;
  int workers = 1;
  Scenario base;  // everything not swept

  std::size_t grid_size() const;
};

struct SweepRow {
  FaultKind kind;
  double location_d;  // NaN for external kinds
  double r_f;
  double clr;
  double snr_db;
  std::uint64_t seed;
  // Simulation evidence (NaN when mode == Analytic).
  double trigger_peak = 0.0;
  double dominant_zero = 0.0;
  double dominant_line = 0.0;
  double current_delta = 0.0;
  double trigger_time = 0.0;
  double decision_time = 0.0;
  Verdict verdict = Verdict::NoFault;
  Verdict expected = Verdict::NoFault;
  // Analytic signature (sign values; 9 = not evaluated).
  int analytic_sign_zero = 9;
  int analytic_sign_line = 9;
  int expected_sign_zero = 9;
  int expected_sign_line = 9;
  bool pass = false;
  std::string error;  // per-point failure, recorded without aborting the sweep
};

struct SweepReport {
  std::vector<SweepRow> rows;  // sorted by (kind, d, r_f, clr, snr, seed)
};

// Ground-truth verdict for a scenario kind.
Verdict expected_verdict(FaultKind kind);

// Executes the Cartesian grid (workers > 1 runs points concurrently; the
// report order is independent of scheduling). Per-point errors land in the
// row's error field.
SweepReport run_sweep(const SweepSpec& spec);

std::string report_csv(const SweepReport& report);

// Table-shaped pivot of trigger peaks: one row per (kind, d), one column per
// (r_f, clr) combination. Values in volts.
std::string pivot_csv(const SweepReport& report);

}  // namespace mtdc
