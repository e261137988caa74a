#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <string>

#include "mtdc/simulate.hpp"
#include "mtdc/trace.hpp"

namespace mtdc {

struct RelaySettings {
  double u_set = 100e3;   // volt, trigger threshold on |dV_CLR|
  double e_set = 10e3;    // volt, PTP-vs-PTG zero-mode threshold
  double i_set = 2e3;     // ampere, internal-vs-forward current threshold
  int rolling_window = 50;            // samples
  double delta_window = 0.5e-3;       // second, voltage-delta window
  double current_delta_window = 2e-3; // second, current-delta window (spans the
                                      // evidence horizon: change since inception)
  double polarity_window = 2e-3;      // second, evidence horizon post-trigger
  double sample_rate = 100e3;         // hertz, relay sampling
  bool filter_enabled = true;         // rolling-mean conditioning
};

enum class Verdict {
  NoFault,
  InternalPTP,
  InternalP_PTG,
  InternalN_PTG,
  ExternalForward,
  ExternalBackward,
};
std::string to_string(Verdict v);

struct RelayEvidence {
  double trigger_peak = 0.0;     // volt, max |dV_CLR|
  double trigger_time = std::numeric_limits<double>::quiet_NaN();  // second
  double dominant_zero = 0.0;    // volt, signed dominant V_L120
  double dominant_line = 0.0;    // volt, signed dominant V_L121
  double current_delta = 0.0;    // ampere, max |di| on the evaluated pole
  double decision_time = std::numeric_limits<double>::quiet_NaN();  // second
  double latency_ms = std::numeric_limits<double>::quiet_NaN();
  bool tie_break_warning = false;
};

struct RelayDecision {
  Verdict verdict = Verdict::NoFault;
  RelayEvidence evidence;
};

// Relay-rate, conditioned measurement channels.
struct RelayInputs {
  Trace v_clr_p, v_clr_n;  // volt
  Trace i_p, i_n;          // ampere
};

// Decimates the simulator measurements to the relay sample rate, injects
// measurement noise (snr_db = +inf for none; per-channel sub-seeds derived
// from `seed`; signal power taken over the post-fault window) and applies
// the rolling-mean filter when enabled.
RelayInputs condition_measurements(const MeasurementSet& ms, const RelaySettings& rs,
                                   double snr_db, std::uint64_t seed);

// Five-step decision procedure:
//   1. trigger on |dV_CLR| (windowed delta of the reactor pair difference),
//   2. family split on dominant |V_L120| vs e_set,
//   3. backward rejection on mode polarities,
//   4. direction on max |di| of the faulted pole vs I_set,
//   5. internal subtype from the signatures.
// Threshold equality counts as violation. Total: every input yields exactly
// one verdict.
RelayDecision classify(const RelayInputs& in, const RelaySettings& rs);

// One structured report row (CSV) per decision.
std::string decision_csv_header();
std::string decision_csv_row(const std::string& scenario_id, const RelayDecision& d);
std::string decision_text(const std::string& scenario_id, const RelayDecision& d);

}  // namespace mtdc
