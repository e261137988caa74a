#pragma once

#include <vector>

#include "mtdc/laplace.hpp"
#include "mtdc/sdomain.hpp"
#include "mtdc/system.hpp"

namespace mtdc {

// Element values feeding the closed-form mode-voltage expressions. All
// impedances are composed in pole-loop units (per-pole elements doubled,
// pole-to-pole branches counted once), matching the network reductions the
// expressions come from.
struct AnalyticParams {
  double l_clr12, l_clr21, l_clr14, l_clr23;  // henry
  double l_mmc1, r_mmc1;                      // henry, ohm
  double l_mmc2, r_mmc2;
  double r_12;        // ohm, full line-12 per-pole resistance
  double l_12_line;   // henry, line-mode per-pole inductance (L - M)
  double l_12_zero;   // henry, zero-mode per-pole inductance (L + M)
  double v_dc;        // volt, pole-to-pole
  double ptp_alpha = 0.5;  // effective PTP line-mode fault resistance factor
};

AnalyticParams analytic_params(const SystemParams& sp, double ptp_alpha = 0.5);

// Impedance set for a fault on line 12 at fraction d from bus 1. "left" is
// the relay (bus-1) side loop, "right" the remote (bus-2) side; the zero_*
// variants swap the line-mode inductance for the zero-mode one.
struct InternalImpedances {
  SImpedance line_left, line_right, zero_left, zero_right;
};
InternalImpedances z_internal(double d, const AnalyticParams& p);

// Impedance set for a fault behind the local bus (on line 14): the loop
// through the far source over the full line 12, the local source block, and
// the zero-mode variant of the loop.
struct BackwardImpedances {
  SImpedance line_loop, source_local, zero_loop;
};
BackwardImpedances z_backward(const AnalyticParams& p);

// Mirror image for a fault beyond the remote bus: same loop structure seen
// from the other terminal.
struct ForwardImpedances {
  SImpedance line_loop, source_remote, zero_loop;
};
ForwardImpedances z_forward(const AnalyticParams& p);

// Laplace images of the relay-point mode voltages for one contingency.
// Voltages are in the orthonormal relay convention (see relay_tap): the
// pole-loop expressions are rescaled by sqrt(2) so both engines agree.
struct ModeTransfer {
  FaultKind kind;
  SFunction v_zero;  // V_L120(s)
  SFunction v_line;  // V_L121(s)
};

// Assembles the transfer pair for the given contingency. The DC source
// enters as a step (V_dc/s). d is required for internal kinds; kind == None
// or missing d throws std::invalid_argument.
ModeTransfer mode_voltage_transfer(FaultKind kind, double d, double r_f,
                                   const AnalyticParams& p);

struct PolaritySignature {
  int sign_zero;  // -1, 0, +1  (0: dominant |V_L120| at or below e_set)
  int sign_line;  // -1, +1
};

struct SignatureSettings {
  double e_set = 10e3;            // volt
  double window = 2e-3;           // second, post-excitation horizon
  double t_min = 10e-6;           // second, first evaluated instant
  std::size_t grid_points = 400;  // inversion grid resolution
};

// Inverts the transfer pair over (t_min, window] and extracts the signed
// dominant extremum of each mode. Inversion runs both methods and throws
// numerical_instability_error on disagreement.
PolaritySignature predict_signature(FaultKind kind, double d, double r_f,
                                    const AnalyticParams& p,
                                    const SignatureSettings& ss = {});

// Expected Table I / II signature for a contingency (ground truth).
PolaritySignature canonical_signature(FaultKind kind);

}  // namespace mtdc
