#pragma once

#include <utility>

#include "mtdc/system.hpp"
#include "mtdc/trace.hpp"

namespace mtdc {

struct PoleQuantities {
  double p;  // positive pole
  double n;  // negative pole
};

struct ModeQuantities {
  double line;  // line mode
  double zero;  // zero mode
};

// Orthonormal pole-to-mode transform:
//   x_l = (x_p - x_n)/sqrt(2),  x_0 = (x_p + x_n)/sqrt(2).
// Involutive (the matrix is its own inverse) and energy preserving.
ModeQuantities phase_to_modal(const PoleQuantities& q);
PoleQuantities modal_to_phase(const ModeQuantities& m);

// Sample-wise transform of a pole-pair of traces.
std::pair<Trace, Trace> phase_to_modal(const Trace& p, const Trace& n);

// (L_l, L_0) = (L - M, L + M). Throws std::invalid_argument when M < 0 or
// M >= L (non-physical line mode).
std::pair<double, double> modal_line_inductances(double inductance, double mutual);

enum class FaultFamily { Ground, PoleToPole };

// How the two mode networks are stitched together at the fault point.
struct ModeBoundaryCondition {
  FaultFamily family;
  // Ground faults: the line-mode and zero-mode networks are connected in
  // series through this resistance (2*R_f). Pole-to-pole faults: the
  // line-mode network alone is terminated by it (alpha*R_f).
  double coupling_resistance;
  bool zero_mode_excited;      // false for pole-to-pole faults (I_f0 = 0)
  int line_mode_source_sign;   // -1 for N-pole ground faults, else +1
};

// Modal constraint pair for a fault kind. kind == None throws
// std::invalid_argument. alpha is the effective pole-to-pole line-mode
// fault-resistance factor (0.5 convention-consistent, 1.0 literal).
ModeBoundaryCondition fault_boundary_modal(FaultKind kind, double r_f, double alpha = 0.5);

}  // namespace mtdc
