#include "mtdc/modal.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace mtdc {

namespace {
constexpr double kInvSqrt2 = std::numbers::sqrt2 / 2.0;
}

ModeQuantities phase_to_modal(const PoleQuantities& q) {
  return {(q.p - q.n) * kInvSqrt2, (q.p + q.n) * kInvSqrt2};
}

PoleQuantities modal_to_phase(const ModeQuantities& m) {
  return {(m.line + m.zero) * kInvSqrt2, (m.zero - m.line) * kInvSqrt2};
}

std::pair<Trace, Trace> phase_to_modal(const Trace& p, const Trace& n) {
  if (p.size() != n.size() || p.dt != n.dt || p.t0 != n.t0)
    throw std::invalid_argument("phase_to_modal: pole traces are not aligned");
  Trace line = p, zero = p;
  line.name = p.name + "_line_mode";
  zero.name = p.name + "_zero_mode";
  for (std::size_t i = 0; i < p.size(); ++i) {
    const ModeQuantities m = phase_to_modal({p.samples[i], n.samples[i]});
    line.samples[i] = m.line;
    zero.samples[i] = m.zero;
  }
  return {line, zero};
}

std::pair<double, double> modal_line_inductances(double inductance, double mutual) {
  if (mutual < 0.0) throw std::invalid_argument("mutual inductance must be >= 0");
  if (mutual >= inductance)
    throw std::invalid_argument("mutual inductance must be below self inductance");
  return {inductance - mutual, inductance + mutual};
}

ModeBoundaryCondition fault_boundary_modal(FaultKind kind, double r_f, double alpha) {
  if (kind == FaultKind::None)
    throw std::invalid_argument("fault_boundary_modal: no fault kind");
  if (r_f < 0.0) throw std::invalid_argument("r_f must be >= 0");
  if (is_ground(kind)) {
    const int sign = (kind == FaultKind::InternalN_PTG) ? -1 : +1;
    return {FaultFamily::Ground, 2.0 * r_f, true, sign};
  }
  return {FaultFamily::PoleToPole, alpha * r_f, false, +1};
}

}  // namespace mtdc
