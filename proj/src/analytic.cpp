#include "mtdc/analytic.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "mtdc/modal.hpp"

namespace mtdc {

namespace {

// The closed-form networks are pole-loop reductions (per-pole elements
// doubled, pole-to-pole branches counted once) and their output is the drop
// across a single pole reactor. The orthonormal relay convention reads
// (V_p - V_n)/sqrt(2) = 2 x single-reactor / sqrt(2), hence this factor.
constexpr double kRelayConventionScale = std::numbers::sqrt2;

SFunction source_block(double l_clr, double l_mmc, double r_mmc) {
  return parallel(SFunction::inductor(2.0 * l_clr),
                  add(SFunction::inductor(l_mmc), SFunction::resistor(r_mmc)));
}

// Laplace image of the DC source step: V_dc / s.
SFunction step_source(double v_dc) {
  return {[v_dc](Cplx s) { return v_dc / s; }, "Vdc/s"};
}

struct GroundFaultParts {
  SFunction v_zero;
  SFunction v_line;
};

// Shared shape of the ground-fault expressions: two loop sources feeding the
// coupled mode networks through the series fault block K.
//   v_zero = zsign0 * num/(A + B||K) * (B||K)/Zdiv
//          + zsign1 * num/(B + A||K) * (A||K)/Zdiv
//   v_line = lsign0 * num/(B + A||K) * (A||K)/A  +  lsign1 * num/(A + B||K)
GroundFaultParts ground_fault_parts(const SFunction& num, const SFunction& a,
                                    const SFunction& b, const SFunction& k,
                                    const SFunction& z_div, double zsign0,
                                    double zsign1, double lsign0, double lsign1) {
  const SFunction b_par_k = parallel(b, k);
  const SFunction a_par_k = parallel(a, k);
  const SFunction term_a = div(num, add(a, b_par_k));
  const SFunction term_b = div(num, add(b, a_par_k));
  GroundFaultParts parts;
  parts.v_zero = add(scale(zsign0, mul(term_a, div(b_par_k, z_div))),
                     scale(zsign1, mul(term_b, div(a_par_k, z_div))));
  parts.v_line = add(scale(lsign0, mul(term_b, div(a_par_k, a))),
                     scale(lsign1, term_a));
  return parts;
}

// v_line for the pole-to-pole expressions:
//   sign * [ num/(A + B||Rt)  -  num/(B + A||Rt) * (A||Rt)/A ]
SFunction ptp_line(const SFunction& num, const SFunction& a, const SFunction& b,
                   const SFunction& rt, double sign) {
  const SFunction b_par = parallel(b, rt);
  const SFunction a_par = parallel(a, rt);
  return scale(sign, sub(div(num, add(a, b_par)),
                         mul(div(num, add(b, a_par)), div(a_par, a))));
}

}  // namespace

AnalyticParams analytic_params(const SystemParams& sp, double ptp_alpha) {
  const MmcEquivalent eq = mmc_equivalent(sp.mmc);
  const LineTotals lt = line_totals(sp.line12());
  const auto [l_line, l_zero] = modal_line_inductances(lt.inductance, lt.mutual);
  AnalyticParams p{};
  p.l_clr12 = sp.clr.clr12;
  p.l_clr21 = sp.clr.clr21;
  p.l_clr14 = sp.clr.clr14;
  p.l_clr23 = sp.clr.clr23;
  p.l_mmc1 = eq.inductance;
  p.r_mmc1 = eq.resistance;
  p.l_mmc2 = eq.inductance;
  p.r_mmc2 = eq.resistance;
  p.r_12 = lt.resistance;
  p.l_12_line = l_line;
  p.l_12_zero = l_zero;
  p.v_dc = sp.mmc.dc_link_voltage;
  p.ptp_alpha = ptp_alpha;
  return p;
}

InternalImpedances z_internal(double d, const AnalyticParams& p) {
  if (d < 0.0 || d > 1.0) throw std::invalid_argument("fault location d not in [0, 1]");
  const SFunction src1 = source_block(p.l_clr14, p.l_mmc1, p.r_mmc1);
  const SFunction src2 = source_block(p.l_clr23, p.l_mmc2, p.r_mmc2);
  auto side = [&](const SFunction& src, double l_clr, double frac, double l_mode) {
    return add(add(src, SFunction::inductor(2.0 * (l_clr + frac * l_mode))),
               SFunction::resistor(2.0 * frac * p.r_12));
  };
  InternalImpedances z;
  z.line_left = side(src1, p.l_clr12, d, p.l_12_line);
  z.line_right = side(src2, p.l_clr21, 1.0 - d, p.l_12_line);
  z.zero_left = side(src1, p.l_clr12, d, p.l_12_zero);
  z.zero_right = side(src2, p.l_clr21, 1.0 - d, p.l_12_zero);
  return z;
}

BackwardImpedances z_backward(const AnalyticParams& p) {
  const SFunction src1 = source_block(p.l_clr14, p.l_mmc1, p.r_mmc1);
  const SFunction src2 = source_block(p.l_clr23, p.l_mmc2, p.r_mmc2);
  auto through = [&](double l_mode) {
    return add(add(src2, SFunction::inductor(2.0 * (p.l_clr12 + p.l_clr21 + l_mode))),
               SFunction::resistor(2.0 * p.r_12));
  };
  return {through(p.l_12_line), src1, through(p.l_12_zero)};
}

ForwardImpedances z_forward(const AnalyticParams& p) {
  const SFunction src1 = source_block(p.l_clr14, p.l_mmc1, p.r_mmc1);
  const SFunction src2 = source_block(p.l_clr23, p.l_mmc2, p.r_mmc2);
  auto through = [&](double l_mode) {
    return add(add(src1, SFunction::inductor(2.0 * (p.l_clr12 + p.l_clr21 + l_mode))),
               SFunction::resistor(2.0 * p.r_12));
  };
  return {through(p.l_12_line), src2, through(p.l_12_zero)};
}

ModeTransfer mode_voltage_transfer(FaultKind kind, double d, double r_f,
                                   const AnalyticParams& p) {
  if (kind == FaultKind::None)
    throw std::invalid_argument("mode_voltage_transfer: no fault kind");
  if (r_f < 0.0) throw std::invalid_argument("r_f must be >= 0");
  if (is_internal(kind) && (d < 0.0 || d > 1.0))
    throw std::invalid_argument("fault location d not in [0, 1]");

  const SFunction num = mul(SFunction::inductor(p.l_clr12), step_source(p.v_dc));
  const ModeBoundaryCondition bc = fault_boundary_modal(kind, r_f, p.ptp_alpha);

  ModeTransfer mt;
  mt.kind = kind;

  if (bc.family == FaultFamily::Ground) {
    GroundFaultParts parts;
    switch (kind) {
      case FaultKind::InternalP_PTG:
      case FaultKind::InternalN_PTG: {
        const InternalImpedances z = z_internal(d, p);
        const SFunction k =
            add(parallel(z.zero_left, z.zero_right), SFunction::resistor(bc.coupling_resistance));
        const double zs = (kind == FaultKind::InternalN_PTG) ? -1.0 : 1.0;
        parts = ground_fault_parts(num, z.line_left, z.line_right, k, z.zero_left,
                                   zs, zs, -1.0, 1.0);
        break;
      }
      case FaultKind::ExternalBackwardPTG: {
        const BackwardImpedances z = z_backward(p);
        const SFunction k =
            add(parallel(z.source_local, z.zero_loop), SFunction::resistor(bc.coupling_resistance));
        parts = ground_fault_parts(num, z.line_loop, z.source_local, k, z.zero_loop,
                                   -1.0, -1.0, 1.0, -1.0);
        break;
      }
      case FaultKind::ExternalForwardPTG: {
        const ForwardImpedances z = z_forward(p);
        const SFunction k =
            add(parallel(z.source_remote, z.zero_loop), SFunction::resistor(bc.coupling_resistance));
        parts = ground_fault_parts(num, z.line_loop, z.source_remote, k, z.zero_loop,
                                   1.0, 1.0, -1.0, 1.0);
        break;
      }
      default:
        throw std::invalid_argument("unsupported ground-fault kind");
    }
    mt.v_zero = scale(kRelayConventionScale, parts.v_zero);
    mt.v_line = scale(kRelayConventionScale, parts.v_line);
    return mt;
  }

  // Pole-to-pole family: the zero-mode network is unexcited.
  const SFunction rt = SFunction::resistor(bc.coupling_resistance);
  SFunction line;
  switch (kind) {
    case FaultKind::InternalPTP: {
      const InternalImpedances z = z_internal(d, p);
      line = ptp_line(num, z.line_left, z.line_right, rt, 1.0);
      break;
    }
    case FaultKind::ExternalBackwardPTP: {
      const BackwardImpedances z = z_backward(p);
      line = ptp_line(num, z.line_loop, z.source_local, rt, -1.0);
      break;
    }
    case FaultKind::ExternalForwardPTP: {
      const ForwardImpedances z = z_forward(p);
      line = ptp_line(num, z.line_loop, z.source_remote, rt, 1.0);
      break;
    }
    default:
      throw std::invalid_argument("unsupported pole-to-pole kind");
  }
  mt.v_zero = SFunction::constant(0.0);
  mt.v_line = scale(kRelayConventionScale, line);
  return mt;
}

PolaritySignature predict_signature(FaultKind kind, double d, double r_f,
                                    const AnalyticParams& p,
                                    const SignatureSettings& ss) {
  const ModeTransfer mt = mode_voltage_transfer(kind, d, r_f, p);
  const std::vector<double> grid = time_grid(ss.t_min, ss.window, ss.grid_points);
  const Trace line = invert_laplace(mt.v_line, grid).primary;
  const Trace zero = invert_laplace(mt.v_zero, grid).primary;
  const double dom_line = signed_extremum(line, 0, line.size() - 1);
  const double dom_zero = signed_extremum(zero, 0, zero.size() - 1);
  PolaritySignature sig;
  sig.sign_zero = std::fabs(dom_zero) <= ss.e_set ? 0 : (dom_zero > 0.0 ? 1 : -1);
  sig.sign_line = dom_line >= 0.0 ? 1 : -1;
  return sig;
}

PolaritySignature canonical_signature(FaultKind kind) {
  switch (kind) {
    case FaultKind::InternalP_PTG: return {+1, +1};
    case FaultKind::InternalN_PTG: return {-1, +1};
    case FaultKind::ExternalBackwardPTG: return {-1, -1};
    case FaultKind::ExternalForwardPTG: return {+1, +1};
    case FaultKind::InternalPTP: return {0, +1};
    case FaultKind::ExternalBackwardPTP: return {0, -1};
    case FaultKind::ExternalForwardPTP: return {0, +1};
    default:
      throw std::invalid_argument("no canonical signature for this kind");
  }
}

}  // namespace mtdc
