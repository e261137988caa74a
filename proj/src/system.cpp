#include "mtdc/system.hpp"

#include <stdexcept>

namespace mtdc {

MmcEquivalent mmc_equivalent(const MmcParams& p) {
  if (p.arm_inductance <= 0.0) throw std::invalid_argument("arm_inductance must be > 0");
  if (p.sm_capacitance <= 0.0) throw std::invalid_argument("sm_capacitance must be > 0");
  if (p.sm_count < 1) throw std::invalid_argument("sm_count must be >= 1");
  if (p.arm_resistance < 0.0) throw std::invalid_argument("arm_resistance must be >= 0");
  if (p.dc_link_voltage <= 0.0) throw std::invalid_argument("dc_link_voltage must be > 0");
  return {2.0 / 3.0 * p.arm_resistance, 2.0 / 3.0 * p.arm_inductance,
          6.0 * p.sm_capacitance / static_cast<double>(p.sm_count)};
}

LineTotals line_totals(const LineParams& lp) {
  if (lp.length <= 0.0) throw std::invalid_argument("line length must be > 0");
  if (lp.r_per_m < 0.0 || lp.l_per_m < 0.0 || lp.m_per_m < 0.0)
    throw std::invalid_argument("per-meter line values must be >= 0");
  return {lp.r_per_m * lp.length, lp.l_per_m * lp.length, lp.m_per_m * lp.length};
}

Topology make_topology(const SystemParams& sp) {
  Topology t;
  t.terminals = {sp.mmc, sp.mmc, sp.mmc, sp.mmc};
  t.lines = {
      {"12", 1, 2, sp.line12(), sp.clr.clr12, sp.clr.clr21},
      {"14", 1, 4, sp.line14(), sp.clr.clr14, 0.0},
      {"23", 2, 3, sp.line23(), sp.clr.clr23, 0.0},
  };
  const double c_mmc = mmc_equivalent(sp.mmc).capacitance;
  t.c14 = sp.c14 < 0.0 ? c_mmc : sp.c14;
  t.c23 = sp.c23 < 0.0 ? c_mmc : sp.c23;
  t.relay_bus = 1;
  t.relay_line = "12";
  return t;
}

bool is_internal(FaultKind k) {
  return k == FaultKind::InternalPTP || k == FaultKind::InternalP_PTG ||
         k == FaultKind::InternalN_PTG;
}

bool is_external(FaultKind k) {
  return k == FaultKind::ExternalForwardPTG || k == FaultKind::ExternalBackwardPTG ||
         k == FaultKind::ExternalForwardPTP || k == FaultKind::ExternalBackwardPTP;
}

bool is_ptp(FaultKind k) {
  return k == FaultKind::InternalPTP || k == FaultKind::ExternalForwardPTP ||
         k == FaultKind::ExternalBackwardPTP;
}

bool is_ground(FaultKind k) {
  return k == FaultKind::InternalP_PTG || k == FaultKind::InternalN_PTG ||
         k == FaultKind::ExternalForwardPTG || k == FaultKind::ExternalBackwardPTG;
}

std::string to_string(FaultKind k) {
  switch (k) {
    case FaultKind::None: return "none";
    case FaultKind::InternalPTP: return "internal_ptp";
    case FaultKind::InternalP_PTG: return "internal_p_ptg";
    case FaultKind::InternalN_PTG: return "internal_n_ptg";
    case FaultKind::ExternalForwardPTG: return "external_forward_ptg";
    case FaultKind::ExternalBackwardPTG: return "external_backward_ptg";
    case FaultKind::ExternalForwardPTP: return "external_forward_ptp";
    case FaultKind::ExternalBackwardPTP: return "external_backward_ptp";
  }
  return "none";
}

std::optional<FaultKind> fault_kind_from_string(const std::string& s) {
  for (FaultKind k : {FaultKind::None, FaultKind::InternalPTP, FaultKind::InternalP_PTG,
                      FaultKind::InternalN_PTG, FaultKind::ExternalForwardPTG,
                      FaultKind::ExternalBackwardPTG, FaultKind::ExternalForwardPTP,
                      FaultKind::ExternalBackwardPTP}) {
    if (to_string(k) == s) return k;
  }
  return std::nullopt;
}

void validate(const FaultScenario& fs) {
  if (fs.r_f < 0.0) throw std::invalid_argument("r_f must be >= 0");
  if (fs.t_fault < 0.0) throw std::invalid_argument("t_fault must be >= 0");
  if (is_internal(fs.kind)) {
    if (!fs.location_d)
      throw std::invalid_argument("location_d is required for internal faults");
    if (*fs.location_d < 0.0 || *fs.location_d > 1.0)
      throw std::invalid_argument("location_d must be in [0, 1]");
  } else if (fs.location_d) {
    throw std::invalid_argument("location_d is only valid for internal faults");
  }
}

}  // namespace mtdc
