#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace mtdc {

// ---------------------------------------------------------------- converters

struct MmcParams {
  double arm_resistance = 0.85;       // ohm
  double arm_inductance = 0.1;        // henry
  double sm_capacitance = 1.5e-3;     // farad
  int sm_count = 200;                 // sub-modules per arm
  double dc_link_voltage = 1000e3;    // volt, pole-to-pole (+/- 500 kV)
};

struct MmcEquivalent {
  double resistance;   // ohm
  double inductance;   // henry
  double capacitance;  // farad
};

// Reduced DC-side equivalent of one converter. Throws std::invalid_argument
// on non-positive inductance, capacitance, sub-module count or voltage.
MmcEquivalent mmc_equivalent(const MmcParams& p);

// ---------------------------------------------------------------------- lines

struct LineParams {
  double length = 20e3;        // meter
  double r_per_m = 4.116e-5;   // ohm/meter (per pole)
  double l_per_m = 1.256e-5;   // henry/meter (per pole, self)
  double m_per_m = 0.4 * 1.256e-5;  // henry/meter (pole-to-pole mutual)
};

struct LineTotals {
  double resistance;  // ohm
  double inductance;  // henry (self)
  double mutual;      // henry
};

// Totals = per-meter values x length. Throws std::invalid_argument on
// non-positive length or negative per-meter values.
LineTotals line_totals(const LineParams& lp);

// ------------------------------------------------------------------ topology

struct ClrSet {
  double clr12 = 0.13;  // henry, bus-1 end of line 12 (relay reactor)
  double clr21 = 0.13;  // bus-2 end of line 12
  double clr14 = 0.13;  // bus-1 end of line 14
  double clr23 = 0.13;  // bus-2 end of line 23
};

// Whole-grid parameter set (element values of the reduced four-terminal
// network: two explicit converters, three lines, terminal capacitances).
struct SystemParams {
  MmcParams mmc;  // converters are controlled to the same voltage; one record
  ClrSet clr;
  double line_mutual_ratio = 0.4;  // m_per_m = ratio * l_per_m
  double line_r_per_m = 4.116e-5;
  double line_l_per_m = 1.256e-5;
  double line12_length = 20e3;  // meter
  double line14_length = 20e3;
  double line23_length = 20e3;
  // Terminal capacitances at the remote ends of lines 14 / 23.
  // Negative means "auto": use the adjacent converter's equivalent C.
  double c14 = -1.0;
  double c23 = -1.0;

  LineParams line12() const {
    return {line12_length, line_r_per_m, line_l_per_m, line_mutual_ratio * line_l_per_m};
  }
  LineParams line14() const {
    return {line14_length, line_r_per_m, line_l_per_m, line_mutual_ratio * line_l_per_m};
  }
  LineParams line23() const {
    return {line23_length, line_r_per_m, line_l_per_m, line_mutual_ratio * line_l_per_m};
  }
};

struct TopologyLine {
  std::string id;      // "12", "14", "23"
  int from_bus;
  int to_bus;
  LineParams params;
  double clr_from;     // henry at from_bus end
  double clr_to;       // henry at to_bus end
};

struct Topology {
  std::array<MmcParams, 4> terminals;  // buses 1..4 (index 0..3)
  std::vector<TopologyLine> lines;     // 12, 14, 23
  double c14;  // farad, equivalent terminal capacitance behind line 14
  double c23;  // farad, behind line 23
  int relay_bus = 1;
  std::string relay_line = "12";
};

// Default four-terminal arrangement: lines 12, 14, 23 with per-end reactors,
// relay at the bus-1 end of line 12, capacitance equivalents behind lines
// 14 and 23. Resolves "auto" terminal capacitances.
Topology make_topology(const SystemParams& sp);

// ---------------------------------------------------------------- fault spec

enum class FaultKind {
  None,
  InternalPTP,
  InternalP_PTG,
  InternalN_PTG,
  ExternalForwardPTG,
  ExternalBackwardPTG,
  ExternalForwardPTP,
  ExternalBackwardPTP,
};

bool is_internal(FaultKind k);
bool is_external(FaultKind k);
bool is_ptp(FaultKind k);      // pole-to-pole family
bool is_ground(FaultKind k);   // pole-to-ground family
std::string to_string(FaultKind k);
std::optional<FaultKind> fault_kind_from_string(const std::string& s);

struct FaultScenario {
  FaultKind kind = FaultKind::None;
  std::optional<double> location_d;  // fraction along line 12, internal only
  double r_f = 0.0;                  // ohm
  double t_fault = 1e-3;             // second
};

// Checks the kind/location/R_f invariants; throws std::invalid_argument with
// a field name on violation.
void validate(const FaultScenario& fs);

// --------------------------------------------------------------- sim settings

struct SimSettings {
  double dt = 2e-6;        // second
  double t_end = 10e-3;    // second
  bool stiff_sources = false;   // replace DC-link capacitors by ideal sources
  double ramp_fraction = 0.0;   // +/- fractional source ramp (stiff mode only)
  double ramp_duration = 0.0;   // second; 0 disables the ramp
  double prefault_current = 0.0;  // ampere on line 12 (stiff mode only)
  double ptp_alpha = 0.5;  // effective PTP line-mode fault resistance factor
};

}  // namespace mtdc
