#pragma once

#include <string>
#include <vector>

#include "mtdc/system.hpp"

namespace mtdc {

enum class BranchKind {
  Converter,    // reduced converter branch (R/2, L/2, 2C per pole)
  Reactor,      // current limiting reactor
  LineSegment,  // R-L line segment (mutual-coupled pole pair)
  TerminalCap,  // equivalent DC-link terminal capacitance
  Fault,        // fault resistance branch
};

// One series R-L-C-emf branch between two nodes; current is positive from
// node_a to node_b, and the branch voltage is
//   v_ab = R i + L di/dt (+ mutual terms) + q/C + e(t).
struct Branch {
  std::string name;
  BranchKind kind;
  int node_a;
  int node_b;
  double resistance = 0.0;     // ohm
  double inductance = 0.0;     // henry (self)
  double capacitance = 0.0;    // farad; 0 means no capacitor in the branch
  double initial_charge = 0.0; // coulomb
  double emf = 0.0;            // volt (a-side positive), 0 means none
  bool emf_ramped = false;     // emf follows the configured source ramp
  int mutual_with = -1;        // index of the coupled branch, or -1
  double mutual = 0.0;         // henry
};

struct NetworkModel {
  std::vector<std::string> nodes;  // nodes[0] is ground
  std::vector<Branch> branches;

  // Tap indices (branch unless noted); -1 when absent.
  int clr12_p = -1, clr12_n = -1;     // relay reactors
  int fault_branch = -1;
  int fault_node_p = -1, fault_node_n = -1;  // node indices at the fault point
  bool fault_on_positive_pole = true;        // ground faults: faulted pole

  // Source ramp (stiff mode): every ramped emf is scaled by
  // 1 + fraction * clamp(t / duration, 0, 1).
  double ramp_fraction = 0.0;
  double ramp_duration = 0.0;

  double prefault_line_current = 0.0;  // ampere, standing line-12 transfer
  bool stiff_sources = false;
};

// Structural description used by the golden-inventory check.
struct NetworkInventory {
  int nodes = 0;
  int branches = 0;
  int converter_branches = 0;
  int reactor_branches = 0;
  int line_segment_branches = 0;
  int terminal_cap_branches = 0;
  int fault_branches = 0;
  int capacitor_elements = 0;  // branches with C > 0
  int emf_sources = 0;         // branches with a non-zero emf
  int mutual_pairs = 0;
  bool operator==(const NetworkInventory&) const = default;
};
NetworkInventory inventory(const NetworkModel& net);
std::string to_string(const NetworkInventory& inv);

// Builds the two-pole equivalent network for the given topology and fault.
// Line 12 is always split into two coupled segments (at location_d for
// internal faults, at 0.5 otherwise) so the structure is fault-independent.
// In stiff-source mode every DC-link capacitance becomes an ideal source and
// the remote line segments (14, 23) collapse to plain wires, mirroring the
// source blocks of the closed-form expressions.
// Throws std::invalid_argument on inconsistent scenarios (e.g. a backward
// fault in stiff-source mode, which would short an ideal source).
NetworkModel build_network(const Topology& topo, const FaultScenario& fault,
                           const SimSettings& sim);

}  // namespace mtdc
