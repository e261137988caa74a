#include "mtdc/network.hpp"

#include <sstream>
#include <stdexcept>

namespace mtdc {

namespace {

struct Builder {
  NetworkModel net;

  int node(const std::string& name) {
    net.nodes.push_back(name);
    return static_cast<int>(net.nodes.size()) - 1;
  }

  int branch(Branch b) {
    net.branches.push_back(std::move(b));
    return static_cast<int>(net.branches.size()) - 1;
  }

  void couple(int a, int b, double mutual) {
    if (mutual == 0.0) return;
    net.branches[a].mutual_with = b;
    net.branches[a].mutual = mutual;
    net.branches[b].mutual_with = a;
    net.branches[b].mutual = mutual;
  }
};

}  // namespace

NetworkInventory inventory(const NetworkModel& net) {
  NetworkInventory inv;
  inv.nodes = static_cast<int>(net.nodes.size());
  inv.branches = static_cast<int>(net.branches.size());
  int coupled = 0;
  for (const Branch& b : net.branches) {
    switch (b.kind) {
      case BranchKind::Converter: ++inv.converter_branches; break;
      case BranchKind::Reactor: ++inv.reactor_branches; break;
      case BranchKind::LineSegment: ++inv.line_segment_branches; break;
      case BranchKind::TerminalCap: ++inv.terminal_cap_branches; break;
      case BranchKind::Fault: ++inv.fault_branches; break;
    }
    if (b.capacitance > 0.0) ++inv.capacitor_elements;
    if (b.emf != 0.0) ++inv.emf_sources;
    if (b.mutual_with >= 0) ++coupled;
  }
  inv.mutual_pairs = coupled / 2;
  return inv;
}

std::string to_string(const NetworkInventory& inv) {
  std::ostringstream os;
  os << "nodes=" << inv.nodes << " branches=" << inv.branches
     << " converters=" << inv.converter_branches << " reactors=" << inv.reactor_branches
     << " line_segments=" << inv.line_segment_branches
     << " terminal_caps=" << inv.terminal_cap_branches << " faults=" << inv.fault_branches
     << " capacitors=" << inv.capacitor_elements << " sources=" << inv.emf_sources
     << " mutual_pairs=" << inv.mutual_pairs;
  return os.str();
}

NetworkModel build_network(const Topology& topo, const FaultScenario& fault,
                           const SimSettings& sim) {
  validate(fault);
  if (sim.ramp_duration > 0.0 && !sim.stiff_sources)
    throw std::invalid_argument("source ramp requires stiff_sources mode");
  if (sim.prefault_current != 0.0 && !sim.stiff_sources)
    throw std::invalid_argument("prefault_current requires stiff_sources mode");
  if (sim.stiff_sources && (fault.kind == FaultKind::ExternalBackwardPTG ||
                            fault.kind == FaultKind::ExternalBackwardPTP))
    throw std::invalid_argument(
        "backward faults are not representable in stiff-source mode (the fault "
        "would close across an ideal source); use capacitor mode");

  const TopologyLine* line12 = nullptr;
  const TopologyLine* line14 = nullptr;
  const TopologyLine* line23 = nullptr;
  for (const TopologyLine& l : topo.lines) {
    if (l.id == "12") line12 = &l;
    if (l.id == "14") line14 = &l;
    if (l.id == "23") line23 = &l;
  }
  if (!line12 || !line14 || !line23)
    throw std::invalid_argument("topology must contain lines 12, 14 and 23");

  const MmcEquivalent eq1 = mmc_equivalent(topo.terminals[0]);
  const MmcEquivalent eq2 = mmc_equivalent(topo.terminals[1]);
  const double v_pole = topo.terminals[0].dc_link_voltage / 2.0;

  Builder bld;
  bld.net.stiff_sources = sim.stiff_sources;
  bld.net.ramp_fraction = sim.ramp_duration > 0.0 ? sim.ramp_fraction : 0.0;
  bld.net.ramp_duration = sim.ramp_duration;
  bld.net.prefault_line_current = sim.prefault_current;

  const int gnd = bld.node("gnd");
  (void)gnd;
  const int bus1p = bld.node("bus1_p"), bus1n = bld.node("bus1_n");
  const int bus2p = bld.node("bus2_p"), bus2n = bld.node("bus2_n");
  const int a12p = bld.node("line12_near_p"), a12n = bld.node("line12_near_n");
  const int m12p = bld.node("line12_fault_p"), m12n = bld.node("line12_fault_n");
  const int b12p = bld.node("line12_far_p"), b12n = bld.node("line12_far_n");
  const int j14p = bld.node("line14_near_p"), j14n = bld.node("line14_near_n");
  const int t14p = bld.node("line14_term_p"), t14n = bld.node("line14_term_n");
  const int j23p = bld.node("line23_near_p"), j23n = bld.node("line23_near_n");
  const int t23p = bld.node("line23_term_p"), t23n = bld.node("line23_term_n");

  // Converter branches: per-pole half of the pole-to-pole equivalent
  // (R/2, L/2, 2C), halves pre-charged to +/- V_dc/2.
  auto converter = [&](const std::string& name, int bus, const MmcEquivalent& eq,
                       double pole_sign) {
    Branch b{name, BranchKind::Converter, bus, 0};
    b.resistance = eq.resistance / 2.0;
    b.inductance = eq.inductance / 2.0;
    if (sim.stiff_sources) {
      b.emf = pole_sign * v_pole;
      b.emf_ramped = true;
    } else {
      b.capacitance = 2.0 * eq.capacitance;
      b.initial_charge = b.capacitance * pole_sign * v_pole;
    }
    return bld.branch(b);
  };
  converter("mmc1_p", bus1p, eq1, +1.0);
  converter("mmc1_n", bus1n, eq1, -1.0);
  converter("mmc2_p", bus2p, eq2, +1.0);
  converter("mmc2_n", bus2n, eq2, -1.0);

  auto reactor = [&](const std::string& name, int from, int to, double henry) {
    Branch b{name, BranchKind::Reactor, from, to};
    b.inductance = henry;
    return bld.branch(b);
  };

  auto segment = [&](const std::string& name, int from, int to, double r, double l) {
    Branch b{name, BranchKind::LineSegment, from, to};
    b.resistance = r;
    b.inductance = l;
    return bld.branch(b);
  };

  auto terminal_cap = [&](const std::string& name, int from, double farad,
                          double pole_sign) {
    Branch b{name, BranchKind::TerminalCap, from, 0};
    if (sim.stiff_sources) {
      b.emf = pole_sign * v_pole;
      b.emf_ramped = true;
    } else {
      b.capacitance = 2.0 * farad;
      b.initial_charge = b.capacitance * pole_sign * v_pole;
    }
    return bld.branch(b);
  };

  // Line 12 with its reactor pair; always split so the inventory is
  // fault-independent.
  const double d = is_internal(fault.kind) ? *fault.location_d : 0.5;
  const LineTotals lt12 = line_totals(line12->params);
  bld.net.clr12_p = reactor("clr12_p", bus1p, a12p, line12->clr_from);
  bld.net.clr12_n = reactor("clr12_n", bus1n, a12n, line12->clr_from);
  const int s12ap = segment("line12_near_seg_p", a12p, m12p, d * lt12.resistance,
                            d * lt12.inductance);
  const int s12an = segment("line12_near_seg_n", a12n, m12n, d * lt12.resistance,
                            d * lt12.inductance);
  bld.couple(s12ap, s12an, d * lt12.mutual);
  const int s12bp = segment("line12_far_seg_p", m12p, b12p, (1.0 - d) * lt12.resistance,
                            (1.0 - d) * lt12.inductance);
  const int s12bn = segment("line12_far_seg_n", m12n, b12n, (1.0 - d) * lt12.resistance,
                            (1.0 - d) * lt12.inductance);
  bld.couple(s12bp, s12bn, (1.0 - d) * lt12.mutual);
  reactor("clr21_p", b12p, bus2p, line12->clr_to);
  reactor("clr21_n", b12n, bus2n, line12->clr_to);

  // Line 14 behind the bus-1 reactor pair, terminated by the equivalent
  // capacitance. In stiff mode the segment collapses so the local source
  // block is exactly reactor || converter.
  const LineTotals lt14 = line_totals(line14->params);
  reactor("clr14_p", bus1p, j14p, line14->clr_from);
  reactor("clr14_n", bus1n, j14n, line14->clr_from);
  const bool collapse = sim.stiff_sources;
  const int l14p = segment("line14_seg_p", j14p, t14p, collapse ? 0.0 : lt14.resistance,
                           collapse ? 0.0 : lt14.inductance);
  const int l14n = segment("line14_seg_n", j14n, t14n, collapse ? 0.0 : lt14.resistance,
                           collapse ? 0.0 : lt14.inductance);
  bld.couple(l14p, l14n, collapse ? 0.0 : lt14.mutual);
  terminal_cap("term14_p", t14p, topo.c14, +1.0);
  terminal_cap("term14_n", t14n, topo.c14, -1.0);

  // Line 23 behind the bus-2 reactor pair.
  const LineTotals lt23 = line_totals(line23->params);
  reactor("clr23_p", bus2p, j23p, line23->clr_from);
  reactor("clr23_n", bus2n, j23n, line23->clr_from);
  const int l23p = segment("line23_seg_p", j23p, t23p, collapse ? 0.0 : lt23.resistance,
                           collapse ? 0.0 : lt23.inductance);
  const int l23n = segment("line23_seg_n", j23n, t23n, collapse ? 0.0 : lt23.resistance,
                           collapse ? 0.0 : lt23.inductance);
  bld.couple(l23p, l23n, collapse ? 0.0 : lt23.mutual);
  terminal_cap("term23_p", t23p, topo.c23, +1.0);
  terminal_cap("term23_n", t23n, topo.c23, -1.0);

  // Fault branch (the switch closes during simulation).
  if (fault.kind != FaultKind::None) {
    int fa = -1, fb = -1;
    switch (fault.kind) {
      case FaultKind::InternalPTP: fa = m12p; fb = m12n; break;
      case FaultKind::InternalP_PTG: fa = m12p; fb = 0; break;
      case FaultKind::InternalN_PTG: fa = m12n; fb = 0; break;
      case FaultKind::ExternalForwardPTP: fa = bus2p; fb = bus2n; break;
      case FaultKind::ExternalForwardPTG: fa = bus2p; fb = 0; break;
      case FaultKind::ExternalBackwardPTP: fa = j14p; fb = j14n; break;
      case FaultKind::ExternalBackwardPTG: fa = j14p; fb = 0; break;
      default: break;
    }
    Branch fb_branch{"fault", BranchKind::Fault, fa, fb};
    fb_branch.resistance = fault.r_f;
    bld.net.fault_branch = bld.branch(fb_branch);
    bld.net.fault_on_positive_pole = fault.kind != FaultKind::InternalN_PTG;
    switch (fault.kind) {
      case FaultKind::InternalPTP:
      case FaultKind::InternalP_PTG:
      case FaultKind::InternalN_PTG:
        bld.net.fault_node_p = m12p;
        bld.net.fault_node_n = m12n;
        break;
      case FaultKind::ExternalForwardPTP:
      case FaultKind::ExternalForwardPTG:
        bld.net.fault_node_p = bus2p;
        bld.net.fault_node_n = bus2n;
        break;
      default:
        bld.net.fault_node_p = j14p;
        bld.net.fault_node_n = j14n;
        break;
    }
  }

  return std::move(bld.net);
}

}  // namespace mtdc
