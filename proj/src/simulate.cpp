#include "mtdc/simulate.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <map>
#include <queue>

#include "mtdc/modal.hpp"

namespace mtdc {

namespace {

// Branch currents realizing a standing transfer on line 12 (positive pole
// carries +I bus1 -> bus2, negative pole the return); KCL-consistent.
std::map<std::string, double> standing_current_pattern(double amps) {
  return {
      {"clr12_p", amps},          {"line12_near_seg_p", amps},
      {"line12_far_seg_p", amps}, {"clr21_p", amps},
      {"clr12_n", -amps},         {"line12_near_seg_n", -amps},
      {"line12_far_seg_n", -amps},{"clr21_n", -amps},
      {"mmc1_p", -amps},          {"mmc1_n", amps},
      {"mmc2_p", amps},           {"mmc2_n", -amps},
  };
}

}  // namespace

StateSpaceModel build_state_space(const NetworkModel& net) {
  StateSpaceModel m;
  m.net = net;
  const int n_nodes = static_cast<int>(net.nodes.size());
  const int n_branches = static_cast<int>(net.branches.size());

  // Branch inductance matrix with mutual couplings; validate conditioning.
  m.branch_inductance = Eigen::MatrixXd::Zero(n_branches, n_branches);
  m.branch_resistance = Eigen::VectorXd::Zero(n_branches);
  m.branch_emf = Eigen::VectorXd::Zero(n_branches);
  for (int i = 0; i < n_branches; ++i) {
    const Branch& b = net.branches[i];
    m.branch_inductance(i, i) = b.inductance;
    m.branch_resistance(i) = b.resistance;
    m.branch_emf(i) = b.emf;
    if (b.emf_ramped && b.emf != 0.0) m.ramped_branches.push_back(i);
    if (b.mutual_with >= 0) {
      const Branch& other = net.branches[b.mutual_with];
      if (b.mutual * b.mutual >= b.inductance * other.inductance)
        throw std::invalid_argument("ill-conditioned inductance: |M| >= sqrt(L_a L_b) on " +
                                    b.name);
      m.branch_inductance(i, b.mutual_with) = b.mutual;
    }
  }

  // Spanning tree (breadth-first from ground), fault branch kept as a link.
  std::vector<std::vector<std::pair<int, int>>> adj(n_nodes);  // node -> (branch, other)
  for (int i = 0; i < n_branches; ++i) {
    if (i == net.fault_branch) continue;
    adj[net.branches[i].node_a].push_back({i, net.branches[i].node_b});
    adj[net.branches[i].node_b].push_back({i, net.branches[i].node_a});
  }
  m.tree_parent_branch.assign(n_nodes, -1);
  m.tree_parent_node.assign(n_nodes, -1);
  std::vector<int> depth(n_nodes, -1);
  std::vector<char> in_tree(n_branches, 0);
  std::queue<int> q;
  q.push(0);
  depth[0] = 0;
  m.node_order.push_back(0);
  while (!q.empty()) {
    const int u = q.front();
    q.pop();
    for (auto [br, v] : adj[u]) {
      if (depth[v] >= 0) continue;
      depth[v] = depth[u] + 1;
      m.tree_parent_branch[v] = br;
      m.tree_parent_node[v] = u;
      in_tree[br] = 1;
      m.node_order.push_back(v);
      q.push(v);
    }
  }
  for (int v = 0; v < n_nodes; ++v)
    if (depth[v] < 0) throw std::invalid_argument("network graph is disconnected");

  // Fundamental loops: one per link, oriented along the link current.
  for (int i = 0; i < n_branches; ++i)
    if (!in_tree[i]) m.link_branch.push_back(i);
  m.n_loops = static_cast<int>(m.link_branch.size());
  m.loop_matrix = Eigen::MatrixXd::Zero(m.n_loops, n_branches);
  for (int l = 0; l < m.n_loops; ++l) {
    const int link = m.link_branch[l];
    if (link == net.fault_branch) m.fault_loop = l;
    m.loop_matrix(l, link) = 1.0;
    // Tree path from node_b(link) back to node_a(link) via the common
    // ancestor; climbing x -> parent(x) over branch t contributes +1 when t
    // is oriented x -> parent.
    int x = net.branches[link].node_b;
    int y = net.branches[link].node_a;
    auto climb = [&](int& node, double sign) {
      const int br = m.tree_parent_branch[node];
      m.loop_matrix(l, br) += (net.branches[br].node_a == node ? 1.0 : -1.0) * sign;
      node = m.tree_parent_node[node];
    };
    while (depth[x] > depth[y]) climb(x, +1.0);
    while (depth[y] > depth[x]) climb(y, -1.0);
    while (x != y) {
      climb(x, +1.0);
      climb(y, -1.0);
    }
  }

  for (int i = 0; i < n_branches; ++i)
    if (net.branches[i].capacitance > 0.0) m.cap_branch.push_back(i);
  m.n_caps = static_cast<int>(m.cap_branch.size());

  m.e_loops = m.loop_matrix * m.branch_inductance * m.loop_matrix.transpose();
  // Symmetrize away composition roundoff, then verify positive definiteness
  // (every loop must contain inductance).
  m.e_loops = 0.5 * (m.e_loops + m.e_loops.transpose()).eval();
  Eigen::LLT<Eigen::MatrixXd> llt(m.e_loops);
  if (llt.info() != Eigen::Success)
    throw std::invalid_argument(
        "ill-conditioned network: a loop carries no inductance (loop matrix is "
        "singular in L)");

  // Initial state: standing link currents (if any) plus capacitor charges.
  m.initial_state = Eigen::VectorXd::Zero(m.n_loops + m.n_caps);
  if (net.prefault_line_current != 0.0) {
    const auto pattern = standing_current_pattern(net.prefault_line_current);
    for (int l = 0; l < m.n_loops; ++l) {
      const auto it = pattern.find(net.branches[m.link_branch[l]].name);
      if (it != pattern.end()) m.initial_state(l) = it->second;
    }
  }
  for (int c = 0; c < m.n_caps; ++c)
    m.initial_state(m.n_loops + c) = net.branches[m.cap_branch[c]].initial_charge;

  return m;
}

namespace {

struct SystemMatrices {
  Eigen::MatrixXd e_full;   // block diag(B L B^T, I)
  Eigen::MatrixXd a0;       // state matrix (unscaled)
  Eigen::MatrixXd b_t;      // B^T for branch currents
};

SystemMatrices assemble(const StateSpaceModel& m) {
  const int nl = m.n_loops, nc = m.n_caps, n = nl + nc;
  SystemMatrices sm;
  sm.e_full = Eigen::MatrixXd::Zero(n, n);
  sm.e_full.topLeftCorner(nl, nl) = m.e_loops;
  sm.e_full.bottomRightCorner(nc, nc).setIdentity();
  sm.a0 = Eigen::MatrixXd::Zero(n, n);
  // Loop rows: -B R B^T on loop currents, -B (q/C) on charges.
  sm.a0.topLeftCorner(nl, nl) =
      -m.loop_matrix * m.branch_resistance.asDiagonal() * m.loop_matrix.transpose();
  for (int c = 0; c < nc; ++c) {
    const int br = m.cap_branch[c];
    const double inv_c = 1.0 / m.net.branches[br].capacitance;
    for (int l = 0; l < nl; ++l) sm.a0(l, nl + c) = -m.loop_matrix(l, br) * inv_c;
  }
  // Charge rows: dq = branch current of the capacitor branch.
  for (int c = 0; c < nc; ++c) {
    const int br = m.cap_branch[c];
    for (int l = 0; l < nl; ++l) sm.a0(nl + c, l) = m.loop_matrix(l, br);
  }
  sm.b_t = m.loop_matrix.transpose();
  return sm;
}

// Pin one state (the pre-fault open switch): its row becomes dx_i/dt = 0.
void pin_state(SystemMatrices& sm, int idx) {
  sm.e_full.row(idx).setZero();
  sm.e_full(idx, idx) = 1.0;
  sm.a0.row(idx).setZero();
}

double ramp_factor(const NetworkModel& net, double t) {
  if (net.ramp_duration <= 0.0) return 1.0;
  const double x = std::clamp(t / net.ramp_duration, 0.0, 1.0);
  return 1.0 + net.ramp_fraction * x;
}

}  // namespace

MeasurementSet simulate(const StateSpaceModel& m, const FaultScenario& fault,
                        const SimSettings& sim) {
  if (sim.dt <= 0.0) throw std::invalid_argument("dt must be > 0");
  if (sim.t_end <= 0.0) throw std::invalid_argument("t_end must be > 0");
  const bool has_fault = m.net.fault_branch >= 0 && fault.kind != FaultKind::None;
  if (has_fault && sim.t_end <= fault.t_fault)
    throw std::invalid_argument("t_end must exceed t_fault");

  const int nl = m.n_loops, nc = m.n_caps, n = nl + nc;
  const int n_branches = static_cast<int>(m.net.branches.size());
  const double dt = sim.dt;
  const std::size_t n_steps = static_cast<std::size_t>(std::llround(sim.t_end / dt));
  const std::size_t k_fault =
      has_fault ? static_cast<std::size_t>(std::ceil(fault.t_fault / dt - 1e-9))
                : n_steps + 1;

  SystemMatrices full = assemble(m);
  SystemMatrices pre = full;
  if (has_fault) pin_state(pre, m.fault_loop);

  const auto trapezoid = [&](const SystemMatrices& sm) {
    return std::pair<Eigen::PartialPivLU<Eigen::MatrixXd>, Eigen::MatrixXd>{
        Eigen::PartialPivLU<Eigen::MatrixXd>(sm.e_full - 0.5 * dt * sm.a0),
        sm.e_full + 0.5 * dt * sm.a0};
  };
  auto [lu_pre, m2_pre] = trapezoid(pre);
  auto [lu_post, m2_post] = trapezoid(full);

  // Loop-derivative solvers for the output taps.
  Eigen::MatrixXd e_loops_pre = m.e_loops;
  if (has_fault) {
    e_loops_pre.row(m.fault_loop).setZero();
    e_loops_pre.col(m.fault_loop).setZero();
    e_loops_pre(m.fault_loop, m.fault_loop) = 1.0;
  }
  Eigen::PartialPivLU<Eigen::MatrixXd> lu_loops_pre(e_loops_pre);
  Eigen::PartialPivLU<Eigen::MatrixXd> lu_loops_post(m.e_loops);

  // Input vector at time t: u = [-B e(t); 0].
  Eigen::VectorXd emf_nominal = m.branch_emf;
  const auto input_at = [&](double t, bool pinned) {
    Eigen::VectorXd e = emf_nominal;
    const double f = ramp_factor(m.net, t);
    if (f != 1.0)
      for (int br : m.ramped_branches) e(br) = m.branch_emf(br) * f;
    Eigen::VectorXd u = Eigen::VectorXd::Zero(n);
    u.head(nl) = -m.loop_matrix * e;
    if (pinned && m.fault_loop >= 0) u(m.fault_loop) = 0.0;
    return u;
  };

  MeasurementSet out;
  out.dt = dt;
  out.t_fault = has_fault ? static_cast<double>(k_fault) * dt : 0.0;
  const std::size_t n_samples = n_steps + 1;
  auto init_trace = [&](Trace& tr, const std::string& name, const std::string& unit) {
    tr.name = name;
    tr.unit = unit;
    tr.t0 = 0.0;
    tr.dt = dt;
    tr.samples.assign(n_samples, 0.0);
  };
  init_trace(out.v_clr_p, "v_clr_p", "V");
  init_trace(out.v_clr_n, "v_clr_n", "V");
  init_trace(out.i_p, "i_p", "A");
  init_trace(out.i_n, "i_n", "A");
  if (has_fault) {
    init_trace(out.v_f_p, "v_f_p", "V");
    init_trace(out.v_f_n, "v_f_n", "V");
    init_trace(out.i_f_p, "i_f_p", "A");
    init_trace(out.i_f_n, "i_f_n", "A");
  }
  const bool track_energy = !m.net.stiff_sources;
  if (track_energy) init_trace(out.energy_imbalance, "energy_imbalance", "1");

  Eigen::VectorXd x = m.initial_state;
  Eigen::VectorXd i_branch(n_branches), di_branch(n_branches), v_branch(n_branches);
  Eigen::VectorXd di_loops(nl);
  std::vector<double> potential(m.net.nodes.size(), 0.0);
  double dissipated = 0.0, prev_power = 0.0, energy_ref = -1.0;

  for (std::size_t k = 0; k <= n_steps; ++k) {
    const double t = static_cast<double>(k) * dt;
    const bool pinned = k < k_fault;

    if (!x.allFinite())
      throw solver_error("state diverged (NaN/overflow)", t > 0.0 ? t - dt : 0.0);

    // --- taps at time t ---
    i_branch = full.b_t * x.head(nl);
    {
      Eigen::VectorXd e = emf_nominal;
      const double f = ramp_factor(m.net, t);
      if (f != 1.0)
        for (int br : m.ramped_branches) e(br) = m.branch_emf(br) * f;
      Eigen::VectorXd rhs = -m.loop_matrix * m.branch_resistance.asDiagonal() *
                                m.loop_matrix.transpose() * x.head(nl) -
                            m.loop_matrix * e;
      for (int c = 0; c < nc; ++c) {
        const int br = m.cap_branch[c];
        rhs -= m.loop_matrix.col(br) *
               (x(nl + c) / m.net.branches[br].capacitance);
      }
      if (pinned && m.fault_loop >= 0) rhs(m.fault_loop) = 0.0;
      di_loops = pinned ? lu_loops_pre.solve(rhs) : lu_loops_post.solve(rhs);
      di_branch = full.b_t * di_loops;
      v_branch = m.branch_resistance.cwiseProduct(i_branch) +
                 m.branch_inductance * di_branch + e;
      for (int c = 0; c < nc; ++c)
        v_branch(m.cap_branch[c]) +=
            x(nl + c) / m.net.branches[m.cap_branch[c]].capacitance;
    }

    out.v_clr_p.samples[k] = v_branch(m.net.clr12_p);
    out.v_clr_n.samples[k] = v_branch(m.net.clr12_n);
    out.i_p.samples[k] = i_branch(m.net.clr12_p);
    out.i_n.samples[k] = i_branch(m.net.clr12_n);

    if (has_fault) {
      for (int node : m.node_order) {
        if (node == 0) {
          potential[0] = 0.0;
          continue;
        }
        const int br = m.tree_parent_branch[node];
        const int parent = m.tree_parent_node[node];
        if (m.net.branches[br].node_a == node)
          potential[node] = potential[parent] + v_branch(br);
        else
          potential[node] = potential[parent] - v_branch(br);
      }
      out.v_f_p.samples[k] = potential[m.net.fault_node_p];
      out.v_f_n.samples[k] = potential[m.net.fault_node_n];
      const double i_f = pinned ? 0.0 : i_branch(m.net.fault_branch);
      const Branch& fb = m.net.branches[m.net.fault_branch];
      const bool ptp_fault = fb.node_b != 0;
      if (ptp_fault) {
        out.i_f_p.samples[k] = i_f;
        out.i_f_n.samples[k] = -i_f;
      } else if (m.net.fault_on_positive_pole) {
        out.i_f_p.samples[k] = i_f;
      } else {
        out.i_f_n.samples[k] = i_f;
      }
    }

    if (track_energy) {
      const double stored = 0.5 * i_branch.dot(m.branch_inductance * i_branch) +
                            [&] {
                              double s = 0.0;
                              for (int c = 0; c < nc; ++c) {
                                const double qc = x(nl + c);
                                s += 0.5 * qc * qc /
                                     m.net.branches[m.cap_branch[c]].capacitance;
                              }
                              return s;
                            }();
      const double power = i_branch.dot(m.branch_resistance.cwiseProduct(i_branch));
      if (k > 0) dissipated += 0.5 * dt * (power + prev_power);
      prev_power = power;
      if (energy_ref < 0.0) energy_ref = stored + dissipated;
      out.energy_imbalance.samples[k] =
          std::fabs(stored + dissipated - energy_ref) / energy_ref;
    }

    if (k == n_steps) break;

    // --- advance to t + dt ---
    // The switch closes exactly at the t(k_fault) boundary, so the interval
    // [k, k+1] integrates the open system whenever k < k_fault.
    const bool open_interval = k < k_fault;
    const Eigen::VectorXd u0 = input_at(t, open_interval);
    const Eigen::VectorXd u1 = input_at(t + dt, open_interval);
    if (open_interval)
      x = lu_pre.solve(m2_pre * x + 0.5 * dt * (u0 + u1));
    else
      x = lu_post.solve(m2_post * x + 0.5 * dt * (u0 + u1));
  }

  return out;
}

std::pair<Trace, Trace> relay_tap(const MeasurementSet& ms) {
  auto [line, zero] = phase_to_modal(ms.v_clr_p, ms.v_clr_n);
  zero.name = "v_l120";
  line.name = "v_l121";
  return {zero, line};
}

double max_real_eigenvalue(const StateSpaceModel& m) {
  SystemMatrices sm = assemble(m);
  const Eigen::MatrixXd a = sm.e_full.partialPivLu().solve(sm.a0);
  const Eigen::EigenSolver<Eigen::MatrixXd> es(a);
  double worst = -std::numeric_limits<double>::infinity();
  for (int i = 0; i < a.rows(); ++i)
    worst = std::max(worst, es.eigenvalues()(i).real());
  return worst;
}

double prefault_max_derivative(const StateSpaceModel& m) {
  SystemMatrices sm = assemble(m);
  if (m.fault_loop >= 0) pin_state(sm, m.fault_loop);
  Eigen::VectorXd e = m.branch_emf;
  Eigen::VectorXd u = Eigen::VectorXd::Zero(m.n_loops + m.n_caps);
  u.head(m.n_loops) = -m.loop_matrix * e;
  if (m.fault_loop >= 0) u(m.fault_loop) = 0.0;
  const Eigen::VectorXd dx =
      sm.e_full.partialPivLu().solve(sm.a0 * m.initial_state + u);
  return dx.cwiseAbs().maxCoeff();
}

}  // namespace mtdc
