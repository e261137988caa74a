#pragma once

#include <Eigen/Dense>
#include <utility>
#include <vector>

#include "mtdc/network.hpp"
#include "mtdc/trace.hpp"

namespace mtdc {

class solver_error : public std::runtime_error {
 public:
  solver_error(std::string msg, double last_valid_time)
      : std::runtime_error(std::move(msg)), last_valid_time(last_valid_time) {}
  double last_valid_time;
};

// Loop-analysis state-space form of a NetworkModel. States are the
// fundamental-loop (link) currents followed by capacitor charges:
//   E dx/dt = A0 x + u(t),  E = diag(B L B^T, I).
// The fault branch is always a link; pre-fault operation pins its loop
// current to zero, so one model serves both phases.
struct StateSpaceModel {
  NetworkModel net;
  int n_loops = 0;
  int n_caps = 0;
  int fault_loop = -1;                  // loop index of the fault link, or -1
  std::vector<int> link_branch;         // loop index -> branch index
  std::vector<int> cap_branch;          // cap state index -> branch index
  Eigen::MatrixXd loop_matrix;          // B: n_loops x n_branches, entries -1/0/+1
  Eigen::MatrixXd branch_inductance;    // L: n_branches x n_branches (with mutuals)
  Eigen::VectorXd branch_resistance;    // diagonal of R
  Eigen::VectorXd branch_emf;           // e at nominal (unramped) level
  std::vector<int> ramped_branches;     // branches whose emf follows the ramp
  Eigen::MatrixXd e_loops;              // B L B^T
  Eigen::VectorXd initial_state;
  // Tree bookkeeping for node-potential reconstruction.
  std::vector<int> tree_parent_branch;  // node -> branch to parent, -1 at ground
  std::vector<int> tree_parent_node;    // node -> parent node
  std::vector<int> node_order;          // ground-first traversal order
};

// Builds the loop basis and matrices. Throws std::invalid_argument when the
// inductance structure is ill-conditioned (M >= L, or a loop with no
// inductance at all).
StateSpaceModel build_state_space(const NetworkModel& net);

// All traces share (t0 = 0, dt, length). Fault-point traces are empty when
// the scenario has no fault branch.
struct MeasurementSet {
  Trace v_clr_p, v_clr_n;  // relay reactor voltages, bus side minus line side
  Trace i_p, i_n;          // local line-12 currents at the relay, bus -> line
  Trace v_f_p, v_f_n;      // fault-point pole voltages
  Trace i_f_p, i_f_n;      // fault branch pole currents
  Trace energy_imbalance;  // |E(t)+D(t)-E0|/E0 after inception (cap mode)
  double dt = 0.0;
  double t_fault = 0.0;    // actual switch instant (first step >= requested)
};

// Fixed-step implicit trapezoidal integration; the fault loop is released at
// the first step boundary >= fault.t_fault. Throws solver_error on NaN or
// overflow in the state vector.
MeasurementSet simulate(const StateSpaceModel& model, const FaultScenario& fault,
                        const SimSettings& sim);

// Orthonormal mode pair (V_L120, V_L121) of the relay reactor voltages.
std::pair<Trace, Trace> relay_tap(const MeasurementSet& ms);

// Largest real part over the eigenvalues of E^-1 A0 with the fault loop
// active (Hurwitz when negative).
double max_real_eigenvalue(const StateSpaceModel& model);

// Max |dx/dt| component at the pre-fault operating point (fixed-point check).
double prefault_max_derivative(const StateSpaceModel& model);

}  // namespace mtdc
