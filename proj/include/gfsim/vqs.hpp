#pragma once

#include <Eigen/Dense>
#include <limits>
#include <vector>

#include "gfsim/ansatz.hpp"
#include "gfsim/greens_types.hpp"
#include "gfsim/pauli.hpp"
#include "gfsim/statevector.hpp"

namespace gfsim {

/// The McLachlan linear system M thetadot = V at one point of the
/// variational manifold: M_ij = Re<d_i phi|d_j phi> + <d_i phi|phi><d_j phi|phi>
/// and V_i = Im<d_i phi|H|phi> + Re[i <d_i phi|phi><phi|H|phi>],
/// with tangents taken in the propagator convention (see apply_evolution).
struct VqsLinearSystem {
  Eigen::MatrixXd m;
  Eigen::VectorXd v;
  /// <d_i phi|phi>, purely imaginary; kept for the global-phase rate.
  Eigen::VectorXcd tangent_overlaps;
  double energy = 0.0;
  double regularization = 1e-8;

  void validate() const;
};

VqsLinearSystem assemble_system(const VhaAnsatz& ansatz, const Eigen::VectorXd& theta,
                                const QubitState& s0, const PauliSum& h);

struct VelocitySolution {
  Eigen::VectorXd thetadot;
  double residual = 0.0;  // ||M thetadot - V||
};

/// Solves (M + lambda I) thetadot = V. The Tikhonov solve keeps the
/// rank-deficient points (corresponding layer parameters coincide at
/// theta = 0) stable and approximates the minimum-norm solution; if it
/// degrades, an eigenvalue-cutoff pseudo-inverse takes over.
VelocitySolution solve_velocities(const VqsLinearSystem& sys);

/// d theta_0/dt = sum_i Im<d_i phi|phi> thetadot_i - <phi|H|phi>, the rate
/// of the global phase that restores e^{i theta0} U(theta)|s0> ~ e^{-iHt}|s0>.
double global_phase_rate(const VqsLinearSystem& sys, const Eigen::VectorXd& thetadot);

/// Time series of parameters, global phase and solver diagnostics.
struct VqsTrajectory {
  TimeGrid grid;
  std::vector<Eigen::VectorXd> theta;   // grid.size() entries, theta[0] = 0
  std::vector<double> theta0;           // global phase, theta0[0] = 0
  std::vector<double> residuals;        // linear-solve residual per step
  QubitState initial_state;

  const Eigen::VectorXd& theta_at(int k) const { return theta.at(k); }
  double theta0_at(int k) const { return theta0.at(k); }
};

struct EvolveOptions {
  double regularization = 1e-8;
  bool track_global_phase = true;
  /// Abort when the per-step linear-solve residual exceeds this.
  double residual_abort_threshold = std::numeric_limits<double>::infinity();
};

/// Integrates the McLachlan flow with classical fixed-step RK4,
/// re-assembling M and V at every stage. theta(0) = 0, theta0(0) = 0.
VqsTrajectory evolve(const VhaAnsatz& ansatz, const QubitState& s0, const PauliSum& h,
                     const TimeGrid& grid, const EvolveOptions& options = {});

/// First-order product formula ( prod_m e^{-i c_m P_m t/n} )^n applied in
/// declared term order; the identity term contributes the scalar phase
/// e^{-i c_I t}. Error is O(t^2 / n).
QubitState trotter_propagate(const PauliSum& h, double t, int n_steps, const QubitState& s);

}  // namespace gfsim
