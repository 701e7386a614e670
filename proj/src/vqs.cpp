#include "gfsim/vqs.hpp"

#include <cmath>
#include <stdexcept>

namespace gfsim {

void VqsLinearSystem::validate() const {
  if (m.rows() != m.cols() || m.rows() != v.size())
    throw std::invalid_argument("inconsistent McLachlan system dimensions");
  if (!m.allFinite() || !v.allFinite())
    throw std::runtime_error("non-finite entries in McLachlan system");
}

VqsLinearSystem assemble_system(const VhaAnsatz& ansatz, const Eigen::VectorXd& theta,
                                const QubitState& s0, const PauliSum& h) {
  if (h.n_qubits() != ansatz.n_qubits || s0.n_qubits() != ansatz.n_qubits)
    throw std::invalid_argument("ansatz, state and Hamiltonian register sizes differ");

  const TangentFrame frame = evolution_tangent_frame(ansatz, theta, s0);
  const int K = ansatz.parameter_count();

  VqsLinearSystem sys;
  sys.tangent_overlaps = frame.tangents.adjoint() * frame.state;

  const Eigen::MatrixXcd gram = frame.tangents.adjoint() * frame.tangents;
  sys.m = gram.real();
  for (int i = 0; i < K; ++i)
    for (int j = 0; j < K; ++j)
      sys.m(i, j) += (sys.tangent_overlaps[i] * sys.tangent_overlaps[j]).real();

  const QubitState phi(ansatz.n_qubits, frame.state);
  const Eigen::VectorXcd h_phi = apply_sum(h, phi).amplitudes();
  sys.energy = (frame.state.dot(h_phi)).real();

  sys.v.resize(K);
  const Eigen::VectorXcd th = frame.tangents.adjoint() * h_phi;
  for (int i = 0; i < K; ++i)
    sys.v[i] = th[i].imag() +
               (std::complex<double>(0, 1) * sys.tangent_overlaps[i] * sys.energy).real();
  sys.validate();
  return sys;
}

VelocitySolution solve_velocities(const VqsLinearSystem& sys) {
  sys.validate();
  const int K = static_cast<int>(sys.v.size());
  Eigen::MatrixXd reg = sys.m;
  reg.diagonal().array() += sys.regularization;

  VelocitySolution sol;
  Eigen::LDLT<Eigen::MatrixXd> ldlt(reg);
  bool ok = ldlt.info() == Eigen::Success;
  if (ok) {
    sol.thetadot = ldlt.solve(sys.v);
    ok = sol.thetadot.allFinite();
  }
  if (ok) {
    sol.residual = (sys.m * sol.thetadot - sys.v).norm();
  }
  if (!ok || sol.residual > 1e-4 * std::max(1.0, sys.v.norm())) {
    // Minimum-norm pseudo-inverse on the spectral decomposition of M.
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(sys.m);
    const double cutoff = 1e-12 * std::max(1.0, es.eigenvalues().cwiseAbs().maxCoeff());
    Eigen::VectorXd inv = Eigen::VectorXd::Zero(K);
    for (int k = 0; k < K; ++k)
      if (es.eigenvalues()[k] > cutoff) inv[k] = 1.0 / es.eigenvalues()[k];
    Eigen::VectorXd pinv_sol =
        es.eigenvectors() * inv.asDiagonal() * es.eigenvectors().transpose() * sys.v;
    const double pinv_res = (sys.m * pinv_sol - sys.v).norm();
    if (!ok || pinv_res < sol.residual) {
      sol.thetadot = std::move(pinv_sol);
      sol.residual = pinv_res;
    }
  }
  if (!sol.thetadot.allFinite())
    throw std::runtime_error("velocity solve produced non-finite values");
  return sol;
}

double global_phase_rate(const VqsLinearSystem& sys, const Eigen::VectorXd& thetadot) {
  double rate = -sys.energy;
  for (Eigen::Index i = 0; i < thetadot.size(); ++i)
    rate += sys.tangent_overlaps[i].imag() * thetadot[i];
  return rate;
}

namespace {

struct FlowSample {
  Eigen::VectorXd thetadot;
  double phase_rate = 0.0;
  double residual = 0.0;
};

FlowSample sample_flow(const VhaAnsatz& ansatz, const Eigen::VectorXd& theta,
                       const QubitState& s0, const PauliSum& h,
                       const EvolveOptions& opt) {
  VqsLinearSystem sys = assemble_system(ansatz, theta, s0, h);
  sys.regularization = opt.regularization;
  VelocitySolution sol = solve_velocities(sys);
  FlowSample out;
  out.phase_rate = opt.track_global_phase ? global_phase_rate(sys, sol.thetadot) : 0.0;
  out.thetadot = std::move(sol.thetadot);
  out.residual = sol.residual;
  return out;
}

}  // namespace

VqsTrajectory evolve(const VhaAnsatz& ansatz, const QubitState& s0, const PauliSum& h,
                     const TimeGrid& grid, const EvolveOptions& options) {
  grid.validate();
  ansatz.validate();
  const int K = ansatz.parameter_count();
  const double dt = grid.dt;

  VqsTrajectory traj;
  traj.grid = grid;
  traj.initial_state = s0;
  traj.theta.reserve(grid.size());
  traj.theta0.reserve(grid.size());
  traj.theta.push_back(Eigen::VectorXd::Zero(K));
  traj.theta0.push_back(0.0);
  traj.residuals.push_back(0.0);

  Eigen::VectorXd theta = Eigen::VectorXd::Zero(K);
  double theta0 = 0.0;
  for (int step = 0; step < grid.n_steps; ++step) {
    const FlowSample k1 = sample_flow(ansatz, theta, s0, h, options);
    const FlowSample k2 = sample_flow(ansatz, theta + 0.5 * dt * k1.thetadot, s0, h, options);
    const FlowSample k3 = sample_flow(ansatz, theta + 0.5 * dt * k2.thetadot, s0, h, options);
    const FlowSample k4 = sample_flow(ansatz, theta + dt * k3.thetadot, s0, h, options);

    theta += dt / 6.0 * (k1.thetadot + 2.0 * k2.thetadot + 2.0 * k3.thetadot + k4.thetadot);
    theta0 += dt / 6.0 * (k1.phase_rate + 2.0 * k2.phase_rate + 2.0 * k3.phase_rate + k4.phase_rate);
    if (!theta.allFinite() || !std::isfinite(theta0))
      throw std::runtime_error("variational trajectory diverged at step " +
                               std::to_string(step + 1));
    const double res = std::max(std::max(k1.residual, k2.residual),
                                std::max(k3.residual, k4.residual));
    if (res > options.residual_abort_threshold)
      throw std::runtime_error("linear-solve residual " + std::to_string(res) +
                               " above abort threshold at step " + std::to_string(step + 1));
    traj.theta.push_back(theta);
    traj.theta0.push_back(theta0);
    traj.residuals.push_back(res);
  }
  return traj;
}

QubitState trotter_propagate(const PauliSum& h, double t, int n_steps, const QubitState& s) {
  if (n_steps < 1) throw std::invalid_argument("Trotter step count must be >= 1");
  if (h.n_qubits() != s.n_qubits())
    throw std::invalid_argument("Hamiltonian register size does not match state");
  const double slice = t / n_steps;
  QubitState out = s;
  std::complex<double> scalar(1.0, 0.0);
  for (int step = 0; step < n_steps; ++step) {
    for (const auto& term : h.terms()) {
      if (term.string.is_identity()) {
        scalar *= std::exp(std::complex<double>(0, -term.coefficient * slice));
      } else {
        out = apply_pauli_exponential(-term.coefficient * slice, term.string, out);
      }
    }
  }
  Eigen::VectorXcd amps = scalar * out.amplitudes();
  return QubitState(s.n_qubits(), std::move(amps));
}

}  // namespace gfsim
