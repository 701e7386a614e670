#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <random>
#include <vector>

#include "gfsim/ansatz.hpp"
#include "gfsim/dimer.hpp"
#include "gfsim/exact.hpp"
#include "gfsim/greens_types.hpp"
#include "gfsim/hubbard.hpp"
#include "gfsim/pauli.hpp"
#include "gfsim/statevector.hpp"
#include "gfsim/vqs.hpp"

namespace gfsim {

/// Exact value (shots = 0) or ancilla-interference estimate (shots = N) of
/// a braket with |z| <= 1. The estimate draws N Bernoulli samples per
/// quadrature with success probabilities (1 +- Re)/2 and (1 +- Im)/2 and
/// is unbiased with standard error <= 1/sqrt(N) per quadrature.
std::complex<double> sample_braket(std::complex<double> exact, long shots,
                                   std::mt19937_64& rng);

using UnitaryOp = std::function<QubitState(const QubitState&)>;

/// <a| Op_n ... Op_1 |a> where chain[0] is applied first. Every chain
/// element must be norm-preserving (checked to 1e-9). shots = 0 returns
/// the exact braket; shots = N > 0 returns the sampled estimate.
std::complex<double> hadamard_braket(const QubitState& a, const std::vector<UnitaryOp>& chain,
                                     long shots, std::mt19937_64& rng);

/// Approximate propagator family for the one-state algorithm: one
/// trajectory per distinct word P_j of the right-hand expansion, each
/// evolving P_j|psi> independently with its own global phase, so that
/// e^{-iHt} P_j|psi> ~ e^{i phase(j,t)} state(j,t).
class OsPropagator {
 public:
  virtual ~OsPropagator() = default;
  virtual QubitState state(int j, int time_index) const = 0;
  virtual double phase(int j, int time_index) const = 0;
};

/// Exact reference propagation (phases folded into the state).
class ExactOsPropagator final : public OsPropagator {
 public:
  ExactOsPropagator(const SpectralDecomposition& sd, const QubitState& ground,
                    const std::vector<PauliString>& words, const TimeGrid& grid);
  QubitState state(int j, int k) const override;
  double phase(int, int) const override { return 0.0; }

 private:
  const SpectralDecomposition& sd_;
  TimeGrid grid_;
  std::vector<QubitState> initial_;
};

/// McLachlan trajectories, one per word.
class VqsOsPropagator final : public OsPropagator {
 public:
  VqsOsPropagator(const PauliSum& h, const QubitState& ground,
                  const std::vector<PauliString>& words, const VhaAnsatz& ansatz,
                  const TimeGrid& grid, const EvolveOptions& options = {});
  QubitState state(int j, int k) const override;
  double phase(int j, int k) const override;
  const VqsTrajectory& trajectory(int j) const { return trajectories_.at(j); }

 private:
  VhaAnsatz ansatz_;
  std::vector<QubitState> initial_;
  std::vector<VqsTrajectory> trajectories_;
};

/// The closed-form 2-site propagator: one Pauli exponential plus the
/// identity-term phase, exact by the dimer's symmetry structure.
class SymmetryOsPropagator final : public OsPropagator {
 public:
  SymmetryOsPropagator(const HubbardModel& model, const QubitState& ground,
                       const std::vector<PauliString>& words, const TimeGrid& grid);
  QubitState state(int j, int k) const override;
  double phase(int j, int k) const override;

 private:
  TimeGrid grid_;
  std::vector<SinglePauliPropagator> rules_;
  std::vector<QubitState> initial_;
};

/// First-order product-formula baseline.
class TrotterOsPropagator final : public OsPropagator {
 public:
  TrotterOsPropagator(const PauliSum& h, const QubitState& ground,
                      const std::vector<PauliString>& words, const TimeGrid& grid,
                      int steps_per_unit_time);
  QubitState state(int j, int k) const override;
  double phase(int, int) const override { return 0.0; }

 private:
  const PauliSum& h_;
  TimeGrid grid_;
  int steps_per_unit_time_;
  std::vector<QubitState> initial_;
};

struct BraketSampling {
  long shots = 0;  // 0 = exact
  std::uint64_t seed = 1;
};

/// One-state algorithm. left is the annihilation expansion of c_l, right
/// the creation expansion of c+_m (both on the system register). The
/// lesser component is
///   G^<(t) = -i e^{iE0 t} sum_ij L_i R_j e^{i theta0_j(t)}
///            <psi| P_i U_j(t) P_j |psi>,
/// the greater component reuses the same brakets conjugated,
///   G^>(t) = +i e^{-iE0 t} sum_ij L_i R_j conj(B_ij(t)).
GreensFunctionSet os_greens(const QubitState& ground, double e0,
                            const LadderOperatorExpansion& left,
                            const LadderOperatorExpansion& right,
                            const OsPropagator& propagator, const TimeGrid& grid,
                            const BraketSampling& sampling = {},
                            GreensAlgorithm tag = GreensAlgorithm::Os);

struct CfOptions {
  EvolveOptions evolve;
  BraketSampling sampling;
};

/// Control-free baseline. One shared-parameter trajectory per word P_j,
/// trained by McLachlan on the ancilla-extended state
/// (|0>|psi> + |1>P_j|psi>)/sqrt(2) with the Hamiltonian acting on the
/// system qubits only; brakets are then
///   B_ij(t) = <psi| U(theta_j(t))^dag P_i U(theta_j(t)) P_j |psi>
/// with no energy phase and no global phase.
GreensFunctionSet cf_greens(const PauliSum& h, const QubitState& ground,
                            const LadderOperatorExpansion& left,
                            const LadderOperatorExpansion& right,
                            const VhaAnsatz& system_ansatz, const TimeGrid& grid,
                            const CfOptions& options = {});

}  // namespace gfsim
