#pragma once

#include <Eigen/Dense>
#include <vector>

#include "gfsim/pauli.hpp"
#include "gfsim/statevector.hpp"

namespace gfsim {

/// Layered product of Pauli-word exponentials whose generators are the
/// non-identity terms of a Hamiltonian, in declared order. Parameters are
/// indexed layer-major: flat index (d, m) = d * generators + m.
struct VhaAnsatz {
  std::vector<PauliTerm> generators;
  int depth = 1;
  int n_qubits = 0;

  static VhaAnsatz from_hamiltonian(const PauliSum& h, int depth);

  int generator_count() const { return static_cast<int>(generators.size()); }
  int parameter_count() const { return depth * generator_count(); }
  /// Generator of the flat parameter index.
  const PauliTerm& generator_at(int flat_index) const;
  void validate() const;

  /// Ansatz on n_qubits + 1 with every generator padded by an identity on
  /// a trailing ancilla qubit.
  VhaAnsatz extended_with_ancilla() const;
};

/// U(theta)|s> with U = prod_{d,m} e^{+i theta_{d,m} P_m}, layers applied
/// in ascending order and generators in declared order within a layer.
/// theta = 0 gives the identity.
QubitState apply_vha(const VhaAnsatz& ansatz, const Eigen::VectorXd& theta,
                     const QubitState& s);

/// Exact parameter derivative of apply_vha: inserts i P_m at the factor
/// addressed by flat_index. Not normalized. At theta = 0 this is
/// i P_m |s0> for every layer.
QubitState tangent_state(const VhaAnsatz& ansatz, const Eigen::VectorXd& theta,
                         int flat_index, const QubitState& s0);

/// Propagator-facing convention: W(theta) = prod e^{-i theta_{d,m} P_m},
/// the sign for which the McLachlan flow reproduces e^{-iHt} with
/// theta_m ~ c_m t at short times. Equal to apply_vha(ansatz, -theta, s).
QubitState apply_evolution(const VhaAnsatz& ansatz, const Eigen::VectorXd& theta,
                           const QubitState& s);

/// Derivative of apply_evolution with respect to one parameter: inserts
/// -i P_m. Equal to -tangent_state(ansatz, -theta, flat_index, s0).
QubitState evolution_tangent(const VhaAnsatz& ansatz, const Eigen::VectorXd& theta,
                             int flat_index, const QubitState& s0);

/// All evolution tangents plus the evolved state in one sweep, as the
/// columns of a dim x parameter_count matrix. Shared by the McLachlan
/// assembly, which needs every tangent at once.
struct TangentFrame {
  Eigen::VectorXcd state;
  Eigen::MatrixXcd tangents;
};
TangentFrame evolution_tangent_frame(const VhaAnsatz& ansatz,
                                     const Eigen::VectorXd& theta,
                                     const QubitState& s0);

}  // namespace gfsim
