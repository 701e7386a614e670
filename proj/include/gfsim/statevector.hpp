#pragma once

#include <Eigen/Dense>
#include <complex>

#include "gfsim/hubbard.hpp"
#include "gfsim/pauli.hpp"

namespace gfsim {

/// Dense n-qubit state. Amplitude ordering: basis index bit k holds the
/// state of qubit k+1, i.e. qubit 1 is the least significant bit. With
/// that convention the dense matrix of a Pauli word is the Kronecker
/// product of its symbols taken right-to-left.
class QubitState {
 public:
  QubitState() = default;
  QubitState(int n_qubits, Eigen::VectorXcd amplitudes);

  /// Computational basis state |index>.
  static QubitState basis(int n_qubits, std::size_t index);

  int n_qubits() const { return n_qubits_; }
  std::size_t dim() const { return static_cast<std::size_t>(amps_.size()); }
  const Eigen::VectorXcd& amplitudes() const { return amps_; }
  Eigen::VectorXcd& amplitudes() { return amps_; }

  double norm() const { return amps_.norm(); }
  QubitState normalized() const;

 private:
  int n_qubits_ = 0;
  Eigen::VectorXcd amps_;
};

/// s' = P s. Unitary; costs one pass over the amplitudes.
QubitState apply_pauli(const PauliString& p, const QubitState& s);

/// s' = e^{i theta P} s = cos(theta) s + i sin(theta) P s, exact because
/// P squares to the identity. Throws on size mismatch or non-finite theta.
QubitState apply_pauli_exponential(double theta, const PauliString& p, const QubitState& s);

/// Sesquilinear inner product <a|b> (conjugate-linear in a).
std::complex<double> inner(const QubitState& a, const QubitState& b);

/// <s|H|s> for a real-weighted Pauli sum. The result is real by
/// construction; an imaginary part above 1e-10 throws.
double expectation(const PauliSum& h, const QubitState& s);

/// H|s> (not unitary).
QubitState apply_sum(const PauliSum& h, const QubitState& s);

/// (sum_i lambda_i P_i)|s> for a ladder-operator expansion (not unitary).
QubitState apply_ladder(const LadderOperatorExpansion& op, const QubitState& s);

}  // namespace gfsim
