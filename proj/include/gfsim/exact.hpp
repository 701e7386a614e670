#pragma once

#include <Eigen/Dense>
#include <vector>

#include "gfsim/greens_types.hpp"
#include "gfsim/hubbard.hpp"
#include "gfsim/pauli.hpp"
#include "gfsim/statevector.hpp"

namespace gfsim {

/// Dense matrix of a single Pauli word (register cap: 8 qubits).
Eigen::MatrixXcd dense_matrix(const PauliString& p);

/// Dense matrix of a Pauli sum.
Eigen::MatrixXcd dense_matrix(const PauliSum& h);

/// Hermitian eigendecomposition with eigenvalues ascending. Construction
/// verifies the reconstruction error is below 1e-10.
class SpectralDecomposition {
 public:
  explicit SpectralDecomposition(const PauliSum& h);

  const Eigen::VectorXd& eigenvalues() const { return eigenvalues_; }
  const Eigen::MatrixXcd& eigenvectors() const { return eigenvectors_; }
  int n_qubits() const { return n_qubits_; }
  double degeneracy_tolerance() const { return degeneracy_tolerance_; }

  /// V e^{-i Lambda t} V^dag |s>.
  QubitState propagate(double t, const QubitState& s) const;

  /// Number of eigenvalues within degeneracy_tolerance of the lowest.
  int ground_degeneracy() const;

  /// Lowest eigenpair. Under degeneracy the returned state is canonical:
  /// the ground-space projection of the first computational basis vector
  /// with non-negligible overlap (selector picks the k-th vector of the
  /// index-ordered Gram-Schmidt basis of the ground space), phase-fixed so
  /// its largest-magnitude amplitude is real positive.
  std::pair<double, QubitState> ground_state(int selector = 0) const;

 private:
  int n_qubits_ = 0;
  double degeneracy_tolerance_ = 1e-9;
  Eigen::VectorXd eigenvalues_;
  Eigen::MatrixXcd eigenvectors_;
};

/// Lesser, greater and retarded components on a uniform grid by exact
/// propagation; the golden reference for every algorithmic variant.
/// left is the annihilation expansion of c_l, right the creation
/// expansion of c+_m.
GreensFunctionSet exact_greens(const SpectralDecomposition& sd, const QubitState& ground,
                               double ground_energy,
                               const LadderOperatorExpansion& left,
                               const LadderOperatorExpansion& right,
                               const TimeGrid& grid);

}  // namespace gfsim
