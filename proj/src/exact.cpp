#include "gfsim/exact.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>

namespace gfsim {

namespace {

constexpr int kMaxQubits = 8;

Eigen::Matrix2cd single_qubit_matrix(Pauli p) {
  using C = std::complex<double>;
  Eigen::Matrix2cd m;
  switch (p) {
    case Pauli::I: m << 1, 0, 0, 1; break;
    case Pauli::X: m << 0, 1, 1, 0; break;
    case Pauli::Y: m << 0, C(0, -1), C(0, 1), 0; break;
    case Pauli::Z: m << 1, 0, 0, -1; break;
  }
  return m;
}

}  // namespace

Eigen::MatrixXcd dense_matrix(const PauliString& p) {
  if (p.size() > kMaxQubits)
    throw std::invalid_argument("dense matrices are capped at 8 qubits");
  // Qubit 1 is the least significant bit, so it is the rightmost Kronecker
  // factor: M = sym(q_n) (x) ... (x) sym(q_1).
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Identity(1, 1);
  for (int k = p.size() - 1; k >= 0; --k) {
    const Eigen::Matrix2cd s = single_qubit_matrix(p.at(k));
    Eigen::MatrixXcd next(2 * m.rows(), 2 * m.cols());
    next.topLeftCorner(m.rows(), m.cols()) = s(0, 0) * m;
    next.topRightCorner(m.rows(), m.cols()) = s(0, 1) * m;
    next.bottomLeftCorner(m.rows(), m.cols()) = s(1, 0) * m;
    next.bottomRightCorner(m.rows(), m.cols()) = s(1, 1) * m;
    m.swap(next);
  }
  return m;
}

Eigen::MatrixXcd dense_matrix(const PauliSum& h) {
  if (h.n_qubits() > kMaxQubits)
    throw std::invalid_argument("dense matrices are capped at 8 qubits");
  const Eigen::Index dim = Eigen::Index{1} << h.n_qubits();
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
  for (const auto& t : h.terms()) m += t.coefficient * dense_matrix(t.string);
  return m;
}

SpectralDecomposition::SpectralDecomposition(const PauliSum& h) : n_qubits_(h.n_qubits()) {
  const Eigen::MatrixXcd hm = dense_matrix(h);
  if ((hm - hm.adjoint()).norm() > 1e-12 * std::max(1.0, hm.norm()))
    throw std::runtime_error("Hamiltonian matrix is not Hermitian");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(hm);
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("eigendecomposition failed");
  eigenvalues_ = solver.eigenvalues();
  eigenvectors_ = solver.eigenvectors();
  const Eigen::MatrixXcd rebuilt = eigenvectors_ *
                                   eigenvalues_.asDiagonal().toDenseMatrix().cast<std::complex<double>>() *
                                   eigenvectors_.adjoint();
  if ((hm - rebuilt).norm() > 1e-10 * std::max(1.0, hm.norm()))
    throw std::runtime_error("eigendecomposition reconstruction error too large");
}

QubitState SpectralDecomposition::propagate(double t, const QubitState& s) const {
  if (s.n_qubits() != n_qubits_)
    throw std::invalid_argument("state register size does not match decomposition");
  Eigen::VectorXcd coeffs = eigenvectors_.adjoint() * s.amplitudes();
  for (Eigen::Index k = 0; k < coeffs.size(); ++k)
    coeffs[k] *= std::exp(std::complex<double>(0, -eigenvalues_[k] * t));
  return QubitState(n_qubits_, eigenvectors_ * coeffs);
}

int SpectralDecomposition::ground_degeneracy() const {
  int d = 1;
  while (d < eigenvalues_.size() &&
         eigenvalues_[d] - eigenvalues_[0] < degeneracy_tolerance_)
    ++d;
  return d;
}

std::pair<double, QubitState> SpectralDecomposition::ground_state(int selector) const {
  const int deg = ground_degeneracy();
  if (selector < 0 || selector >= deg)
    throw std::invalid_argument("ground-state selector out of range for degeneracy " +
                                std::to_string(deg));
  const Eigen::Index dim = eigenvectors_.rows();
  const Eigen::MatrixXcd block = eigenvectors_.leftCols(deg);

  // Canonical basis of the ground space: project computational basis
  // vectors in index order and Gram-Schmidt the survivors. This removes
  // the solver's arbitrary rotation within a degenerate block.
  std::vector<Eigen::VectorXcd> basis;
  for (Eigen::Index b = 0; b < dim && static_cast<int>(basis.size()) < deg; ++b) {
    Eigen::VectorXcd v = block * (block.adjoint().col(b));
    for (const auto& u : basis) v -= u.dot(v) * u;
    const double nrm = v.norm();
    if (nrm > 1e-6) basis.push_back(v / nrm);
  }
  if (static_cast<int>(basis.size()) <= selector)
    throw std::runtime_error("ground-space canonicalization failed");

  Eigen::VectorXcd v = basis[selector];
  // Phase fix: largest-magnitude amplitude (lowest index on ties) made
  // real positive.
  Eigen::Index imax = 0;
  double best = -1.0;
  for (Eigen::Index k = 0; k < v.size(); ++k) {
    if (std::abs(v[k]) > best + 1e-12) {
      best = std::abs(v[k]);
      imax = k;
    }
  }
  v *= std::conj(v[imax]) / std::abs(v[imax]);
  return {eigenvalues_[0], QubitState(n_qubits_, std::move(v))};
}

GreensFunctionSet exact_greens(const SpectralDecomposition& sd, const QubitState& ground,
                               double ground_energy,
                               const LadderOperatorExpansion& left,
                               const LadderOperatorExpansion& right,
                               const TimeGrid& grid) {
  grid.validate();
  const std::string label = left.label + "|" + right.label;
  GreensSeries lesser{label, GreensKind::Lesser, GreensAlgorithm::Exact, grid, {}, {}};
  GreensSeries greater{label, GreensKind::Greater, GreensAlgorithm::Exact, grid, {}, {}};
  lesser.values.resize(grid.size());
  greater.values.resize(grid.size());

  const std::complex<double> im(0, 1);
  const QubitState added = apply_ladder(right, ground);          // c+_m |psi>
  const QubitState removed = apply_ladder(right.adjoint(), ground);  // c_m |psi>
  const LadderOperatorExpansion left_dag = left.adjoint();        // c+_l

  for (int k = 0; k < grid.size(); ++k) {
    const double t = grid.time(k);
    // G^<(t) = -i e^{iE0 t} <psi| c_l e^{-iHt} c+_m |psi>
    const QubitState fwd = sd.propagate(t, added);
    lesser.values[k] = -im * std::exp(im * ground_energy * t) *
                       inner(apply_ladder(left_dag, ground), fwd);
    // G^>(t) = +i e^{-iE0 t} <psi| c+_m e^{+iHt} c_l |psi>
    const QubitState bwd = sd.propagate(-t, apply_ladder(left, ground));
    greater.values[k] = im * std::exp(-im * ground_energy * t) *
                        inner(removed, bwd);
  }
  GreensFunctionSet out{lesser, greater, retarded(lesser, greater)};
  return out;
}

}  // namespace gfsim
