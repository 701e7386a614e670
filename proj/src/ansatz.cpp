#include "gfsim/ansatz.hpp"

#include <stdexcept>

namespace gfsim {

VhaAnsatz VhaAnsatz::from_hamiltonian(const PauliSum& h, int depth) {
  VhaAnsatz a;
  a.generators = h.non_identity_terms();
  a.depth = depth;
  a.n_qubits = h.n_qubits();
  a.validate();
  return a;
}

void VhaAnsatz::validate() const {
  if (depth < 1) throw std::invalid_argument("ansatz depth must be >= 1");
  if (generators.empty()) throw std::invalid_argument("ansatz needs at least one generator");
  for (const auto& g : generators) {
    if (g.string.size() != n_qubits)
      throw std::invalid_argument("generator register size mismatch");
    if (g.string.is_identity())
      throw std::invalid_argument("identity generator is not allowed");
  }
}

const PauliTerm& VhaAnsatz::generator_at(int flat_index) const {
  if (flat_index < 0 || flat_index >= parameter_count())
    throw std::invalid_argument("parameter index out of range");
  return generators[flat_index % generator_count()];
}

VhaAnsatz VhaAnsatz::extended_with_ancilla() const {
  VhaAnsatz out;
  out.depth = depth;
  out.n_qubits = n_qubits + 1;
  out.generators.reserve(generators.size());
  for (const auto& g : generators) {
    std::vector<Pauli> syms = g.string.symbols();
    syms.push_back(Pauli::I);
    out.generators.push_back(PauliTerm{g.coefficient, PauliString(std::move(syms))});
  }
  return out;
}

namespace {

void check_theta(const VhaAnsatz& a, const Eigen::VectorXd& theta) {
  if (theta.size() != a.parameter_count())
    throw std::invalid_argument("expected " + std::to_string(a.parameter_count()) +
                                " parameters, got " + std::to_string(theta.size()));
}

QubitState apply_signed(const VhaAnsatz& a, const Eigen::VectorXd& theta,
                        const QubitState& s, double sign) {
  check_theta(a, theta);
  QubitState out = s;
  for (int k = 0; k < a.parameter_count(); ++k)
    out = apply_pauli_exponential(sign * theta[k], a.generator_at(k).string, out);
  return out;
}

QubitState tangent_signed(const VhaAnsatz& a, const Eigen::VectorXd& theta,
                          int flat_index, const QubitState& s0, double sign) {
  check_theta(a, theta);
  if (flat_index < 0 || flat_index >= a.parameter_count())
    throw std::invalid_argument("parameter index out of range");
  QubitState t = s0;
  for (int k = 0; k <= flat_index; ++k)
    t = apply_pauli_exponential(sign * theta[k], a.generator_at(k).string, t);
  t = apply_pauli(a.generator_at(flat_index).string, t);
  Eigen::VectorXcd amps = std::complex<double>(0, sign) * t.amplitudes();
  t = QubitState(t.n_qubits(), std::move(amps));
  for (int k = flat_index + 1; k < a.parameter_count(); ++k)
    t = apply_pauli_exponential(sign * theta[k], a.generator_at(k).string, t);
  return t;
}

}  // namespace

QubitState apply_vha(const VhaAnsatz& a, const Eigen::VectorXd& theta, const QubitState& s) {
  return apply_signed(a, theta, s, +1.0);
}

QubitState tangent_state(const VhaAnsatz& a, const Eigen::VectorXd& theta, int flat_index,
                         const QubitState& s0) {
  return tangent_signed(a, theta, flat_index, s0, +1.0);
}

QubitState apply_evolution(const VhaAnsatz& a, const Eigen::VectorXd& theta,
                           const QubitState& s) {
  return apply_signed(a, theta, s, -1.0);
}

QubitState evolution_tangent(const VhaAnsatz& a, const Eigen::VectorXd& theta,
                             int flat_index, const QubitState& s0) {
  return tangent_signed(a, theta, flat_index, s0, -1.0);
}

TangentFrame evolution_tangent_frame(const VhaAnsatz& a, const Eigen::VectorXd& theta,
                                     const QubitState& s0) {
  check_theta(a, theta);
  const int K = a.parameter_count();
  const Eigen::Index dim = s0.amplitudes().size();

  // Forward pass: prefix[k] = (factors 0..k-1) |s0>.
  std::vector<QubitState> prefix;
  prefix.reserve(K + 1);
  prefix.push_back(s0);
  for (int k = 0; k < K; ++k)
    prefix.push_back(
        apply_pauli_exponential(-theta[k], a.generator_at(k).string, prefix.back()));

  TangentFrame frame;
  frame.state = prefix.back().amplitudes();
  frame.tangents.resize(dim, K);
  for (int k = 0; k < K; ++k) {
    QubitState t = apply_pauli(a.generator_at(k).string, prefix[k + 1]);
    Eigen::VectorXcd amps = std::complex<double>(0, -1) * t.amplitudes();
    t = QubitState(t.n_qubits(), std::move(amps));
    for (int j = k + 1; j < K; ++j)
      t = apply_pauli_exponential(-theta[j], a.generator_at(j).string, t);
    frame.tangents.col(k) = t.amplitudes();
  }
  return frame;
}

}  // namespace gfsim
