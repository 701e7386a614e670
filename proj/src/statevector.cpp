#include "gfsim/statevector.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

namespace gfsim {

namespace {

void check_size(const PauliString& p, const QubitState& s) {
  if (p.size() != s.n_qubits())
    throw std::invalid_argument("Pauli string on " + std::to_string(p.size()) +
                                " qubits applied to " + std::to_string(s.n_qubits()) +
                                "-qubit state");
}

struct PauliMasks {
  std::size_t xmask = 0;   // bits flipped (X or Y)
  std::size_t zmask = 0;   // bits contributing a sign (Z or Y)
  int n_y = 0;

  explicit PauliMasks(const PauliString& p) {
    for (int k = 0; k < p.size(); ++k) {
      const Pauli sym = p.at(k);
      if (sym == Pauli::X || sym == Pauli::Y) xmask |= std::size_t{1} << k;
      if (sym == Pauli::Z || sym == Pauli::Y) zmask |= std::size_t{1} << k;
      if (sym == Pauli::Y) ++n_y;
    }
  }
};

}  // namespace

QubitState::QubitState(int n_qubits, Eigen::VectorXcd amplitudes)
    : n_qubits_(n_qubits), amps_(std::move(amplitudes)) {
  if (n_qubits_ < 1 || n_qubits_ > 16)
    throw std::invalid_argument("unsupported register size " + std::to_string(n_qubits_));
  if (amps_.size() != (Eigen::Index{1} << n_qubits_))
    throw std::invalid_argument("amplitude vector length does not match register size");
}

QubitState QubitState::basis(int n_qubits, std::size_t index) {
  Eigen::VectorXcd a = Eigen::VectorXcd::Zero(Eigen::Index{1} << n_qubits);
  if (index >= static_cast<std::size_t>(a.size()))
    throw std::invalid_argument("basis index out of range");
  a[static_cast<Eigen::Index>(index)] = 1.0;
  return QubitState(n_qubits, std::move(a));
}

QubitState QubitState::normalized() const {
  const double n = norm();
  if (n == 0.0) throw std::runtime_error("cannot normalize the zero vector");
  return QubitState(n_qubits_, amps_ / n);
}

QubitState apply_pauli(const PauliString& p, const QubitState& s) {
  check_size(p, s);
  const PauliMasks m(p);
  // i^{#Y} * (-1)^{popcount(idx & zmask)} moves amp[idx] to idx ^ xmask.
  const std::complex<double> base = QuarterPhase(m.n_y).value();
  const auto& in = s.amplitudes();
  Eigen::VectorXcd out(in.size());
  for (std::size_t idx = 0; idx < static_cast<std::size_t>(in.size()); ++idx) {
    const bool flip = std::popcount(idx & m.zmask) & 1;
    out[static_cast<Eigen::Index>(idx ^ m.xmask)] =
        (flip ? -base : base) * in[static_cast<Eigen::Index>(idx)];
  }
  return QubitState(s.n_qubits(), std::move(out));
}

QubitState apply_pauli_exponential(double theta, const PauliString& p, const QubitState& s) {
  check_size(p, s);
  if (!std::isfinite(theta)) throw std::invalid_argument("non-finite rotation angle");
  const QubitState ps = apply_pauli(p, s);
  Eigen::VectorXcd out = std::cos(theta) * s.amplitudes() +
                         std::complex<double>(0, 1) * std::sin(theta) * ps.amplitudes();
  return QubitState(s.n_qubits(), std::move(out));
}

std::complex<double> inner(const QubitState& a, const QubitState& b) {
  if (a.n_qubits() != b.n_qubits())
    throw std::invalid_argument("inner product of states on different registers");
  return a.amplitudes().dot(b.amplitudes());
}

QubitState apply_sum(const PauliSum& h, const QubitState& s) {
  if (h.n_qubits() != s.n_qubits())
    throw std::invalid_argument("operator register size does not match state");
  Eigen::VectorXcd out = Eigen::VectorXcd::Zero(s.amplitudes().size());
  for (const auto& t : h.terms())
    out += t.coefficient * apply_pauli(t.string, s).amplitudes();
  return QubitState(s.n_qubits(), std::move(out));
}

double expectation(const PauliSum& h, const QubitState& s) {
  const std::complex<double> e = inner(s, apply_sum(h, s));
  if (std::abs(e.imag()) > 1e-10)
    throw std::runtime_error("expectation value has imaginary part " +
                             std::to_string(e.imag()));
  return e.real();
}

QubitState apply_ladder(const LadderOperatorExpansion& op, const QubitState& s) {
  if (op.strings.empty()) throw std::invalid_argument("empty ladder expansion");
  Eigen::VectorXcd out = Eigen::VectorXcd::Zero(s.amplitudes().size());
  for (std::size_t k = 0; k < op.size(); ++k)
    out += op.coefficients[k] * apply_pauli(op.strings[k], s).amplitudes();
  return QubitState(s.n_qubits(), std::move(out));
}

}  // namespace gfsim
