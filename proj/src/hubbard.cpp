#include "gfsim/hubbard.hpp"

#include <cmath>
#include <stdexcept>

namespace gfsim {

void HubbardModel::validate() const {
  if (n_sites < 2) throw std::invalid_argument("Hubbard model needs n_sites >= 2");
  if (n_sites > 4)
    throw std::invalid_argument("models beyond 4 sites (8 qubits) are out of range");
  if (boundary == Boundary::Periodic && n_sites == 2)
    throw std::invalid_argument(
        "periodic boundary with 2 sites double-counts the single bond");
  if (!std::isfinite(tau) || !std::isfinite(u))
    throw std::invalid_argument("non-finite model parameters");
}

int mode_index(const HubbardModel& m, int site, Spin spin) {
  if (site < 1 || site > m.n_sites)
    throw std::invalid_argument("site index " + std::to_string(site) + " out of range");
  return 2 * (site - 1) + (spin == Spin::Up ? 1 : 2);
}

namespace {

// Hopping pair c^dag_p c_q + c^dag_q c_p for modes p < q maps to
// (X_p Z...Z X_q + Y_p Z...Z Y_q)/2 with the Z string on the modes strictly
// between p and q.
std::pair<PauliString, PauliString> hopping_strings(int p, int q, int n) {
  std::vector<Pauli> sx(n, Pauli::I), sy(n, Pauli::I);
  sx[p - 1] = Pauli::X;
  sx[q - 1] = Pauli::X;
  sy[p - 1] = Pauli::Y;
  sy[q - 1] = Pauli::Y;
  for (int k = p; k < q - 1; ++k) {
    sx[k] = Pauli::Z;
    sy[k] = Pauli::Z;
  }
  return {PauliString(std::move(sx)), PauliString(std::move(sy))};
}

}  // namespace

PauliSum qubit_hamiltonian(const HubbardModel& m) {
  m.validate();
  const int n = m.n_qubits();
  PauliSum h(n);

  std::vector<std::pair<int, int>> bonds;
  for (int i = 1; i < m.n_sites; ++i) bonds.emplace_back(i, i + 1);
  if (m.boundary == Boundary::Periodic) bonds.emplace_back(m.n_sites, 1);

  for (const auto& [i, j] : bonds) {
    for (Spin s : {Spin::Up, Spin::Down}) {
      int p = mode_index(m, i, s);
      int q = mode_index(m, j, s);
      if (p > q) std::swap(p, q);
      auto [sx, sy] = hopping_strings(p, q, n);
      h.add(-m.tau / 2.0, sx);
      h.add(-m.tau / 2.0, sy);
    }
  }

  // U n_up n_dn - (U/2)(n_up + n_dn) per site reduces to
  // (U/4) Z_p Z_q - (U/4) I with n = (I - Z)/2; the single-Z parts cancel.
  for (int i = 1; i <= m.n_sites; ++i) {
    const int p = mode_index(m, i, Spin::Up);
    std::vector<Pauli> zz(n, Pauli::I);
    zz[p - 1] = Pauli::Z;
    zz[p] = Pauli::Z;
    h.add(m.u / 4.0, PauliString(std::move(zz)));
  }
  h.add(-m.u * m.n_sites / 4.0, PauliString::identity(n));
  return h;
}

LadderOperatorExpansion LadderOperatorExpansion::adjoint() const {
  LadderOperatorExpansion out = *this;
  for (auto& c : out.coefficients) c = std::conj(c);
  out.kind = (kind == LadderKind::Creation) ? LadderKind::Annihilation : LadderKind::Creation;
  return out;
}

LadderOperatorExpansion ladder_operator(const HubbardModel& m, int site, Spin spin,
                                        LadderKind kind) {
  m.validate();
  const int n = m.n_qubits();
  const int p = mode_index(m, site, spin);

  std::vector<Pauli> sx(n, Pauli::I), sy(n, Pauli::I);
  for (int k = 0; k < p - 1; ++k) {
    sx[k] = Pauli::Z;
    sy[k] = Pauli::Z;
  }
  sx[p - 1] = Pauli::X;
  sy[p - 1] = Pauli::Y;

  // c = (X + iY)/2 with the parity string; c^dag conjugates the Y part.
  LadderOperatorExpansion out;
  out.strings = {PauliString(std::move(sx)), PauliString(std::move(sy))};
  const std::complex<double> iy =
      (kind == LadderKind::Annihilation) ? std::complex<double>(0, 0.5)
                                         : std::complex<double>(0, -0.5);
  out.coefficients = {std::complex<double>(0.5, 0.0), iy};
  out.kind = kind;
  out.label = std::string("c") + (kind == LadderKind::Creation ? "+" : "") + "_" +
              std::to_string(site) + (spin == Spin::Up ? "u" : "d");
  return out;
}

LadderOperatorExpansion momentum_operator(const HubbardModel& m,
                                          const std::vector<ModeCombination>& combo,
                                          LadderKind kind, bool normalize) {
  if (combo.empty()) throw std::invalid_argument("empty mode combination");
  double norm2 = 0.0;
  for (const auto& c : combo) norm2 += std::norm(c.coefficient);
  const double scale = normalize ? 1.0 / std::sqrt(norm2) : 1.0;

  LadderOperatorExpansion out;
  out.kind = kind;
  for (const auto& c : combo) {
    auto single = ladder_operator(m, c.site, c.spin, kind);
    std::complex<double> alpha = c.coefficient * scale;
    if (kind == LadderKind::Creation) alpha = std::conj(alpha);
    for (std::size_t k = 0; k < single.size(); ++k) {
      out.strings.push_back(single.strings[k]);
      out.coefficients.push_back(alpha * single.coefficients[k]);
    }
    out.label += (out.label.empty() ? "" : "+") + single.label;
  }
  return out;
}

}  // namespace gfsim
