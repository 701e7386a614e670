#pragma once

#include <complex>
#include <string>
#include <vector>

#include "gfsim/pauli.hpp"

namespace gfsim {

enum class Boundary { Open, Periodic };
enum class Spin { Up, Down };
enum class LadderKind { Creation, Annihilation };

/// One-band Hubbard chain with hopping tau, on-site interaction U and the
/// half-filling chemical potential -U/2 per mode folded in.
struct HubbardModel {
  int n_sites = 2;
  double tau = 1.0;
  double u = 3.0;
  Boundary boundary = Boundary::Open;

  int n_qubits() const { return 2 * n_sites; }
  void validate() const;
};

/// A creation or annihilation operator written as sum_i lambda_i P_i.
/// Single-mode operators have exactly two strings (the X- and Y-type words
/// with a Z parity string on all preceding qubits) with |lambda| = 1/2.
struct LadderOperatorExpansion {
  std::vector<std::complex<double>> coefficients;
  std::vector<PauliString> strings;
  LadderKind kind = LadderKind::Annihilation;
  std::string label;

  std::size_t size() const { return strings.size(); }
  /// Adjoint: conjugates every coefficient, flips the kind.
  LadderOperatorExpansion adjoint() const;
};

/// Qubit index (1-based) of mode (site, spin) under the interleaved
/// ordering (1u,1d,2u,2d,...) -> (q1,q2,q3,q4,...).
int mode_index(const HubbardModel& m, int site, Spin spin);

/// Jordan-Wigner image of the Hubbard Hamiltonian. Hopping terms come
/// first (bond-ascending, spin up before down, X before Y), then the
/// nearest-pair ZZ interaction terms, then the identity term. Single-Z
/// contributions from the interaction and the chemical potential cancel
/// exactly and never appear.
PauliSum qubit_hamiltonian(const HubbardModel& m);

/// Single-mode ladder operator. site is 1-based; throws if out of range.
LadderOperatorExpansion ladder_operator(const HubbardModel& m, int site, Spin spin,
                                        LadderKind kind);

struct ModeCombination {
  std::complex<double> coefficient;
  int site = 1;
  Spin spin = Spin::Up;
};

/// Linear combination of modes, e.g. c_{1u} - c_{2u}. The combination
/// coefficients describe the annihilation operator; kind = Creation
/// returns its adjoint. When normalize is set (the default) the result is
/// divided by the Euclidean norm of the combination coefficients, which
/// makes the equal-time sum rule G^R(0) = -i hold for diagonal components.
LadderOperatorExpansion momentum_operator(const HubbardModel& m,
                                          const std::vector<ModeCombination>& combo,
                                          LadderKind kind, bool normalize = true);

}  // namespace gfsim
