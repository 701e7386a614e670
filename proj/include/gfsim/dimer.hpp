#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "gfsim/hubbard.hpp"
#include "gfsim/pauli.hpp"
#include "gfsim/statevector.hpp"

namespace gfsim {

/// The two families of mutually commuting Hamiltonian components of the
/// 2-site model. Within each set all pairs commute, every pair product
/// commutes with H, and every element squares to the identity.
struct SymmetrySets {
  std::vector<PauliString> s1;  // XZXI, YZYI, IXZX, IYZY
  std::vector<PauliString> s2;  // ZZII, IIZZ

  static SymmetrySets dimer();
};

/// Sign sigma(P_l, P~) = +1 if [P_l, P~] = 0 and -1 otherwise, tabulated
/// for the Hamiltonian components (rows) against the mapped ladder words
/// (columns, default XIII ZXII ZZXI ZZZX).
struct SignTable {
  std::vector<PauliString> rows;     // S1 then S2, in that order
  std::vector<PauliString> columns;
  std::vector<std::vector<int>> sign;  // sign[row][col] in {+1,-1}

  int at(const PauliString& row, const PauliString& col) const;
  /// Column sum over the S1 rows (first four); +2 for every ladder word.
  int s1_column_sum(int col) const;
  /// Column sum over the S2 rows (last two); 0 for every ladder word.
  int s2_column_sum(int col) const;
};

/// Builds the table from the commutation rule.
SignTable sign_table();
SignTable sign_table(const std::vector<PauliString>& columns);

/// Verifies properties (i)-(iii) on the sets against the given dimer
/// Hamiltonian (pairwise commutation, pair products commuting with H both
/// symbolically and as dense matrices, squares equal to identity).
/// Throws std::runtime_error naming the violated property otherwise.
SymmetrySets verify_symmetry_sets(const PauliSum& h);

struct PropositionReport {
  double max_pair_product_residual = 0.0;   // || P_l P_m |psi> - |psi> ||
  double max_pair_state_residual = 0.0;     // || P_l |psi> - P_m |psi> ||
  double min_alpha = 1.0;                   // min <psi|P_l P_m|psi> over pairs
  bool passed = false;
};

/// Checks P_l P_m |psi> = |psi> and P_l |psi> = P_m |psi> for all pairs
/// within each set, to 1e-10. Throws on failure.
PropositionReport check_propositions(const QubitState& ground, const SymmetrySets& sets);

/// The closed-form propagator for the 2-site model: e^{-iHt} applied to
/// P~|psi> equals e^{-i c_I t} e^{+i sigma tau t P_l} P~|psi> for any
/// P_l in S1, where sigma = sign(P_l, P~) and c_I = -U/2 is the identity
/// coefficient of the qubit Hamiltonian.
struct SinglePauliPropagator {
  PauliString generator;    // the chosen P_l
  double sign = 1.0;        // sigma
  double tau = 1.0;
  double identity_coefficient = 0.0;  // c_I

  /// Requires state = P~|psi> for the p_tilde this rule was built for.
  QubitState apply(double t, const QubitState& state) const;
  /// Phase theta0(t) = -c_I t accompanying the unitary.
  double phase(double t) const { return -identity_coefficient * t; }
};

/// Builds the rule for one ladder word p_tilde and one choice of P_l in
/// S1. Verifies the cancellation structure (S2 contributions cancel, S1
/// contributions reinforce to exactly 2) and throws if p_tilde does not
/// satisfy it.
SinglePauliPropagator single_pauli_propagator(const PauliString& p_tilde,
                                              const PauliString& p_l,
                                              const HubbardModel& model);

}  // namespace gfsim
