#include "gfsim/dimer.hpp"

#include <cmath>
#include <stdexcept>

#include "gfsim/exact.hpp"

namespace gfsim {

SymmetrySets SymmetrySets::dimer() {
  SymmetrySets sets;
  for (const char* s : {"XZXI", "YZYI", "IXZX", "IYZY"})
    sets.s1.push_back(PauliString::from_string(s));
  for (const char* s : {"ZZII", "IIZZ"})
    sets.s2.push_back(PauliString::from_string(s));
  return sets;
}

int SignTable::at(const PauliString& row, const PauliString& col) const {
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r] != row) continue;
    for (std::size_t c = 0; c < columns.size(); ++c)
      if (columns[c] == col) return sign[r][c];
  }
  throw std::invalid_argument("sign table has no entry for (" + row.str() + ", " +
                              col.str() + ")");
}

int SignTable::s1_column_sum(int col) const {
  int s = 0;
  for (int r = 0; r < 4; ++r) s += sign[r][col];
  return s;
}

int SignTable::s2_column_sum(int col) const {
  int s = 0;
  for (std::size_t r = 4; r < rows.size(); ++r) s += sign[r][col];
  return s;
}

SignTable sign_table(const std::vector<PauliString>& columns) {
  const SymmetrySets sets = SymmetrySets::dimer();
  SignTable t;
  t.rows = sets.s1;
  t.rows.insert(t.rows.end(), sets.s2.begin(), sets.s2.end());
  t.columns = columns;
  t.sign.assign(t.rows.size(), std::vector<int>(columns.size(), 0));
  for (std::size_t r = 0; r < t.rows.size(); ++r)
    for (std::size_t c = 0; c < columns.size(); ++c)
      t.sign[r][c] = commutes(t.rows[r], columns[c]) ? +1 : -1;
  return t;
}

SignTable sign_table() {
  std::vector<PauliString> cols;
  for (const char* s : {"XIII", "ZXII", "ZZXI", "ZZZX"})
    cols.push_back(PauliString::from_string(s));
  return sign_table(cols);
}

SymmetrySets verify_symmetry_sets(const PauliSum& h) {
  if (h.n_qubits() != 4)
    throw std::invalid_argument("symmetry sets are specific to the 4-qubit dimer");
  const SymmetrySets sets = SymmetrySets::dimer();

  // The sets must actually be components of h.
  for (const auto& group : {sets.s1, sets.s2})
    for (const auto& p : group) {
      bool found = false;
      for (const auto& t : h.terms()) found |= (t.string == p);
      if (!found)
        throw std::runtime_error("Hamiltonian is missing component " + p.str());
    }

  const Eigen::MatrixXcd hm = dense_matrix(h);
  for (const auto& group : {sets.s1, sets.s2}) {
    for (std::size_t a = 0; a < group.size(); ++a) {
      for (std::size_t b = 0; b < group.size(); ++b) {
        // (i) pairwise commutation inside the set
        if (!commutes(group[a], group[b]))
          throw std::runtime_error("property (i) violated for " + group[a].str() + ", " +
                                   group[b].str());
        // (ii) the pair product commutes with H, checked both through the
        // symbolic algebra and as a dense commutator
        const PauliProduct prod = multiply(group[a], group[b]);
        for (const auto& term : h.terms()) {
          if (!commutes(prod.string, term.string)) {
            const Eigen::MatrixXcd pm = dense_matrix(prod.string);
            if ((hm * pm - pm * hm).norm() > 1e-10)
              throw std::runtime_error("property (ii) violated for product " +
                                       prod.string.str());
          }
        }
        const Eigen::MatrixXcd pm = dense_matrix(prod.string);
        if ((hm * pm - pm * hm).norm() > 1e-10)
          throw std::runtime_error("property (ii) violated for product " + prod.string.str());
      }
      // (iii) squares to identity with phase +1
      for (const auto& p : group) {
        const PauliProduct sq = multiply(p, p);
        if (!sq.string.is_identity() || sq.phase.power_of_i() != 0)
          throw std::runtime_error("property (iii) violated for " + p.str());
      }
    }
  }
  return sets;
}

PropositionReport check_propositions(const QubitState& ground, const SymmetrySets& sets) {
  constexpr double kTol = 1e-10;
  PropositionReport rep;
  for (const auto& group : {sets.s1, sets.s2}) {
    for (std::size_t a = 0; a < group.size(); ++a) {
      const QubitState pa = apply_pauli(group[a], ground);
      for (std::size_t b = 0; b < group.size(); ++b) {
        const QubitState pb = apply_pauli(group[b], ground);
        const QubitState pab = apply_pauli(group[a], pb);
        const double r1 = (pab.amplitudes() - ground.amplitudes()).norm();
        const double r2 = (pa.amplitudes() - pb.amplitudes()).norm();
        const double alpha = inner(ground, pab).real();
        rep.max_pair_product_residual = std::max(rep.max_pair_product_residual, r1);
        rep.max_pair_state_residual = std::max(rep.max_pair_state_residual, r2);
        rep.min_alpha = std::min(rep.min_alpha, alpha);
      }
    }
  }
  rep.passed = rep.max_pair_product_residual <= kTol && rep.max_pair_state_residual <= kTol;
  if (!rep.passed)
    throw std::runtime_error("symmetry propositions fail on this state (residuals " +
                             std::to_string(rep.max_pair_product_residual) + ", " +
                             std::to_string(rep.max_pair_state_residual) + ")");
  return rep;
}

QubitState SinglePauliPropagator::apply(double t, const QubitState& state) const {
  return apply_pauli_exponential(sign * tau * t, generator, state);
}

SinglePauliPropagator single_pauli_propagator(const PauliString& p_tilde,
                                              const PauliString& p_l,
                                              const HubbardModel& model) {
  model.validate();
  if (model.n_sites != 2)
    throw std::invalid_argument("single-Pauli propagator exists only for the 2-site model");
  const SymmetrySets sets = SymmetrySets::dimer();
  bool in_s1 = false;
  for (const auto& p : sets.s1) in_s1 |= (p == p_l);
  if (!in_s1) throw std::invalid_argument(p_l.str() + " is not an S1 component");

  // The rule requires the S1 contributions to reinforce (column sum +2)
  // and the S2 contributions to cancel; both follow from the commutation
  // signs against p_tilde.
  int s1_sum = 0;
  for (const auto& p : sets.s1) s1_sum += commutes(p, p_tilde) ? +1 : -1;
  int s2_sum = 0;
  for (const auto& p : sets.s2) s2_sum += commutes(p, p_tilde) ? +1 : -1;
  if (s1_sum != 2 || s2_sum != 0)
    throw std::invalid_argument("no single-Pauli propagator for " + p_tilde.str() +
                                " (column sums " + std::to_string(s1_sum) + ", " +
                                std::to_string(s2_sum) + ")");

  SinglePauliPropagator prop;
  prop.generator = p_l;
  prop.sign = commutes(p_l, p_tilde) ? +1.0 : -1.0;
  prop.tau = model.tau;
  prop.identity_coefficient = -model.u / 2.0;
  return prop;
}

}  // namespace gfsim
