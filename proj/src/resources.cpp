#include "gfsim/resources.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace gfsim {

GateCost exp_gate_cost(const PauliString& p, bool controlled) {
  const int w = weight(p);
  if (w == 0) throw std::invalid_argument("cannot exponentiate the identity word");
  int n_xy = 0;
  for (Pauli s : p.symbols())
    if (s == Pauli::X || s == Pauli::Y) ++n_xy;

  GateCost c;
  if (controlled) {
    c.one_qubit = 2L * n_xy;
    c.two_qubit = 2L * (w - 1) + 1;
  } else {
    c.one_qubit = 2L * n_xy + 1;
    c.two_qubit = 2L * (w - 1);
  }
  return c;
}

namespace {

GateCountReport count_ansatz(const PauliSum& h, int depth, bool controlled,
                             const std::string& name) {
  if (depth < 1) throw std::invalid_argument("depth must be >= 1");
  GateCountReport rep;
  rep.algorithm = name;
  rep.depth = depth;
  long one = 0, two = 0;
  for (const auto& t : h.non_identity_terms()) {
    const GateCost c = exp_gate_cost(t.string, controlled);
    rep.per_term.push_back(TermCost{t.string, c});
    one += c.one_qubit;
    two += c.two_qubit;
  }
  rep.one_qubit = one * depth;
  rep.two_qubit = two * depth;
  rep.ansatz_depth = rep.one_qubit + rep.two_qubit;
  return rep;
}

}  // namespace

GateCountReport os_count(const PauliSum& h, int depth) {
  return count_ansatz(h, depth, /*controlled=*/true, "OS");
}

GateCountReport cf_count(const PauliSum& h, int depth) {
  return count_ansatz(h, depth, /*controlled=*/false, "CF");
}

double advantage_threshold(double average_weight) {
  if (!(average_weight > 1.0))
    throw std::invalid_argument("advantage threshold needs mean weight > 1");
  return 1.0 + 1.0 / (2.0 * (average_weight - 1.0));
}

double advantage_threshold(const PauliSum& h) {
  return advantage_threshold(average_weight(h, /*include_identity=*/false));
}

Rational chain_weight_formula(int n_sites) {
  if (n_sites < 2) throw std::invalid_argument("chain needs n >= 2 sites");
  long num = 14L * n_sites - 12;
  long den = 5L * n_sites - 4;
  const long g = std::gcd(num, den);
  return Rational{num / g, den / g};
}

long os_two_qubit_closed_form(const PauliSum& h, int depth) {
  const auto terms = h.non_identity_terms();
  const long np = static_cast<long>(terms.size());
  const double wbar = average_weight(h, false);
  const double v = depth * np * (2.0 * (wbar - 1.0) + 1.0);
  return std::lround(v);
}

long cf_two_qubit_closed_form(const PauliSum& h, int depth) {
  const auto terms = h.non_identity_terms();
  const long np = static_cast<long>(terms.size());
  const double v = depth * np * 2.0 * (average_weight(h, false) - 1.0);
  return std::lround(v);
}

std::vector<ResourceTableRow> benchmark_resource_table() {
  std::vector<ResourceTableRow> rows;
  auto push = [&rows](const std::string& model, const GateCountReport& rep, int depth_label) {
    rows.push_back(ResourceTableRow{model, rep.algorithm, depth_label, rep.one_qubit,
                                    rep.two_qubit, rep.ansatz_depth});
  };

  // Two-site model: the one-state ansatz is the single controlled
  // symmetry exponential e^{i sigma tau t XZXI}.
  {
    const HubbardModel m{2, 1.0, 3.0, Boundary::Open};
    const PauliSum h = qubit_hamiltonian(m);
    const GateCost sym = exp_gate_cost(PauliString::from_string("XZXI"), true);
    rows.push_back(ResourceTableRow{"2-site", "OS", 0, sym.one_qubit, sym.two_qubit,
                                    sym.total()});
    push("2-site", cf_count(h, 1), 1);
    push("2-site", cf_count(h, 2), 2);
  }
  {
    const HubbardModel m{3, 1.0, 3.0, Boundary::Open};
    const PauliSum h = qubit_hamiltonian(m);
    push("3-site", os_count(h, 3), 3);
    push("3-site", cf_count(h, 3), 3);
    push("3-site", cf_count(h, 5), 5);
  }
  {
    const HubbardModel m{4, 1.0, 3.0, Boundary::Periodic};
    const PauliSum h = qubit_hamiltonian(m);
    push("4-site", os_count(h, 3), 3);
    push("4-site", cf_count(h, 4), 4);
    push("4-site", cf_count(h, 5), 5);
  }
  return rows;
}

}  // namespace gfsim
