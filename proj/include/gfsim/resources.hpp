#pragma once

#include <string>
#include <vector>

#include "gfsim/hubbard.hpp"
#include "gfsim/pauli.hpp"

namespace gfsim {

struct GateCost {
  long one_qubit = 0;
  long two_qubit = 0;
  long total() const { return one_qubit + two_qubit; }
};

/// Gate cost of exponentiating one Pauli word on hardware. Uncontrolled:
/// 2(w-1) entangling gates plus one rotation and two basis changes per X
/// or Y symbol. Controlled: only the central rotation is controlled, so it
/// moves from the 1-qubit to the 2-qubit column. Throws on weight 0.
GateCost exp_gate_cost(const PauliString& p, bool controlled);

struct TermCost {
  PauliString string;
  GateCost cost;
};

struct GateCountReport {
  std::string algorithm;  // "OS" or "CF"
  int depth = 1;
  long one_qubit = 0;
  long two_qubit = 0;
  long ansatz_depth = 0;  // the 1-qubit + 2-qubit total
  std::vector<TermCost> per_term;  // single-layer breakdown
};

/// Controlled ansatz over all non-identity terms, times depth.
GateCountReport os_count(const PauliSum& h, int depth);
/// Uncontrolled ansatz over all non-identity terms, times depth.
GateCountReport cf_count(const PauliSum& h, int depth);

/// Depth-ratio bound 1 + 1/(2(w_mean - 1)) above which the one-state
/// algorithm needs fewer entangling gates than the control-free one.
double advantage_threshold(double average_weight);
double advantage_threshold(const PauliSum& h);

struct Rational {
  long num = 0;
  long den = 1;
  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
};

/// Mean Pauli weight (14n-12)/(5n-4) of the open n-site chain, reduced.
Rational chain_weight_formula(int n_sites);

/// One row of the published gate-count table.
struct ResourceTableRow {
  std::string model;
  std::string algorithm;
  int depth = 0;           // 0 = the dimer symmetry ansatz (no depth label)
  long one_qubit = 0;
  long two_qubit = 0;
  long ansatz_depth = 0;
};

/// The nine (model, algorithm, depth) rows for the 2-, 3- and 4-site
/// benchmarks. The 2-site one-state row is the single controlled
/// symmetry-propagator exponential, not a full layered ansatz.
std::vector<ResourceTableRow> benchmark_resource_table();

/// Closed-form entangling-gate counts: d * n_p * (2(w_mean-1)+1) for the
/// controlled (one-state) ansatz and d * n_p * 2(w_mean-1) for the
/// uncontrolled one. Equal to the per-term enumeration for every model.
long os_two_qubit_closed_form(const PauliSum& h, int depth);
long cf_two_qubit_closed_form(const PauliSum& h, int depth);

}  // namespace gfsim
