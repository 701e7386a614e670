#include "gfsim/greens.hpp"

#include <cmath>
#include <future>
#include <stdexcept>

namespace gfsim {

std::complex<double> sample_braket(std::complex<double> exact, long shots,
                                   std::mt19937_64& rng) {
  if (shots == 0) return exact;
  if (shots < 0) throw std::invalid_argument("negative shot count");
  if (std::abs(exact.real()) > 1.0 + 1e-9 || std::abs(exact.imag()) > 1.0 + 1e-9)
    throw std::invalid_argument("braket outside the unit box cannot come from a unitary chain");

  auto quadrature = [&](double value) {
    const double p = std::clamp(0.5 * (1.0 + value), 0.0, 1.0);
    std::binomial_distribution<long> bin(shots, p);
    return 2.0 * static_cast<double>(bin(rng)) / static_cast<double>(shots) - 1.0;
  };
  const double re = quadrature(exact.real());    // ancilla phase 0
  const double im = quadrature(exact.imag());    // ancilla phase -pi/2
  return {re, im};
}

std::complex<double> hadamard_braket(const QubitState& a, const std::vector<UnitaryOp>& chain,
                                     long shots, std::mt19937_64& rng) {
  QubitState b = a;
  for (const auto& op : chain) b = op(b);
  if (std::abs(b.norm() - 1.0) > 1e-9)
    throw std::invalid_argument("operator chain is not norm-preserving");
  return sample_braket(inner(a, b), shots, rng);
}

namespace {

std::vector<QubitState> word_states(const std::vector<PauliString>& words,
                                    const QubitState& ground) {
  std::vector<QubitState> out;
  out.reserve(words.size());
  for (const auto& w : words) out.push_back(apply_pauli(w, ground));
  return out;
}

}  // namespace

ExactOsPropagator::ExactOsPropagator(const SpectralDecomposition& sd, const QubitState& ground,
                                     const std::vector<PauliString>& words, const TimeGrid& grid)
    : sd_(sd), grid_(grid), initial_(word_states(words, ground)) {}

QubitState ExactOsPropagator::state(int j, int k) const {
  return sd_.propagate(grid_.time(k), initial_.at(j));
}

VqsOsPropagator::VqsOsPropagator(const PauliSum& h, const QubitState& ground,
                                 const std::vector<PauliString>& words,
                                 const VhaAnsatz& ansatz, const TimeGrid& grid,
                                 const EvolveOptions& options)
    : ansatz_(ansatz), initial_(word_states(words, ground)) {
  // Each word evolves independently; the integrations share nothing and
  // run concurrently.
  std::vector<std::future<VqsTrajectory>> futures;
  futures.reserve(initial_.size());
  for (const auto& s0 : initial_)
    futures.push_back(std::async(std::launch::async, [&, s0]() {
      return evolve(ansatz_, s0, h, grid, options);
    }));
  trajectories_.reserve(futures.size());
  for (auto& f : futures) trajectories_.push_back(f.get());
}

QubitState VqsOsPropagator::state(int j, int k) const {
  return apply_evolution(ansatz_, trajectories_.at(j).theta_at(k), initial_.at(j));
}

double VqsOsPropagator::phase(int j, int k) const {
  return trajectories_.at(j).theta0_at(k);
}

SymmetryOsPropagator::SymmetryOsPropagator(const HubbardModel& model, const QubitState& ground,
                                           const std::vector<PauliString>& words,
                                           const TimeGrid& grid)
    : grid_(grid), initial_(word_states(words, ground)) {
  const PauliString p_l = PauliString::from_string("XZXI");
  rules_.reserve(words.size());
  for (const auto& w : words) rules_.push_back(single_pauli_propagator(w, p_l, model));
}

QubitState SymmetryOsPropagator::state(int j, int k) const {
  return rules_.at(j).apply(grid_.time(k), initial_.at(j));
}

double SymmetryOsPropagator::phase(int j, int k) const {
  return rules_.at(j).phase(grid_.time(k));
}

TrotterOsPropagator::TrotterOsPropagator(const PauliSum& h, const QubitState& ground,
                                         const std::vector<PauliString>& words,
                                         const TimeGrid& grid, int steps_per_unit_time)
    : h_(h), grid_(grid), steps_per_unit_time_(steps_per_unit_time),
      initial_(word_states(words, ground)) {
  if (steps_per_unit_time < 1)
    throw std::invalid_argument("Trotter steps per unit time must be >= 1");
}

QubitState TrotterOsPropagator::state(int j, int k) const {
  const double t = grid_.time(k);
  if (k == 0) return initial_.at(j);
  const int steps = std::max(1, static_cast<int>(std::ceil(t * steps_per_unit_time_)));
  return trotter_propagate(h_, t, steps, initial_.at(j));
}

namespace {

struct ExpansionPair {
  std::vector<PauliString> words;           // distinct right-hand words
  Eigen::VectorXcd left_coeffs;             // L_i over left strings
  Eigen::VectorXcd right_coeffs;            // R_j over words
  std::vector<PauliString> left_words;
};

ExpansionPair make_pair(const LadderOperatorExpansion& left,
                        const LadderOperatorExpansion& right) {
  if (left.kind != LadderKind::Annihilation)
    throw std::invalid_argument("left operator must be an annihilation expansion");
  if (right.kind != LadderKind::Creation)
    throw std::invalid_argument("right operator must be a creation expansion");
  ExpansionPair p;
  p.words = right.strings;
  p.right_coeffs.resize(right.size());
  for (std::size_t j = 0; j < right.size(); ++j) p.right_coeffs[j] = right.coefficients[j];
  p.left_words = left.strings;
  p.left_coeffs.resize(left.size());
  for (std::size_t i = 0; i < left.size(); ++i) p.left_coeffs[i] = left.coefficients[i];
  return p;
}

GreensFunctionSet assemble_components(const std::string& label, GreensAlgorithm tag,
                                      const TimeGrid& grid,
                                      const std::vector<Eigen::MatrixXcd>& brakets,
                                      const ExpansionPair& pair, double e0,
                                      bool energy_phase, long shots) {
  GreensSeries lesser{label, GreensKind::Lesser, tag, grid, {}, {}};
  GreensSeries greater{label, GreensKind::Greater, tag, grid, {}, {}};
  if (shots > 0) {
    lesser.shots = shots;
    greater.shots = shots;
  }
  lesser.values.resize(grid.size());
  greater.values.resize(grid.size());
  const std::complex<double> im(0, 1);
  for (int k = 0; k < grid.size(); ++k) {
    const double t = grid.time(k);
    const std::complex<double> fwd = energy_phase ? std::exp(im * e0 * t)
                                                  : std::complex<double>(1, 0);
    const Eigen::MatrixXcd& b = brakets[k];
    const std::complex<double> sl =
        (pair.left_coeffs.transpose() * b * pair.right_coeffs).value();
    const std::complex<double> sg =
        (pair.left_coeffs.transpose() * b.conjugate() * pair.right_coeffs).value();
    lesser.values[k] = -im * fwd * sl;
    greater.values[k] = im * std::conj(fwd) * sg;
  }
  return GreensFunctionSet{lesser, greater, retarded(lesser, greater)};
}

}  // namespace

GreensFunctionSet os_greens(const QubitState& ground, double e0,
                            const LadderOperatorExpansion& left,
                            const LadderOperatorExpansion& right,
                            const OsPropagator& propagator, const TimeGrid& grid,
                            const BraketSampling& sampling, GreensAlgorithm tag) {
  grid.validate();
  const ExpansionPair pair = make_pair(left, right);
  std::mt19937_64 rng(sampling.seed);
  const std::complex<double> im(0, 1);

  std::vector<Eigen::MatrixXcd> brakets(grid.size());
  for (int k = 0; k < grid.size(); ++k) {
    Eigen::MatrixXcd b(pair.left_words.size(), pair.words.size());
    for (std::size_t j = 0; j < pair.words.size(); ++j) {
      const QubitState evolved = propagator.state(static_cast<int>(j), k);
      const std::complex<double> phase = std::exp(im * propagator.phase(static_cast<int>(j), k));
      for (std::size_t i = 0; i < pair.left_words.size(); ++i) {
        const std::complex<double> raw =
            inner(ground, apply_pauli(pair.left_words[i], evolved));
        b(i, j) = phase * sample_braket(raw, sampling.shots, rng);
      }
    }
    brakets[k] = std::move(b);
  }
  return assemble_components(left.label + "|" + right.label, tag, grid, brakets, pair, e0,
                             /*energy_phase=*/true, sampling.shots);
}

GreensFunctionSet cf_greens(const PauliSum& h, const QubitState& ground,
                            const LadderOperatorExpansion& left,
                            const LadderOperatorExpansion& right,
                            const VhaAnsatz& system_ansatz, const TimeGrid& grid,
                            const CfOptions& options) {
  grid.validate();
  if (system_ansatz.n_qubits != ground.n_qubits())
    throw std::invalid_argument("ansatz register size does not match ground state");
  const ExpansionPair pair = make_pair(left, right);

  // Extended problem: ancilla as the most significant qubit. The initial
  // state (|0>|psi> + |1>P_j|psi>)/sqrt(2) is exactly what the controlled
  // word preparation produces, and the extended Hamiltonian acts on the
  // system qubits only.
  const VhaAnsatz ext_ansatz = system_ansatz.extended_with_ancilla();
  PauliSum ext_h(h.n_qubits() + 1);
  for (const auto& t : h.terms()) {
    std::vector<Pauli> syms = t.string.symbols();
    syms.push_back(Pauli::I);
    ext_h.add(t.coefficient, PauliString(std::move(syms)));
  }

  const Eigen::Index dim = ground.amplitudes().size();
  EvolveOptions evolve_options = options.evolve;
  evolve_options.track_global_phase = false;

  std::vector<std::future<VqsTrajectory>> futures;
  futures.reserve(pair.words.size());
  for (const auto& w : pair.words) {
    const QubitState word_state = apply_pauli(w, ground);
    Eigen::VectorXcd ext(2 * dim);
    ext.head(dim) = ground.amplitudes() / std::sqrt(2.0);
    ext.tail(dim) = word_state.amplitudes() / std::sqrt(2.0);
    QubitState s0(ground.n_qubits() + 1, std::move(ext));
    futures.push_back(std::async(std::launch::async, [&, s0]() {
      return evolve(ext_ansatz, s0, ext_h, grid, evolve_options);
    }));
  }
  std::vector<VqsTrajectory> trajectories;
  trajectories.reserve(futures.size());
  for (auto& f : futures) trajectories.push_back(f.get());

  std::mt19937_64 rng(options.sampling.seed);
  std::vector<Eigen::MatrixXcd> brakets(grid.size());
  for (int k = 0; k < grid.size(); ++k) {
    Eigen::MatrixXcd b(pair.left_words.size(), pair.words.size());
    for (std::size_t j = 0; j < pair.words.size(); ++j) {
      const Eigen::VectorXd& theta = trajectories[j].theta_at(k);
      const QubitState u_psi = apply_evolution(system_ansatz, theta, ground);
      const QubitState u_word =
          apply_evolution(system_ansatz, theta, apply_pauli(pair.words[j], ground));
      for (std::size_t i = 0; i < pair.left_words.size(); ++i) {
        const std::complex<double> raw =
            inner(u_psi, apply_pauli(pair.left_words[i], u_word));
        b(i, j) = sample_braket(raw, options.sampling.shots, rng);
      }
    }
    brakets[k] = std::move(b);
  }
  return assemble_components(left.label + "|" + right.label, GreensAlgorithm::Cf, grid,
                             brakets, pair, 0.0, /*energy_phase=*/false,
                             options.sampling.shots);
}

}  // namespace gfsim
