#include "gfsim/runner.hpp"

#include <json.hpp>

#include <cmath>
#include <fstream>
#include <set>

#include "gfsim/dimer.hpp"
#include "gfsim/exact.hpp"
#include "gfsim/io.hpp"
#include "gfsim/resources.hpp"

namespace gfsim {

using nlohmann::json;

namespace {

struct Prepared {
  PauliSum h;
  SpectralDecomposition sd;
  QubitState ground;
  double e0 = 0.0;
  LadderOperatorExpansion left;
  LadderOperatorExpansion right;
};

Prepared prepare(const ExperimentConfig& cfg) {
  PauliSum h = qubit_hamiltonian(cfg.model);
  SpectralDecomposition sd(h);
  auto [e0, ground] = sd.ground_state();
  LadderOperatorExpansion left =
      momentum_operator(cfg.model, cfg.op.modes, LadderKind::Annihilation, cfg.op.normalized);
  LadderOperatorExpansion right =
      momentum_operator(cfg.model, cfg.op.modes, LadderKind::Creation, cfg.op.normalized);
  return Prepared{std::move(h), std::move(sd), std::move(ground), e0,
                  std::move(left), std::move(right)};
}

json config_json(const ExperimentConfig& cfg) {
  json j;
  j["n_sites"] = cfg.model.n_sites;
  j["tau"] = cfg.model.tau;
  j["u"] = cfg.model.u;
  j["boundary"] = cfg.model.boundary == Boundary::Open ? "open" : "periodic";
  j["operator"] = cfg.op.text;
  j["operator_normalized"] = cfg.op.normalized;
  j["algorithm"] = to_string(cfg.algorithm);
  j["propagator"] = to_string(cfg.propagator);
  j["depth"] = cfg.depth;
  j["dt"] = cfg.grid().dt;
  j["t_max"] = cfg.t_max;
  j["trotter_steps_per_unit_time"] = cfg.trotter_steps_per_unit_time;
  j["shots"] = cfg.shots;
  j["e0_source"] = to_string(cfg.e0_source);
  j["e0_value"] = cfg.e0_value;
  j["seed"] = cfg.seed;
  j["window"] = cfg.spectrum_window();
  j["damping"] = cfg.damping;
  j["pole_threshold_rel"] = cfg.pole_threshold_rel;
  return j;
}

void write_manifest(const ExperimentConfig& cfg, const std::vector<std::string>& files,
                    const RunResult* result) {
  json j;
  j["tool"] = "gfsim";
  j["version"] = kVersion;
  j["config"] = config_json(cfg);
  j["outputs"] = files;
  if (result) {
    j["e0_exact"] = result->e0_exact;
    j["e0_used"] = result->e0_used;
  }
  write_text_file(cfg.output_dir / "manifest.json", j.dump(2) + "\n");
}

}  // namespace

RunResult run_pipeline(const ExperimentConfig& cfg) {
  Prepared p = prepare(cfg);
  const TimeGrid grid = cfg.grid();
  RunResult out;
  out.hamiltonian = p.h;
  out.e0_exact = p.e0;
  out.e0_used = cfg.e0_source == E0Source::Exact ? p.e0 : cfg.e0_value;

  const BraketSampling sampling{cfg.shots, cfg.seed};
  switch (cfg.algorithm) {
    case RunAlgorithm::Exact:
      out.greens = exact_greens(p.sd, p.ground, out.e0_used, p.left, p.right, grid);
      break;
    case RunAlgorithm::Os: {
      switch (cfg.propagator) {
        case OsPropagatorKind::Vqs: {
          const VhaAnsatz ansatz = VhaAnsatz::from_hamiltonian(p.h, cfg.depth);
          VqsOsPropagator prop(p.h, p.ground, p.right.strings, ansatz, grid);
          out.greens = os_greens(p.ground, out.e0_used, p.left, p.right, prop, grid, sampling);
          for (std::size_t j = 0; j < p.right.strings.size(); ++j) {
            out.trajectories.push_back(prop.trajectory(static_cast<int>(j)));
            out.trajectory_labels.push_back(p.right.strings[j].str());
          }
          break;
        }
        case OsPropagatorKind::Symmetry: {
          SymmetryOsPropagator prop(cfg.model, p.ground, p.right.strings, grid);
          out.greens = os_greens(p.ground, out.e0_used, p.left, p.right, prop, grid, sampling);
          break;
        }
        case OsPropagatorKind::Exact: {
          ExactOsPropagator prop(p.sd, p.ground, p.right.strings, grid);
          out.greens = os_greens(p.ground, out.e0_used, p.left, p.right, prop, grid, sampling);
          break;
        }
      }
      break;
    }
    case RunAlgorithm::Cf: {
      const VhaAnsatz ansatz = VhaAnsatz::from_hamiltonian(p.h, cfg.depth);
      CfOptions options;
      options.sampling = sampling;
      out.greens = cf_greens(p.h, p.ground, p.left, p.right, ansatz, grid, options);
      break;
    }
    case RunAlgorithm::Trotter: {
      TrotterOsPropagator prop(p.h, p.ground, p.right.strings, grid,
                               cfg.trotter_steps_per_unit_time);
      out.greens = os_greens(p.ground, out.e0_used, p.left, p.right, prop, grid, sampling,
                             GreensAlgorithm::Trotter);
      break;
    }
  }
  return out;
}

std::vector<std::string> run_task(const ExperimentConfig& cfg, RunTask task) {
  std::filesystem::create_directories(cfg.output_dir);
  std::vector<std::string> files;
  auto note = [&files](const std::string& name) { files.push_back(name); };

  switch (task) {
    case RunTask::Hamiltonian: {
      const PauliSum h = qubit_hamiltonian(cfg.model);
      write_text_file(cfg.output_dir / "hamiltonian.txt", h.to_text());
      note("hamiltonian.txt");
      write_manifest(cfg, files, nullptr);
      return files;
    }
    case RunTask::Symmetry: {
      const PauliSum h = qubit_hamiltonian(cfg.model);
      const SymmetrySets sets = verify_symmetry_sets(h);
      SpectralDecomposition sd(h);
      auto [e0, ground] = sd.ground_state();
      const PropositionReport rep = check_propositions(ground, sets);
      const SignTable table = sign_table();
      json j;
      for (const auto& p : sets.s1) j["s1"].push_back(p.str());
      for (const auto& p : sets.s2) j["s2"].push_back(p.str());
      for (std::size_t r = 0; r < table.rows.size(); ++r) {
        json row;
        row["component"] = table.rows[r].str();
        for (std::size_t c = 0; c < table.columns.size(); ++c)
          row["signs"][table.columns[c].str()] = table.sign[r][c];
        j["sign_table"].push_back(row);
      }
      j["propositions"]["max_pair_product_residual"] = rep.max_pair_product_residual;
      j["propositions"]["max_pair_state_residual"] = rep.max_pair_state_residual;
      j["propositions"]["min_alpha"] = rep.min_alpha;
      j["propositions"]["passed"] = rep.passed;
      j["ground_energy"] = e0;
      write_text_file(cfg.output_dir / "symmetry_report.json", j.dump(2) + "\n");
      note("symmetry_report.json");
      write_manifest(cfg, files, nullptr);
      return files;
    }
    case RunTask::Resources: {
      const PauliSum h = qubit_hamiltonian(cfg.model);
      json j;
      for (const auto& row : benchmark_resource_table()) {
        json r;
        r["model"] = row.model;
        r["algorithm"] = row.algorithm;
        if (row.depth > 0) r["depth"] = row.depth;
        r["one_qubit"] = row.one_qubit;
        r["two_qubit"] = row.two_qubit;
        r["ansatz_depth"] = row.ansatz_depth;
        j["benchmark_table"].push_back(r);
      }
      const GateCountReport os = os_count(h, cfg.depth);
      const GateCountReport cf = cf_count(h, cfg.depth);
      j["model"]["average_weight"] = average_weight(h, false);
      j["model"]["advantage_threshold"] = advantage_threshold(h);
      j["model"]["os"] = {{"depth", os.depth},
                          {"one_qubit", os.one_qubit},
                          {"two_qubit", os.two_qubit},
                          {"ansatz_depth", os.ansatz_depth}};
      j["model"]["cf"] = {{"depth", cf.depth},
                          {"one_qubit", cf.one_qubit},
                          {"two_qubit", cf.two_qubit},
                          {"ansatz_depth", cf.ansatz_depth}};
      write_text_file(cfg.output_dir / "resources.json", j.dump(2) + "\n");
      note("resources.json");
      write_manifest(cfg, files, nullptr);
      return files;
    }
    case RunTask::Evolve:
    case RunTask::Greens:
    case RunTask::Spectrum:
      break;
  }

  RunResult result = run_pipeline(cfg);
  write_text_file(cfg.output_dir / "hamiltonian.txt", result.hamiltonian.to_text());
  note("hamiltonian.txt");
  for (std::size_t j = 0; j < result.trajectories.size(); ++j) {
    const std::string name = "trajectory_" + result.trajectory_labels[j] + ".csv";
    write_trajectory_csv(cfg.output_dir / name, result.trajectories[j]);
    note(name);
  }
  if (task == RunTask::Greens || task == RunTask::Spectrum) {
    write_greens_csv(cfg.output_dir / "greens_lesser.csv", result.greens.lesser);
    write_greens_csv(cfg.output_dir / "greens_greater.csv", result.greens.greater);
    write_greens_csv(cfg.output_dir / "greens_retarded.csv", result.greens.retarded);
    note("greens_lesser.csv");
    note("greens_greater.csv");
    note("greens_retarded.csv");
  }
  if (task == RunTask::Spectrum) {
    const Spectrum s = transform(result.greens.retarded, cfg.spectrum_window(), cfg.damping);
    write_spectrum_csv(cfg.output_dir / "spectrum.csv", s);
    note("spectrum.csv");
    double peak = 0.0;
    for (const auto& v : s.values) peak = std::max(peak, std::abs(v.imag()));
    const auto poles = find_poles(s, cfg.pole_threshold_rel * peak);
    json jp = json::array();
    for (const auto& pole : poles)
      jp.push_back({{"frequency", pole.frequency}, {"height", pole.height}});
    write_text_file(cfg.output_dir / "poles.json", jp.dump(2) + "\n");
    note("poles.json");
  }
  write_manifest(cfg, files, &result);
  return files;
}

CompareReport compare_bundles(const std::filesystem::path& reference,
                              const std::filesystem::path& candidate) {
  CompareReport report;
  for (const char* name : {"greens_lesser.csv", "greens_greater.csv", "greens_retarded.csv"}) {
    const auto ref_path = reference / name;
    const auto cand_path = candidate / name;
    if (!std::filesystem::exists(ref_path) || !std::filesystem::exists(cand_path)) continue;
    const GreensSeries a = read_greens_csv(ref_path);
    const GreensSeries b = read_greens_csv(cand_path);
    if (!a.grid.same_as(b.grid))
      throw std::invalid_argument(std::string(name) + ": time grids differ");
    report.series.push_back(
        CompareSeriesMetrics{name, max_abs_difference(a, b), rms_difference(a, b)});
  }
  if (report.series.empty())
    throw std::invalid_argument("no overlapping Green's-function files to compare");

  const auto ref_poles = reference / "poles.json";
  const auto cand_poles = candidate / "poles.json";
  if (std::filesystem::exists(ref_poles) && std::filesystem::exists(cand_poles)) {
    const json a = json::parse(read_text_file(ref_poles));
    const json b = json::parse(read_text_file(cand_poles));
    const std::size_t n = std::min(a.size(), b.size());
    for (std::size_t k = 0; k < n; ++k)
      report.pole_shifts.push_back(b[k]["frequency"].get<double>() -
                                   a[k]["frequency"].get<double>());
    report.compared_poles = true;
  }
  return report;
}

std::string compare_report_json(const CompareReport& report) {
  json j;
  for (const auto& s : report.series)
    j["series"].push_back({{"name", s.name}, {"max_abs", s.max_abs}, {"rms", s.rms}});
  if (report.compared_poles) j["pole_shifts"] = report.pole_shifts;
  return j.dump(2) + "\n";
}

}  // namespace gfsim
