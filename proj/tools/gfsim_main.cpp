#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "gfsim/io.hpp"
#include "gfsim/runner.hpp"

namespace {

std::map<std::string, std::string> parse_overrides(const std::vector<std::string>& sets) {
  std::map<std::string, std::string> out;
  for (const auto& kv : sets) {
    const auto eq = kv.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("--set expects key=value, got '" + kv + "'");
    out[kv.substr(0, eq)] = kv.substr(eq + 1);
  }
  return out;
}

gfsim::ExperimentConfig load_config(const std::string& config_path,
                                    const std::vector<std::string>& sets,
                                    const std::string& out_dir) {
  auto overrides = parse_overrides(sets);
  if (!out_dir.empty()) overrides["output"] = out_dir;
  gfsim::ExperimentConfig cfg =
      config_path.empty() ? gfsim::ExperimentConfig::from_entries(overrides)
                          : gfsim::ExperimentConfig::from_file(config_path, overrides);
  if (cfg.output_dir.is_relative()) {
    if (const char* root = std::getenv("GFSIM_OUTPUT_ROOT"); root && *root)
      cfg.output_dir = std::filesystem::path(root) / cfg.output_dir;
  }
  return cfg;
}

int run_and_report(const gfsim::ExperimentConfig& cfg, gfsim::RunTask task) {
  const auto files = gfsim::run_task(cfg, task);
  std::cout << "wrote " << files.size() + 1 << " files to " << cfg.output_dir.string() << ":\n";
  for (const auto& f : files) std::cout << "  " << f << '\n';
  std::cout << "  manifest.json\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Real-time Green's functions for small Hubbard chains: exact, "
               "variational (one-state and control-free) and Trotter pipelines"};
  app.require_subcommand(1);

  std::string config_path;
  std::vector<std::string> sets;
  std::string out_dir;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--config", config_path, "experiment config file (key = value lines)");
    sub->add_option("--set", sets, "override a config key, e.g. --set depth=2")
        ->take_all();
    sub->add_option("--out", out_dir, "output directory (overrides config)");
  };

  auto* hamiltonian = app.add_subcommand("hamiltonian", "write the qubit Hamiltonian");
  auto* evolve = app.add_subcommand("evolve", "run variational trajectories");
  auto* greens = app.add_subcommand("greens", "compute Green's functions");
  auto* spectrum = app.add_subcommand("spectrum", "Green's functions plus Fourier analysis");
  auto* resources = app.add_subcommand("resources", "gate-count report");
  auto* symmetry = app.add_subcommand("symmetry", "2-site symmetry report");
  for (auto* sub : {hamiltonian, evolve, greens, spectrum, resources, symmetry})
    add_common(sub);

  auto* compare = app.add_subcommand("compare", "error metrics between two bundles");
  std::string ref_dir, cand_dir;
  compare->add_option("reference", ref_dir, "reference bundle directory")->required();
  compare->add_option("candidate", cand_dir, "candidate bundle directory")->required();
  std::string compare_out;
  compare->add_option("--out", compare_out, "write metrics JSON here (default: stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (compare->parsed()) {
      const auto report = gfsim::compare_bundles(ref_dir, cand_dir);
      const std::string text = gfsim::compare_report_json(report);
      if (compare_out.empty()) {
        std::cout << text;
      } else {
        gfsim::write_text_file(compare_out, text);
        std::cout << "wrote " << compare_out << '\n';
      }
      return 0;
    }
    const gfsim::ExperimentConfig cfg = load_config(config_path, sets, out_dir);
    if (hamiltonian->parsed()) return run_and_report(cfg, gfsim::RunTask::Hamiltonian);
    if (evolve->parsed()) return run_and_report(cfg, gfsim::RunTask::Evolve);
    if (greens->parsed()) return run_and_report(cfg, gfsim::RunTask::Greens);
    if (spectrum->parsed()) return run_and_report(cfg, gfsim::RunTask::Spectrum);
    if (resources->parsed()) return run_and_report(cfg, gfsim::RunTask::Resources);
    if (symmetry->parsed()) return run_and_report(cfg, gfsim::RunTask::Symmetry);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 1;
}
