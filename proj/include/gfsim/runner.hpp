#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "gfsim/config.hpp"
#include "gfsim/greens.hpp"
#include "gfsim/spectral.hpp"

namespace gfsim {

inline constexpr const char* kVersion = "0.1.0";

/// Everything a pipeline run produces in memory.
struct RunResult {
  PauliSum hamiltonian{1};
  double e0_exact = 0.0;
  double e0_used = 0.0;
  GreensFunctionSet greens;
  std::vector<VqsTrajectory> trajectories;  // one per evolved word (os/vqs, cf)
  std::vector<std::string> trajectory_labels;
};

/// Runs the configured Green's-function pipeline (no files written).
RunResult run_pipeline(const ExperimentConfig& cfg);

/// Tasks map one-to-one onto CLI subcommands.
enum class RunTask { Hamiltonian, Evolve, Greens, Spectrum, Resources, Symmetry };

/// Executes a task and writes its artifact bundle (plus manifest.json)
/// under cfg.output_dir. Identical (config, seed) pairs produce
/// byte-identical bundles. Returns the list of files written.
std::vector<std::string> run_task(const ExperimentConfig& cfg, RunTask task);

struct CompareSeriesMetrics {
  std::string name;
  double max_abs = 0.0;
  double rms = 0.0;
};

struct CompareReport {
  std::vector<CompareSeriesMetrics> series;
  std::vector<double> pole_shifts;  // candidate - reference, matched in order
  bool compared_poles = false;
};

/// Deterministic error metrics between two bundles written by run_task.
CompareReport compare_bundles(const std::filesystem::path& reference,
                              const std::filesystem::path& candidate);

std::string compare_report_json(const CompareReport& report);

}  // namespace gfsim
