#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gfsim/greens_types.hpp"
#include "gfsim/hubbard.hpp"

namespace gfsim {

enum class RunAlgorithm { Exact, Os, Cf, Trotter };
enum class OsPropagatorKind { Vqs, Symmetry, Exact };
enum class E0Source { Exact, Value };

/// Diagonal operator component written as a signed mode combination, e.g.
/// "1up" or "1up-2up".
struct OperatorSpec {
  std::vector<ModeCombination> modes;
  bool normalized = true;
  std::string text = "1up";

  static std::vector<ModeCombination> parse_modes(const std::string& text);
};

/// Flat key-value experiment description. All values are validated before
/// any computation; validation collects every problem and reports them
/// together.
struct ExperimentConfig {
  HubbardModel model{2, 1.0, 3.0, Boundary::Open};
  OperatorSpec op;
  RunAlgorithm algorithm = RunAlgorithm::Exact;
  OsPropagatorKind propagator = OsPropagatorKind::Vqs;
  int depth = 1;
  double dt = 0.02;
  double t_max = 12.566370614359172;  // 4 pi
  std::optional<int> n_steps;         // alternative to dt: dt = t_max / n_steps
  int trotter_steps_per_unit_time = 100;
  long shots = 0;
  E0Source e0_source = E0Source::Exact;
  double e0_value = 0.0;
  std::uint64_t seed = 1;
  double window = 0.0;                // 0 = 2 * t_max
  double damping = 0.0;
  double pole_threshold_rel = 0.05;
  std::filesystem::path output_dir = "out";

  TimeGrid grid() const;
  double spectrum_window() const { return window > 0 ? window : 2.0 * t_max; }

  /// Parses "key = value" lines ('#' starts a comment). Overrides are
  /// applied on top before validation.
  static ExperimentConfig from_file(const std::filesystem::path& path,
                                    const std::map<std::string, std::string>& overrides = {});
  static ExperimentConfig from_entries(const std::map<std::string, std::string>& entries);

  /// Key-value echo of every field, usable as a config file.
  std::string to_key_values() const;
};

std::string to_string(RunAlgorithm a);
std::string to_string(OsPropagatorKind p);
std::string to_string(E0Source s);

}  // namespace gfsim
