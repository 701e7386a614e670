#include "gfsim/config.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "gfsim/io.hpp"

namespace gfsim {

std::string to_string(RunAlgorithm a) {
  switch (a) {
    case RunAlgorithm::Exact: return "exact";
    case RunAlgorithm::Os: return "os";
    case RunAlgorithm::Cf: return "cf";
    case RunAlgorithm::Trotter: return "trotter";
  }
  return "?";
}

std::string to_string(OsPropagatorKind p) {
  switch (p) {
    case OsPropagatorKind::Vqs: return "vqs";
    case OsPropagatorKind::Symmetry: return "symmetry";
    case OsPropagatorKind::Exact: return "exact";
  }
  return "?";
}

std::string to_string(E0Source s) {
  return s == E0Source::Exact ? "exact" : "value";
}

namespace {

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  auto e = s.find_last_not_of(" \t\r");
  return b == std::string::npos ? "" : s.substr(b, e - b + 1);
}

}  // namespace

std::vector<ModeCombination> OperatorSpec::parse_modes(const std::string& text) {
  // Grammar: term (('+'|'-') term)*, term = <site digits>("up"|"dn").
  std::vector<ModeCombination> out;
  std::size_t pos = 0;
  double sign = 1.0;
  const std::string t = trim(text);
  if (t.empty()) throw std::invalid_argument("empty operator spec");
  while (pos < t.size()) {
    if (t[pos] == '+') { sign = 1.0; ++pos; continue; }
    if (t[pos] == '-') { sign = -1.0; ++pos; continue; }
    std::size_t d = pos;
    while (d < t.size() && std::isdigit(static_cast<unsigned char>(t[d]))) ++d;
    if (d == pos) throw std::invalid_argument("operator spec: expected site number at '" +
                                              t.substr(pos) + "'");
    const int site = std::stoi(t.substr(pos, d - pos));
    Spin spin;
    if (t.compare(d, 2, "up") == 0) spin = Spin::Up;
    else if (t.compare(d, 2, "dn") == 0) spin = Spin::Down;
    else throw std::invalid_argument("operator spec: expected 'up' or 'dn' after site at '" +
                                     t.substr(pos) + "'");
    out.push_back(ModeCombination{{sign, 0.0}, site, spin});
    pos = d + 2;
    sign = 1.0;
  }
  return out;
}

TimeGrid ExperimentConfig::grid() const {
  if (n_steps) {
    TimeGrid g;
    g.n_steps = *n_steps;
    g.dt = t_max / *n_steps;
    g.validate();
    return g;
  }
  return TimeGrid::from_span(t_max, dt);
}

ExperimentConfig ExperimentConfig::from_file(const std::filesystem::path& path,
                                             const std::map<std::string, std::string>& overrides) {
  std::map<std::string, std::string> entries;
  std::istringstream in(read_text_file(path));
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument(path.string() + ":" + std::to_string(lineno) +
                                  ": expected key = value");
    entries[trim(line.substr(0, eq))] = trim(line.substr(eq + 1));
  }
  for (const auto& [k, v] : overrides) entries[k] = v;
  return from_entries(entries);
}

ExperimentConfig ExperimentConfig::from_entries(const std::map<std::string, std::string>& entries) {
  ExperimentConfig cfg;
  std::vector<std::string> errors;
  auto fail = [&errors](const std::string& msg) { errors.push_back(msg); };

  auto parse_double = [&](const std::string& key, const std::string& v, double& out) {
    try {
      std::size_t pos = 0;
      out = std::stod(v, &pos);
      if (pos != v.size()) throw std::invalid_argument("");
    } catch (...) {
      fail(key + ": cannot parse '" + v + "' as a number");
    }
  };
  auto parse_int = [&](const std::string& key, const std::string& v, auto& out) {
    try {
      std::size_t pos = 0;
      out = static_cast<std::remove_reference_t<decltype(out)>>(std::stoll(v, &pos));
      if (pos != v.size()) throw std::invalid_argument("");
    } catch (...) {
      fail(key + ": cannot parse '" + v + "' as an integer");
    }
  };
  auto parse_bool = [&](const std::string& key, const std::string& v, bool& out) {
    if (v == "true" || v == "1") out = true;
    else if (v == "false" || v == "0") out = false;
    else fail(key + ": expected true/false, got '" + v + "'");
  };

  static const std::vector<std::string> known = {
      "n_sites", "tau", "u", "boundary", "operator", "operator_normalized",
      "algorithm", "propagator", "depth", "dt", "t_max", "n_steps",
      "trotter_steps_per_unit_time", "shots", "e0_source", "e0_value", "seed",
      "window", "damping", "pole_threshold_rel", "output"};

  for (const auto& [key, value] : entries) {
    if (std::find(known.begin(), known.end(), key) == known.end()) {
      fail("unknown config key '" + key + "'");
      continue;
    }
    if (key == "n_sites") parse_int(key, value, cfg.model.n_sites);
    else if (key == "tau") parse_double(key, value, cfg.model.tau);
    else if (key == "u") parse_double(key, value, cfg.model.u);
    else if (key == "boundary") {
      if (value == "open") cfg.model.boundary = Boundary::Open;
      else if (value == "periodic") cfg.model.boundary = Boundary::Periodic;
      else fail("boundary: expected open|periodic, got '" + value + "'");
    } else if (key == "operator") {
      cfg.op.text = value;
    } else if (key == "operator_normalized") parse_bool(key, value, cfg.op.normalized);
    else if (key == "algorithm") {
      if (value == "exact") cfg.algorithm = RunAlgorithm::Exact;
      else if (value == "os") cfg.algorithm = RunAlgorithm::Os;
      else if (value == "cf") cfg.algorithm = RunAlgorithm::Cf;
      else if (value == "trotter") cfg.algorithm = RunAlgorithm::Trotter;
      else fail("algorithm: expected exact|os|cf|trotter, got '" + value + "'");
    } else if (key == "propagator") {
      if (value == "vqs") cfg.propagator = OsPropagatorKind::Vqs;
      else if (value == "symmetry") cfg.propagator = OsPropagatorKind::Symmetry;
      else if (value == "exact") cfg.propagator = OsPropagatorKind::Exact;
      else fail("propagator: expected vqs|symmetry|exact, got '" + value + "'");
    } else if (key == "depth") parse_int(key, value, cfg.depth);
    else if (key == "dt") parse_double(key, value, cfg.dt);
    else if (key == "t_max") parse_double(key, value, cfg.t_max);
    else if (key == "n_steps") {
      int n = 0;
      parse_int(key, value, n);
      cfg.n_steps = n;
    } else if (key == "trotter_steps_per_unit_time")
      parse_int(key, value, cfg.trotter_steps_per_unit_time);
    else if (key == "shots") parse_int(key, value, cfg.shots);
    else if (key == "e0_source") {
      if (value == "exact") cfg.e0_source = E0Source::Exact;
      else if (value == "value") cfg.e0_source = E0Source::Value;
      else fail("e0_source: expected exact|value, got '" + value + "'");
    } else if (key == "e0_value") parse_double(key, value, cfg.e0_value);
    else if (key == "seed") parse_int(key, value, cfg.seed);
    else if (key == "window") parse_double(key, value, cfg.window);
    else if (key == "damping") parse_double(key, value, cfg.damping);
    else if (key == "pole_threshold_rel") parse_double(key, value, cfg.pole_threshold_rel);
    else if (key == "output") cfg.output_dir = value;
  }

  try {
    cfg.model.validate();
  } catch (const std::exception& e) {
    fail(e.what());
  }
  try {
    cfg.op.modes = OperatorSpec::parse_modes(cfg.op.text);
    for (const auto& m : cfg.op.modes)
      if (m.site < 1 || m.site > cfg.model.n_sites)
        fail("operator: site " + std::to_string(m.site) + " out of range");
  } catch (const std::exception& e) {
    fail(e.what());
  }
  if (cfg.depth < 1) fail("depth must be >= 1");
  if (!(cfg.dt > 0)) fail("dt must be positive");
  if (!(cfg.t_max > 0)) fail("t_max must be positive");
  if (cfg.n_steps && *cfg.n_steps < 1) fail("n_steps must be >= 1");
  if (cfg.shots < 0) fail("shots must be non-negative");
  if (cfg.trotter_steps_per_unit_time < 1) fail("trotter_steps_per_unit_time must be >= 1");
  if (cfg.damping < 0) fail("damping must be non-negative");
  if (cfg.propagator == OsPropagatorKind::Symmetry && cfg.model.n_sites != 2)
    fail("the symmetry propagator exists only for the 2-site model");
  if (cfg.e0_source == E0Source::Value && !std::isfinite(cfg.e0_value))
    fail("e0_value must be finite when e0_source = value");

  if (!errors.empty()) {
    std::string joined = "invalid configuration:";
    for (const auto& e : errors) joined += "\n  - " + e;
    throw std::invalid_argument(joined);
  }
  return cfg;
}

std::string ExperimentConfig::to_key_values() const {
  std::ostringstream out;
  out << "n_sites = " << model.n_sites << '\n';
  out << "tau = " << format_double(model.tau) << '\n';
  out << "u = " << format_double(model.u) << '\n';
  out << "boundary = " << (model.boundary == Boundary::Open ? "open" : "periodic") << '\n';
  out << "operator = " << op.text << '\n';
  out << "operator_normalized = " << (op.normalized ? "true" : "false") << '\n';
  out << "algorithm = " << to_string(algorithm) << '\n';
  out << "propagator = " << to_string(propagator) << '\n';
  out << "depth = " << depth << '\n';
  out << "dt = " << format_double(dt) << '\n';
  out << "t_max = " << format_double(t_max) << '\n';
  if (n_steps) out << "n_steps = " << *n_steps << '\n';
  out << "trotter_steps_per_unit_time = " << trotter_steps_per_unit_time << '\n';
  out << "shots = " << shots << '\n';
  out << "e0_source = " << to_string(e0_source) << '\n';
  out << "e0_value = " << format_double(e0_value) << '\n';
  out << "seed = " << seed << '\n';
  out << "window = " << format_double(window) << '\n';
  out << "damping = " << format_double(damping) << '\n';
  out << "pole_threshold_rel = " << format_double(pole_threshold_rel) << '\n';
  out << "output = " << output_dir.string() << '\n';
  return out.str();
}

}  // namespace gfsim
