#include "gfsim/greens_types.hpp"

#include <cmath>

namespace gfsim {

TimeGrid TimeGrid::from_span(double t_max, double dt) {
  if (!(dt > 0) || !(t_max >= 0)) throw std::invalid_argument("invalid time span");
  TimeGrid g;
  g.dt = dt;
  g.n_steps = static_cast<int>(std::lround(t_max / dt));
  g.validate();
  return g;
}

std::vector<double> TimeGrid::times() const {
  std::vector<double> out(size());
  for (int k = 0; k < size(); ++k) out[k] = time(k);
  return out;
}

void TimeGrid::validate() const {
  if (!(dt > 0) || !std::isfinite(dt)) throw std::invalid_argument("time step must be positive");
  if (n_steps < 0) throw std::invalid_argument("negative step count");
}

bool TimeGrid::same_as(const TimeGrid& other) const {
  return n_steps == other.n_steps && std::abs(dt - other.dt) < 1e-12 * std::max(dt, other.dt);
}

std::string to_string(GreensKind k) {
  switch (k) {
    case GreensKind::Lesser: return "lesser";
    case GreensKind::Greater: return "greater";
    case GreensKind::Retarded: return "retarded";
  }
  return "?";
}

std::string to_string(GreensAlgorithm a) {
  switch (a) {
    case GreensAlgorithm::Exact: return "exact";
    case GreensAlgorithm::Os: return "os";
    case GreensAlgorithm::Cf: return "cf";
    case GreensAlgorithm::Trotter: return "trotter";
  }
  return "?";
}

void GreensSeries::validate() const {
  grid.validate();
  if (static_cast<int>(values.size()) != grid.size())
    throw std::invalid_argument("series length does not match grid");
}

GreensSeries retarded(const GreensSeries& lesser, const GreensSeries& greater) {
  if (!lesser.grid.same_as(greater.grid))
    throw std::invalid_argument("lesser/greater grid mismatch");
  if (lesser.label != greater.label)
    throw std::invalid_argument("lesser/greater component label mismatch");
  GreensSeries out = lesser;
  out.kind = GreensKind::Retarded;
  for (std::size_t k = 0; k < out.values.size(); ++k)
    out.values[k] = lesser.values[k] - greater.values[k];
  return out;
}

double rms_difference(const GreensSeries& a, const GreensSeries& b) {
  if (!a.grid.same_as(b.grid)) throw std::invalid_argument("grid mismatch");
  double acc = 0.0;
  for (std::size_t k = 0; k < a.values.size(); ++k)
    acc += std::norm(a.values[k] - b.values[k]);
  return std::sqrt(acc / static_cast<double>(a.values.size()));
}

double max_abs_difference(const GreensSeries& a, const GreensSeries& b) {
  if (!a.grid.same_as(b.grid)) throw std::invalid_argument("grid mismatch");
  double m = 0.0;
  for (std::size_t k = 0; k < a.values.size(); ++k)
    m = std::max(m, std::abs(a.values[k] - b.values[k]));
  return m;
}

}  // namespace gfsim
