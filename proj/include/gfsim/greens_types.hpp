#pragma once

#include <complex>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace gfsim {

/// Uniform time grid t_k = k * dt, k = 0..n_steps.
struct TimeGrid {
  double dt = 0.02;
  int n_steps = 0;

  static TimeGrid from_span(double t_max, double dt);

  int size() const { return n_steps + 1; }
  double time(int k) const { return k * dt; }
  double t_max() const { return n_steps * dt; }
  std::vector<double> times() const;
  void validate() const;
  bool same_as(const TimeGrid& other) const;
};

enum class GreensKind { Lesser, Greater, Retarded };
enum class GreensAlgorithm { Exact, Os, Cf, Trotter };

std::string to_string(GreensKind k);
std::string to_string(GreensAlgorithm a);

/// Complex-valued G(t) samples for one component of one kind.
struct GreensSeries {
  std::string label;
  GreensKind kind = GreensKind::Retarded;
  GreensAlgorithm algorithm = GreensAlgorithm::Exact;
  TimeGrid grid;
  std::vector<std::complex<double>> values;
  std::optional<long> shots;

  void validate() const;
};

/// The three components of one run share a grid and metadata.
struct GreensFunctionSet {
  GreensSeries lesser;
  GreensSeries greater;
  GreensSeries retarded;
};

/// G^R(t) = [G^<(t) - G^>(t)] theta(t) with theta(0) = 1. Grids and labels
/// must match.
GreensSeries retarded(const GreensSeries& lesser, const GreensSeries& greater);

/// Root-mean-square |a - b| over the grid. Throws on grid mismatch.
double rms_difference(const GreensSeries& a, const GreensSeries& b);
double max_abs_difference(const GreensSeries& a, const GreensSeries& b);

}  // namespace gfsim
