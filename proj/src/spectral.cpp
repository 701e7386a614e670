#include "gfsim/spectral.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace gfsim {

double Spectrum::resolution() const {
  if (!(window > 0)) throw std::runtime_error("spectrum has no window");
  return 2.0 * std::numbers::pi / window;
}

namespace {

int sample_count(const GreensSeries& g, double window) {
  g.validate();
  if (!(window > 0)) throw std::invalid_argument("window must be positive");
  const int n = static_cast<int>(std::lround(window / g.grid.dt));
  if (n < 2) throw std::invalid_argument("window shorter than two samples");
  if (n > g.grid.size())
    throw std::invalid_argument("series does not cover the requested window");
  return n;
}

}  // namespace

Spectrum transform(const GreensSeries& g, double window, double damping) {
  if (damping < 0) throw std::invalid_argument("damping must be non-negative");
  const int n = sample_count(g, window);
  const double dt = g.grid.dt;
  const double t_window = n * dt;
  const double dw = 2.0 * std::numbers::pi / t_window;

  Spectrum s;
  s.window = t_window;
  s.damping = damping;
  s.frequencies.resize(n);
  s.values.resize(n);
  const int k0 = -(n / 2);
  for (int k = 0; k < n; ++k) {
    const double omega = (k0 + k) * dw;
    std::complex<double> acc(0, 0);
    for (int j = 0; j < n; ++j) {
      const double t = g.grid.time(j);
      acc += g.values[j] * std::exp(-damping * t) *
             std::exp(std::complex<double>(0, omega * t));
    }
    s.frequencies[k] = omega;
    s.values[k] = dt * acc;
  }
  return s;
}

Spectrum energy_shift(const Spectrum& s, double e0, double e0_tilde) {
  if (s.frequencies.size() < 2) throw std::invalid_argument("spectrum too short to shift");
  const double shift = e0_tilde - e0;  // read the input at omega + shift
  const double span = s.frequencies.back() - s.frequencies.front();
  if (std::abs(shift) >= span)
    throw std::invalid_argument("energy shift exceeds the frequency span");

  const double dw = s.frequencies[1] - s.frequencies[0];
  Spectrum out = s;
  for (std::size_t k = 0; k < s.frequencies.size(); ++k) {
    const double target = s.frequencies[k] + shift;
    const double pos = (target - s.frequencies.front()) / dw;
    const auto lo = static_cast<long>(std::floor(pos));
    if (lo < 0 || lo + 1 >= static_cast<long>(s.frequencies.size())) {
      out.values[k] = 0.0;
      continue;
    }
    const double frac = pos - static_cast<double>(lo);
    out.values[k] = (1.0 - frac) * s.values[lo] + frac * s.values[lo + 1];
  }
  return out;
}

std::vector<Pole> find_poles(const Spectrum& s, double threshold) {
  std::vector<Pole> poles;
  const std::size_t n = s.values.size();
  if (n < 3) return poles;
  const double dw = s.frequencies[1] - s.frequencies[0];
  for (std::size_t k = 1; k + 1 < n; ++k) {
    const double ym = std::abs(s.values[k - 1].imag());
    const double y0 = std::abs(s.values[k].imag());
    const double yp = std::abs(s.values[k + 1].imag());
    if (y0 <= threshold || y0 < ym || y0 <= yp) continue;
    // Parabola through the three points; vertex offset in units of dw.
    const double denom = ym - 2.0 * y0 + yp;
    const double delta = (std::abs(denom) > 1e-300) ? 0.5 * (ym - yp) / denom : 0.0;
    const double freq = s.frequencies[k] + std::clamp(delta, -0.5, 0.5) * dw;
    const double height = y0 - 0.25 * (ym - yp) * std::clamp(delta, -0.5, 0.5);
    poles.push_back(Pole{freq, height});
  }
  return poles;
}

double time_domain_power(const GreensSeries& g, double window) {
  const int n = sample_count(g, window);
  double acc = 0.0;
  for (int j = 0; j < n; ++j) acc += std::norm(g.values[j]);
  return acc * g.grid.dt;
}

double frequency_domain_power(const Spectrum& s) {
  if (s.frequencies.size() < 2) throw std::invalid_argument("spectrum too short");
  const double dw = s.frequencies[1] - s.frequencies[0];
  double acc = 0.0;
  for (const auto& v : s.values) acc += std::norm(v);
  return acc * dw / (2.0 * std::numbers::pi);
}

}  // namespace gfsim
