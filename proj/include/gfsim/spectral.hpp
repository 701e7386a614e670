#pragma once

#include <complex>
#include <vector>

#include "gfsim/greens_types.hpp"

namespace gfsim {

/// Discrete Fourier transform of a time series over a window T = N dt,
/// on the frequency grid omega_k = k * 2 pi / T for
/// k = -floor(N/2) .. N-1-floor(N/2). With eta = 0 and this grid the
/// transform is unitary up to the usual 2 pi measure (Parseval holds).
struct Spectrum {
  std::vector<double> frequencies;
  std::vector<std::complex<double>> values;
  double window = 0.0;
  double damping = 0.0;

  double resolution() const;  // 2 pi / window
};

/// S(omega) = dt * sum_n g(t_n) e^{-eta t_n} e^{+i omega t_n} over the
/// first N = round(T / dt) samples (t = T is the periodic image of t = 0
/// and is excluded). The series must cover [0, T) on a uniform grid.
Spectrum transform(const GreensSeries& g, double window, double damping = 0.0);

/// Spectrum of G(t) = e^{i (e0_tilde - e0) t} g(t), obtained by reading
/// the input at omega + (e0_tilde - e0): a translation of the graph by
/// e0 - e0_tilde, linearly interpolated back onto the original grid.
/// Frequencies shifted outside the window are zero-filled. Throws when
/// the shift magnitude exceeds the grid span.
Spectrum energy_shift(const Spectrum& s, double e0, double e0_tilde);

struct Pole {
  double frequency = 0.0;
  double height = 0.0;
};

/// Local maxima of |Im S(omega)| above the threshold, refined by
/// three-point parabolic interpolation. An empty result is valid.
std::vector<Pole> find_poles(const Spectrum& s, double threshold);

/// sum |g|^2 dt, for Parseval checks.
double time_domain_power(const GreensSeries& g, double window);
/// sum |S|^2 d omega / (2 pi).
double frequency_domain_power(const Spectrum& s);

}  // namespace gfsim
