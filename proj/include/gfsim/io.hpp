#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "gfsim/greens_types.hpp"
#include "gfsim/spectral.hpp"
#include "gfsim/vqs.hpp"

namespace gfsim {

/// Fixed-format floating point (17 significant digits), so identical runs
/// produce byte-identical files.
std::string format_double(double v);

void write_text_file(const std::filesystem::path& path, const std::string& content);
std::string read_text_file(const std::filesystem::path& path);

/// CSV with header "t,re,im".
void write_greens_csv(const std::filesystem::path& path, const GreensSeries& g);
GreensSeries read_greens_csv(const std::filesystem::path& path);

/// CSV with header "omega,re,im".
void write_spectrum_csv(const std::filesystem::path& path, const Spectrum& s);
Spectrum read_spectrum_csv(const std::filesystem::path& path);

/// CSV with header "t,theta0,theta_1,...,theta_M".
void write_trajectory_csv(const std::filesystem::path& path, const VqsTrajectory& traj);

}  // namespace gfsim
