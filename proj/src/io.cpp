#include "gfsim/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace gfsim {

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

void write_text_file(const std::filesystem::path& path, const std::string& content) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
  out << content;
  if (!out) throw std::runtime_error("write failed for " + path.string());
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

namespace {

std::vector<std::vector<double>> read_csv_rows(const std::filesystem::path& path,
                                               std::size_t columns,
                                               std::string* header = nullptr) {
  std::istringstream in(read_text_file(path));
  std::string line;
  if (!std::getline(in, line)) throw std::runtime_error(path.string() + ": empty file");
  if (header) *header = line;
  std::vector<std::vector<double>> rows;
  std::size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    std::vector<double> row;
    std::stringstream fields(line);
    std::string field;
    while (std::getline(fields, field, ',')) row.push_back(std::stod(field));
    if (row.size() != columns)
      throw std::runtime_error(path.string() + ": line " + std::to_string(lineno) +
                               " has " + std::to_string(row.size()) + " fields, expected " +
                               std::to_string(columns));
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

void write_greens_csv(const std::filesystem::path& path, const GreensSeries& g) {
  g.validate();
  std::ostringstream out;
  out << "t,re,im\n";
  for (int k = 0; k < g.grid.size(); ++k)
    out << format_double(g.grid.time(k)) << ',' << format_double(g.values[k].real()) << ','
        << format_double(g.values[k].imag()) << '\n';
  write_text_file(path, out.str());
}

GreensSeries read_greens_csv(const std::filesystem::path& path) {
  const auto rows = read_csv_rows(path, 3);
  if (rows.size() < 2) throw std::runtime_error(path.string() + ": too few samples");
  GreensSeries g;
  g.grid.dt = rows[1][0] - rows[0][0];
  g.grid.n_steps = static_cast<int>(rows.size()) - 1;
  for (std::size_t k = 0; k < rows.size(); ++k) {
    if (std::abs(rows[k][0] - g.grid.time(static_cast<int>(k))) > 1e-9)
      throw std::runtime_error(path.string() + ": non-uniform time grid");
    g.values.emplace_back(rows[k][1], rows[k][2]);
  }
  return g;
}

void write_spectrum_csv(const std::filesystem::path& path, const Spectrum& s) {
  std::ostringstream out;
  out << "omega,re,im\n";
  for (std::size_t k = 0; k < s.frequencies.size(); ++k)
    out << format_double(s.frequencies[k]) << ',' << format_double(s.values[k].real())
        << ',' << format_double(s.values[k].imag()) << '\n';
  write_text_file(path, out.str());
}

Spectrum read_spectrum_csv(const std::filesystem::path& path) {
  const auto rows = read_csv_rows(path, 3);
  Spectrum s;
  for (const auto& r : rows) {
    s.frequencies.push_back(r[0]);
    s.values.emplace_back(r[1], r[2]);
  }
  if (s.frequencies.size() >= 2)
    s.window = 2.0 * 3.14159265358979323846 / (s.frequencies[1] - s.frequencies[0]);
  return s;
}

void write_trajectory_csv(const std::filesystem::path& path, const VqsTrajectory& traj) {
  std::ostringstream out;
  out << "t,theta0";
  const Eigen::Index m = traj.theta.empty() ? 0 : traj.theta.front().size();
  for (Eigen::Index k = 0; k < m; ++k) out << ",theta_" << (k + 1);
  out << '\n';
  for (int k = 0; k < traj.grid.size(); ++k) {
    out << format_double(traj.grid.time(k)) << ',' << format_double(traj.theta0_at(k));
    for (Eigen::Index j = 0; j < m; ++j) out << ',' << format_double(traj.theta_at(k)[j]);
    out << '\n';
  }
  write_text_file(path, out.str());
}

}  // namespace gfsim
