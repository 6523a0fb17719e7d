#include "stirap/csv.hpp"

#include <array>
#include <charconv>

namespace stirap {

std::string format_double(double v) {
  std::array<char, 32> buf{};
  auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v,
                                 std::chars_format::general, 17);
  return std::string(buf.data(), ptr);
}

void write_trajectory_csv(std::ostream& os, const Trajectory& traj) {
  const Eigen::Index n = traj.states.empty() ? 0 : traj.states.front().size();
  os << 't';
  for (Eigen::Index i = 1; i <= n; ++i) os << ",re_c" << i << ",im_c" << i;
  for (Eigen::Index i = 1; i <= n; ++i) os << ",p" << i;
  os << '\n';

  std::string row;
  for (std::size_t k = 0; k < traj.states.size(); ++k) {
    const StateVector& c = traj.states[k];
    row = format_double(traj.grid.time_at(k));
    for (Eigen::Index i = 0; i < n; ++i) {
      row += ',';
      row += format_double(c(i).real());
      row += ',';
      row += format_double(c(i).imag());
    }
    for (Eigen::Index i = 0; i < n; ++i) {
      row += ',';
      row += format_double(std::norm(c(i)));
    }
    row += '\n';
    os << row;
  }
}

void write_spectrum_csv(std::ostream& os, const SpectrumSeries& series) {
  const Eigen::Index n = series.eigenvalues.empty() ? 0 : series.eigenvalues.front().size();
  os << 't';
  for (Eigen::Index i = 1; i <= n; ++i) os << ",lambda" << i;
  os << ",theta_dot\n";
  for (std::size_t k = 0; k < series.times.size(); ++k) {
    os << format_double(series.times[k]);
    for (Eigen::Index i = 0; i < n; ++i) os << ',' << format_double(series.eigenvalues[k](i));
    os << ',' << format_double(series.theta_dot[k]) << '\n';
  }
}

}  // namespace stirap
