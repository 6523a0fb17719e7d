#include "stirap/diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "stirap/analytics.hpp"
#include "stirap/linalg.hpp"

namespace stirap {

namespace {

double alpha_of(const SystemConfig& cfg) {
  // alpha does not depend on time; any t gives the same value.
  return mixing_angles_at(cfg, 0.0).alpha;
}

double theta_dot_with(const SystemConfig& cfg, double alpha, double t) {
  const PulseEnvelope pump = pump_envelope(cfg);
  const PulseEnvelope stokes = stokes_envelope(cfg);
  const double op = pump.value(t);
  const double os = stokes.value(t);
  const double den = os * os + alpha * alpha * op * op;
  if (!(den > 0.0)) {
    throw NumericalError("theta_dot: both pulse envelopes vanish at t = " + std::to_string(t) +
                         "; mixing angle undefined");
  }
  return alpha * (pump.derivative(t) * os - op * stokes.derivative(t)) / den;
}

}  // namespace

double theta_dot(const SystemConfig& cfg, double t) {
  return theta_dot_with(cfg, alpha_of(cfg), t);
}

SpectrumSeries eigen_spectrum(const SystemConfig& cfg, const TimeGrid& grid) {
  cfg.validate();
  grid.validate();
  double alpha = std::numeric_limits<double>::quiet_NaN();
  try {
    alpha = alpha_of(cfg);
  } catch (const DomainError&) {
  }

  SpectrumSeries s;
  const std::size_t n = grid.size();
  s.times.reserve(n);
  s.eigenvalues.reserve(n);
  s.theta_dot.reserve(n);
  for (std::size_t k = 0; k < n; ++k) {
    const double t = grid.time_at(k);
    s.times.push_back(t);
    s.eigenvalues.push_back(jacobi_eigen(build_hamiltonian(cfg, t)).eigenvalues);
    s.theta_dot.push_back(std::isnan(alpha) ? alpha : theta_dot_with(cfg, alpha, t));
  }
  return s;
}

double nonzero_gap(const RealVector& eigenvalues) {
  Eigen::Index null_index = 0;
  for (Eigen::Index k = 1; k < eigenvalues.size(); ++k) {
    if (std::abs(eigenvalues(k)) < std::abs(eigenvalues(null_index))) null_index = k;
  }
  double gap = std::numeric_limits<double>::infinity();
  for (Eigen::Index k = 0; k < eigenvalues.size(); ++k) {
    if (k != null_index) gap = std::min(gap, std::abs(eigenvalues(k)));
  }
  return gap;
}

AdiabaticityReport adiabaticity_report(const SpectrumSeries& series) {
  AdiabaticityReport r;
  const std::size_t n = series.times.size();
  if (n == 0) return r;

  for (double td : series.theta_dot) r.max_theta_dot = std::max(r.max_theta_dot, std::abs(td));

  const double half = 0.5 * r.max_theta_dot;
  r.min_gap = std::numeric_limits<double>::infinity();
  r.min_pointwise_ratio = std::numeric_limits<double>::infinity();
  bool any = false;
  for (std::size_t k = 0; k < n; ++k) {
    const double td = std::abs(series.theta_dot[k]);
    if (r.max_theta_dot > 0.0 && td < half) continue;
    if (!any) r.window_start = series.times[k];
    r.window_end = series.times[k];
    any = true;
    const double gap = nonzero_gap(series.eigenvalues[k]);
    r.min_gap = std::min(r.min_gap, gap);
    if (td > 0.0) r.min_pointwise_ratio = std::min(r.min_pointwise_ratio, gap / td);
  }
  r.margin = r.max_theta_dot > 0.0 ? r.min_gap / r.max_theta_dot
                                   : std::numeric_limits<double>::infinity();
  return r;
}

std::vector<double> darkstate_fidelity(const Trajectory& traj, const SystemConfig& cfg) {
  const NullCondition nc = null_condition(cfg);
  if (!nc.holds) {
    throw PreconditionError("darkstate_fidelity: null-eigenvalue condition violated, residual " +
                                std::to_string(nc.residual),
                            nc.residual);
  }
  std::vector<double> out;
  out.reserve(traj.states.size());
  for (std::size_t k = 0; k < traj.states.size(); ++k) {
    const DarkState d = dark_state_at(cfg, traj.grid.time_at(k), nc.branch);
    const complex overlap = d.amplitudes.cast<complex>().dot(traj.states[k]);
    out.push_back(std::norm(overlap));
  }
  return out;
}

}  // namespace stirap
