#pragma once

#include <vector>

#include "stirap/model.hpp"
#include "stirap/propagator.hpp"

namespace stirap {

/// Instantaneous spectrum of H(t) and the mixing-angle rate along a grid.
struct SpectrumSeries {
  std::vector<double> times;
  std::vector<RealVector> eigenvalues;  // ascending at each time
  std::vector<double> theta_dot;        // rad / T0
};

/// Analytic d(theta)/dt of tan(theta) = alpha * Omega_p(t) / Omega_s(t).
/// Throws NumericalError when both envelopes vanish (angle undefined).
double theta_dot(const SystemConfig& cfg, double t);

/// Jacobi eigenvalues of H(t) at every grid point plus theta_dot.
/// theta_dot is NaN when alpha is undefined for the configuration.
SpectrumSeries eigen_spectrum(const SystemConfig& cfg, const TimeGrid& grid);

/// Compares the smallest gap between the null eigenvalue and the rest of the
/// spectrum against the rotation rate of the dark state. Both are taken over
/// the rotation window: the samples where |theta_dot| is at least half its
/// maximum (the full width at half maximum of the rotation-rate peak).
/// Outside that window theta_dot and the gap both decay to zero as the
/// pulses switch off, and their ratio carries no information.
struct AdiabaticityReport {
  double min_gap = 0.0;        // min over the window of the smallest |nonzero eigenvalue|
  double max_theta_dot = 0.0;  // max over the series of |theta_dot|
  double margin = 0.0;         // min_gap / max_theta_dot (+inf when theta_dot == 0)
  double window_start = 0.0;
  double window_end = 0.0;
  double min_pointwise_ratio = 0.0;  // min over the window of gap(t) / |theta_dot(t)|
};

AdiabaticityReport adiabaticity_report(const SpectrumSeries& series);

/// Smallest |eigenvalue| after dropping the one nearest zero.
double nonzero_gap(const RealVector& eigenvalues);

/// |<psi_0(t)|C(t)>|^2 per grid point, dark-state branch picked from the
/// detuning. Throws PreconditionError when the configuration has no analytic dark state.
std::vector<double> darkstate_fidelity(const Trajectory& traj, const SystemConfig& cfg);

}  // namespace stirap
