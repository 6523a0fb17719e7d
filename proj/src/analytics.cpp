#include "stirap/analytics.hpp"

#include <Eigen/LU>
#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "stirap/error.hpp"
#include "stirap/linalg.hpp"

namespace stirap {

namespace {

// Roots of x^2 - b x - c = 0 (c >= 0) without cancellation; returns (larger, smaller).
std::pair<double, double> stable_roots(double b, double c) {
  const double disc = std::sqrt(b * b + 4.0 * c);
  const double q = 0.5 * (b + std::copysign(disc, b));
  if (q == 0.0) return {0.0, 0.0};
  const double r1 = q;
  const double r2 = -c / q;
  return {std::max(r1, r2), std::min(r1, r2)};
}

}  // namespace

std::pair<double, double> null_detuning_pair(double delta_3, double omega_c) {
  return stable_roots(delta_3, omega_c * omega_c);
}

double control_detuning_for(double delta, double omega_c) {
  if (delta == 0.0) {
    throw DomainError("control_detuning_for: delta = 0 is a null root only when omega_c = 0", delta);
  }
  return delta - omega_c * omega_c / delta;
}

double null_condition_residual(double delta, double delta_3, double omega_c) {
  const double oc2 = omega_c * omega_c;
  const double scale = std::max(delta * delta, oc2);
  const double r = delta * delta - delta * delta_3 - oc2;
  return scale == 0.0 ? r : r / scale;
}

std::optional<Branch> null_branch(double delta, double delta_3, double omega_c) {
  if (std::abs(null_condition_residual(delta, delta_3, omega_c)) > kConditionTol) return std::nullopt;
  const auto [plus, minus] = null_detuning_pair(delta_3, omega_c);
  return std::abs(delta - plus) <= std::abs(delta - minus) ? Branch::plus : Branch::minus;
}

MixingAngles mixing_angles(double omega_p, double omega_s, double delta, double delta_3,
                           double omega_c) {
  double ratio = 0.0;
  if (delta != 0.0) {
    if (delta == delta_3) {
      throw DomainError("mixing_angles: alpha radicand is infinite (delta = delta_3 != 0)",
                        std::numeric_limits<double>::infinity());
    }
    ratio = delta / (delta - delta_3);
  }
  const double radicand = 1.0 + ratio;
  if (radicand < 0.0) {
    throw DomainError("mixing_angles: negative alpha radicand " + std::to_string(radicand),
                      radicand);
  }
  MixingAngles a;
  a.alpha = std::sqrt(radicand);
  a.theta = std::atan2(a.alpha * omega_p, omega_s);
  a.phi = std::atan2(omega_c, std::abs(delta - delta_3));
  return a;
}

DarkState dark_state_4(const MixingAngles& angles, Branch branch) {
  const double st = std::sin(angles.theta);
  DarkState d;
  d.branch = branch;
  d.angles = angles;
  d.amplitudes.resize(4);
  d.amplitudes << std::cos(angles.theta), 0.0, -st * std::cos(angles.phi),
      -branch_sign(branch) * st * std::sin(angles.phi);
  return d;
}

std::array<double, 2> target_superposition(double phi, Branch branch) {
  return {std::cos(phi), branch_sign(branch) * std::sin(phi)};
}

double population_ratio(double phi) {
  const double s = std::sin(phi);
  if (s == 0.0) return std::numeric_limits<double>::infinity();
  const double cot = std::cos(phi) / s;
  return cot * cot;
}

DarkState dark_state_5(double omega_p, double omega_s, double omega_c, double omega_d,
                       double delta, Branch branch) {
  const double manifold2 = omega_c * omega_c + omega_d * omega_d;
  const double scale = std::max(delta * delta, manifold2);
  const double residual = delta * delta - manifold2;
  if (scale == 0.0 || std::abs(residual) > kConditionTol * scale) {
    throw PreconditionError(
        "dark_state_5: needs delta^2 = omega_c^2 + omega_d^2, residual " + std::to_string(residual),
        residual);
  }
  if (omega_p < 0.0 || (omega_p == 0.0 && omega_s == 0.0)) {
    throw PreconditionError("dark_state_5: needs omega_p >= 0 and not both pulses zero", omega_p);
  }
  const double abs_delta = std::abs(delta);
  // |delta| rather than signed delta: with signed delta the manifold part
  // flips sign for delta < 0 and the state is no longer a null vector.
  const double angle = std::atan2(omega_s * omega_c, std::numbers::sqrt2 * abs_delta * omega_p);
  const double norm = std::sqrt(delta * delta + manifold2);
  const double c = std::cos(angle);

  DarkState d;
  d.branch = branch;
  d.amplitudes.resize(5);
  d.amplitudes << std::sin(angle), 0.0, -c * omega_c / norm,
      -c * branch_sign(branch) * abs_delta / norm, -c * omega_d / norm;
  d.angles.theta = std::numbers::pi / 2 - angle;
  d.angles.phi = std::atan2(abs_delta, omega_c);
  d.angles.alpha = omega_c > 0.0 ? norm / omega_c : std::numeric_limits<double>::infinity();
  return d;
}

std::pair<double, double> control_detuning_for_5(double delta, double omega_c, double omega_d) {
  if (delta == 0.0) {
    throw DomainError("control_detuning_for_5: delta must be nonzero", delta);
  }
  // With x = -(delta - delta_3) the manifold block determinant vanishes when
  // delta x^2 + omega_c^2 x - omega_d^2 delta = 0.
  const double oc2 = omega_c * omega_c;
  const double od2 = omega_d * omega_d;
  const double q = -0.5 * (oc2 + std::sqrt(oc2 * oc2 + 4.0 * delta * delta * od2));
  double x1 = 0.0;
  double x2 = 0.0;
  if (q != 0.0) {
    x1 = q / delta;
    x2 = -od2 * delta / q;
  }
  const double d1 = delta + x1;
  const double d2 = delta + x2;
  return {std::min(d1, d2), std::max(d1, d2)};
}

std::optional<RealVector> numeric_null_eigenvector(const RealMatrix& h, double tol) {
  const SymmetricEigen eig = jacobi_eigen(h);
  Eigen::Index best = 0;
  for (Eigen::Index k = 1; k < eig.eigenvalues.size(); ++k) {
    if (std::abs(eig.eigenvalues(k)) < std::abs(eig.eigenvalues(best))) best = k;
  }
  if (std::abs(eig.eigenvalues(best)) > tol * spectral_scale(h)) return std::nullopt;
  RealVector v = eig.eigenvectors.col(best);
  v.normalize();
  fix_sign(v);
  return v;
}

DesignedDetunings inverse_design(double target_ratio, Branch branch, double omega_c) {
  if (!(target_ratio > 0.0) || !std::isfinite(target_ratio)) {
    throw DomainError("inverse_design: target ratio must be positive and finite", target_ratio);
  }
  if (!(omega_c > 0.0)) throw DomainError("inverse_design: omega_c must be positive", omega_c);
  DesignedDetunings d;
  d.delta = branch_sign(branch) * omega_c / std::sqrt(target_ratio);
  d.delta_3 = control_detuning_for(d.delta, omega_c);
  return d;
}

namespace {

double manifold_norm_5(const SystemConfig& cfg) {
  const double delta = cfg.two_photon_detuning();
  return std::sqrt(cfg.omega_c * cfg.omega_c + delta * delta + cfg.omega_d * cfg.omega_d);
}

}  // namespace

MixingAngles mixing_angles_at(const SystemConfig& cfg, double t) {
  const double op = pump_envelope(cfg).value(t);
  const double os = stokes_envelope(cfg).value(t);
  const double delta = cfg.two_photon_detuning();
  if (cfg.n_levels == 4) return mixing_angles(op, os, delta, cfg.delta_3, cfg.omega_c);

  if (!(cfg.omega_c > 0.0)) {
    throw DomainError("mixing_angles_at: 5-level angles need omega_c > 0", cfg.omega_c);
  }
  MixingAngles a;
  a.alpha = manifold_norm_5(cfg) / cfg.omega_c;
  a.theta = std::atan2(a.alpha * op, os);
  a.phi = std::atan2(std::abs(delta), cfg.omega_c);
  return a;
}

NullCondition null_condition(const SystemConfig& cfg) {
  NullCondition nc;
  const double delta = cfg.two_photon_detuning();
  if (cfg.n_levels == 4) {
    nc.residual = null_condition_residual(delta, cfg.delta_3, cfg.omega_c);
    const auto b = null_branch(delta, cfg.delta_3, cfg.omega_c);
    nc.holds = b.has_value();
    nc.branch = b.value_or(delta >= 0.0 ? Branch::plus : Branch::minus);
    return nc;
  }
  // Manifold block determinant, made dimensionless by its largest entry.
  const RealMatrix block = asymptotic_hamiltonian(cfg).bottomRightCorner(3, 3);
  const double s = block.cwiseAbs().maxCoeff();
  const double det = block.determinant();
  nc.residual = s == 0.0 ? det : det / (s * s * s);
  nc.holds = std::abs(nc.residual) <= kConditionTol;
  nc.branch = delta >= 0.0 ? Branch::plus : Branch::minus;
  return nc;
}

DarkState dark_state_at(const SystemConfig& cfg, double t, Branch branch) {
  const NullCondition nc = null_condition(cfg);
  if (!nc.holds) {
    throw PreconditionError("dark state undefined: null-eigenvalue condition violated, residual " +
                                std::to_string(nc.residual),
                            nc.residual);
  }
  if (nc.branch != branch) {
    throw PreconditionError("dark state undefined: detuning is a root of the other branch",
                            nc.residual);
  }
  if (cfg.n_levels == 4) return dark_state_4(mixing_angles_at(cfg, t), branch);

  if (cfg.delta_3 != 0.0 || cfg.delta_4 != 0.0) {
    throw PreconditionError("analytic 5-level dark state needs resonant controls (delta_3 = delta_4 = 0)",
                            nc.residual);
  }
  return dark_state_5(pump_envelope(cfg).value(t), stokes_envelope(cfg).value(t), cfg.omega_c,
                      cfg.omega_d, cfg.two_photon_detuning(), branch);
}

}  // namespace stirap
