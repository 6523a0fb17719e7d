#pragma once

#include <array>
#include <optional>
#include <utility>

#include "stirap/model.hpp"
#include "stirap/types.hpp"

namespace stirap {

/// Mixing angles of the dark state. theta rotates the state from |1> into the
/// manifold; phi fixes the manifold composition; alpha is the constant factor
/// multiplying the pump/Stokes ratio inside tan(theta).
struct MixingAngles {
  double theta = 0.0;
  double phi = 0.0;
  double alpha = 1.0;
};

struct DarkState {
  RealVector amplitudes;  // unit norm, component 2 exactly zero
  Branch branch = Branch::plus;
  MixingAngles angles;
};

/// Relative tolerance for the null-eigenvalue condition checks.
inline constexpr double kConditionTol = 1e-9;

/// Two-photon detunings (D+, D-) at which the 4-level Hamiltonian has a zero
/// eigenvalue: roots of D^2 - D*D3 - Oc^2 = 0, D+ >= D-.
std::pair<double, double> null_detuning_pair(double delta_3, double omega_c);

/// Control detuning D3 = (D^2 - Oc^2) / D making `delta` a null root.
/// Throws DomainError for delta = 0.
double control_detuning_for(double delta, double omega_c);

/// Residual D^2 - D*D3 - Oc^2, scaled by max(D^2, Oc^2). Zero when the
/// 4-level null condition holds.
double null_condition_residual(double delta, double delta_3, double omega_c);

/// Branch (plus/minus root) that `delta` belongs to, if it is a root within kConditionTol.
std::optional<Branch> null_branch(double delta, double delta_3, double omega_c);

MixingAngles mixing_angles(double omega_p, double omega_s, double delta, double delta_3,
                           double omega_c);

DarkState dark_state_4(const MixingAngles& angles, Branch branch);

/// Manifold amplitudes (on |3>, |4>) the plus/minus dark state ends in.
std::array<double, 2> target_superposition(double phi, Branch branch);

/// Final P3/P4 = cot^2(phi). Returns +infinity when sin(phi) = 0.
double population_ratio(double phi);

/// Dark state of the threefold-manifold chain with resonant controls. Requires
/// delta^2 = Oc^2 + Od^2 (relative tolerance kConditionTol); throws
/// PreconditionError carrying delta^2 - Oc^2 - Od^2 otherwise.
DarkState dark_state_5(double omega_p, double omega_s, double omega_c, double omega_d,
                       double delta, Branch branch);

/// Control detunings D3 (with D4 = 0) that give the 5-level chain a null
/// eigenvalue for the given two-photon detuning. Both roots, ascending.
std::pair<double, double> control_detuning_for_5(double delta, double omega_c, double omega_d);

/// Smallest |eigenvalue| eigenvector of a symmetric matrix if that eigenvalue
/// is within tol * ||H||. Sign fixed so the first nonzero component is positive.
std::optional<RealVector> numeric_null_eigenvector(const RealMatrix& h, double tol);

struct DesignedDetunings {
  double delta = 0.0;
  double delta_3 = 0.0;
};

/// Detunings producing a final P3/P4 equal to `target_ratio` on the requested branch.
DesignedDetunings inverse_design(double target_ratio, Branch branch, double omega_c);

/// Mixing angles of `cfg` at time t (4- or 5-level).
MixingAngles mixing_angles_at(const SystemConfig& cfg, double t);

/// Analytic dark state of `cfg` at time t. Throws PreconditionError when the
/// configuration does not admit one on the requested branch.
DarkState dark_state_at(const SystemConfig& cfg, double t, Branch branch);

/// Whether the configured detunings support an analytic dark state, and on
/// which branch. Residual is the relative violation of the null condition.
struct NullCondition {
  bool holds = false;
  Branch branch = Branch::plus;
  double residual = 0.0;
};

NullCondition null_condition(const SystemConfig& cfg);

}  // namespace stirap
