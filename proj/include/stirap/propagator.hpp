#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "stirap/error.hpp"
#include "stirap/model.hpp"
#include "stirap/types.hpp"

namespace stirap {

/// Uniform grid t_start, t_start + dt, ..., t_end.
struct TimeGrid {
  double t_start = -25.0;
  double t_end = 25.0;
  double dt = 1e-3;

  /// Number of steps; validate() guarantees it is an integer >= 10.
  std::size_t steps() const;
  std::size_t size() const { return steps() + 1; }
  double time_at(std::size_t k) const;

  void validate() const;

  /// [-5T, 5T] around the pulse pair at the default step.
  static TimeGrid around_pulses(const SystemConfig& cfg, double dt = 1e-3);
};

struct Trajectory {
  TimeGrid grid;
  std::vector<StateVector> states;  // states[k] at grid.time_at(k)
  double max_norm_drift = 0.0;      // max_k | ||C_k||^2 - 1 |

  const StateVector& final_state() const { return states.back(); }
};

using HamiltonianFn = std::function<RealMatrix(double)>;

/// Norm drift above this aborts integration.
inline constexpr double kMaxNormDrift = 1e-6;

/// |1>, the initial condition of every built-in scenario.
StateVector ground_state(int n_levels);

/// Classical fixed-step RK4 for dC/dt = -i H(t) C. No renormalisation; throws
/// NumericalError once the norm drifts by more than kMaxNormDrift.
Trajectory propagate(const HamiltonianFn& hamiltonian, const TimeGrid& grid,
                     const StateVector& initial);
Trajectory propagate(const SystemConfig& cfg, const TimeGrid& grid, const StateVector& initial);
Trajectory propagate(const SystemConfig& cfg, const TimeGrid& grid);

/// Integrates `final_state` from grid.t_end back to grid.t_start.
StateVector propagate_backward(const SystemConfig& cfg, const TimeGrid& grid,
                               const StateVector& final_state);

/// |C_i|^2 per grid point.
std::vector<RealVector> populations(const Trajectory& traj);

/// Final amplitudes on the manifold levels 3..N.
struct FinalSuperposition {
  RealVector magnitudes;       // |C_i(t_end)|, i = 3..N
  RealVector relative_phases;  // arg(C_i / C_3) in (-pi, pi]; first entry 0
};

/// Raised when the population left in levels 1 and 2 shows transfer failed.
class TransferIncomplete : public NumericalError {
 public:
  TransferIncomplete(const std::string& what, double residual)
      : NumericalError(what), residual_(residual) {}
  double residual() const noexcept { return residual_; }

 private:
  double residual_;
};

/// Threshold on final P1 + P2 for final_superposition.
inline constexpr double kMaxResidualForReadout = 0.05;

FinalSuperposition final_superposition(const Trajectory& traj);

/// Wraps an angle into (-pi, pi].
double wrap_phase(double angle);

}  // namespace stirap
