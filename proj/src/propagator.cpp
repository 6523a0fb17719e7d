#include "stirap/propagator.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace stirap {

std::size_t TimeGrid::steps() const {
  return static_cast<std::size_t>(std::llround((t_end - t_start) / dt));
}

double TimeGrid::time_at(std::size_t k) const {
  // Multiply rather than accumulate so the last point lands on t_end.
  return k == steps() ? t_end : t_start + static_cast<double>(k) * dt;
}

void TimeGrid::validate() const {
  if (!std::isfinite(t_start) || !std::isfinite(t_end) || !(t_start < t_end)) {
    throw ConfigError("grid: t_start must be < t_end");
  }
  if (!std::isfinite(dt) || !(dt > 0.0)) throw ConfigError("grid.dt: must be > 0");
  const double count = (t_end - t_start) / dt;
  if (std::abs(count - std::round(count)) > 1e-6 * std::max(1.0, count)) {
    throw ConfigError("grid.dt: (t_end - t_start) / dt must be an integer");
  }
  if (std::round(count) < 10.0) throw ConfigError("grid.dt: grid needs at least 10 steps");
}

TimeGrid TimeGrid::around_pulses(const SystemConfig& cfg, double dt) {
  return {-5.0 * cfg.pulse_width, 5.0 * cfg.pulse_width, dt};
}

StateVector ground_state(int n_levels) {
  StateVector c = StateVector::Zero(n_levels);
  c(0) = 1.0;
  return c;
}

namespace {

StateVector rhs(const RealMatrix& h, const StateVector& c) {
  // -i H (a + i b) = H b - i H a for real symmetric H.
  const RealVector re = c.real();
  const RealVector im = c.imag();
  StateVector out(c.size());
  out.real() = h * im;
  out.imag() = -(h * re);
  return out;
}

template <typename Observer>
StateVector integrate(const HamiltonianFn& hamiltonian, double t0, double h, std::size_t steps,
                      StateVector c, Observer&& observe) {
  for (std::size_t k = 0; k < steps; ++k) {
    const double t = t0 + static_cast<double>(k) * h;
    const RealMatrix h0 = hamiltonian(t);
    const RealMatrix hm = hamiltonian(t + 0.5 * h);
    const RealMatrix h1 = hamiltonian(t + h);
    const StateVector k1 = rhs(h0, c);
    const StateVector k2 = rhs(hm, c + (0.5 * h) * k1);
    const StateVector k3 = rhs(hm, c + (0.5 * h) * k2);
    const StateVector k4 = rhs(h1, c + h * k3);
    c += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);

    const double drift = std::abs(c.squaredNorm() - 1.0);
    if (!(drift <= kMaxNormDrift)) {
      throw NumericalError("propagate: norm drift " + std::to_string(drift) + " at t = " +
                           std::to_string(t + h) + " exceeds 1e-6; use a smaller dt");
    }
    observe(c, drift);
  }
  return c;
}

void check_initial(const StateVector& initial) {
  if (std::abs(initial.squaredNorm() - 1.0) > 1e-10) {
    throw PreconditionError("propagate: initial state must have unit norm",
                            initial.squaredNorm() - 1.0);
  }
}

}  // namespace

Trajectory propagate(const HamiltonianFn& hamiltonian, const TimeGrid& grid,
                     const StateVector& initial) {
  grid.validate();
  check_initial(initial);
  Trajectory traj;
  traj.grid = grid;
  traj.states.reserve(grid.size());
  traj.states.push_back(initial);
  traj.max_norm_drift = std::abs(initial.squaredNorm() - 1.0);
  integrate(hamiltonian, grid.t_start, grid.dt, grid.steps(), initial,
            [&](const StateVector& c, double drift) {
              traj.states.push_back(c);
              traj.max_norm_drift = std::max(traj.max_norm_drift, drift);
            });
  return traj;
}

Trajectory propagate(const SystemConfig& cfg, const TimeGrid& grid, const StateVector& initial) {
  cfg.validate();
  if (initial.size() != cfg.n_levels) {
    throw ContractViolation("propagate: initial state size does not match n_levels");
  }
  return propagate([&cfg](double t) { return build_hamiltonian(cfg, t); }, grid, initial);
}

Trajectory propagate(const SystemConfig& cfg, const TimeGrid& grid) {
  return propagate(cfg, grid, ground_state(cfg.n_levels));
}

StateVector propagate_backward(const SystemConfig& cfg, const TimeGrid& grid,
                               const StateVector& final_state) {
  cfg.validate();
  grid.validate();
  check_initial(final_state);
  return integrate([&cfg](double t) { return build_hamiltonian(cfg, t); }, grid.t_end, -grid.dt,
                   grid.steps(), final_state, [](const StateVector&, double) {});
}

std::vector<RealVector> populations(const Trajectory& traj) {
  std::vector<RealVector> out;
  out.reserve(traj.states.size());
  for (const auto& c : traj.states) out.push_back(c.cwiseAbs2());
  return out;
}

double wrap_phase(double angle) {
  double a = std::remainder(angle, 2.0 * std::numbers::pi);
  if (a <= -std::numbers::pi) a += 2.0 * std::numbers::pi;
  return a;
}

FinalSuperposition final_superposition(const Trajectory& traj) {
  const StateVector& c = traj.final_state();
  const double residual = std::norm(c(0)) + std::norm(c(1));
  if (!(residual < kMaxResidualForReadout)) {
    throw TransferIncomplete("final_superposition: P1 + P2 = " + std::to_string(residual) +
                                 " left outside the manifold (adiabaticity breakdown?)",
                             residual);
  }
  const Eigen::Index m = c.size() - 2;
  FinalSuperposition fs;
  fs.magnitudes.resize(m);
  fs.relative_phases.resize(m);
  for (Eigen::Index i = 0; i < m; ++i) {
    fs.magnitudes(i) = std::abs(c(i + 2));
    fs.relative_phases(i) = i == 0 ? 0.0 : wrap_phase(std::arg(c(i + 2)) - std::arg(c(2)));
  }
  return fs;
}

}  // namespace stirap
