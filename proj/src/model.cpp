#include "stirap/model.hpp"

#include <array>
#include <cmath>
#include <string>

#include "stirap/error.hpp"

namespace stirap {

namespace {

void require(bool ok, const char* field, const std::string& why) {
  if (!ok) throw ConfigError(std::string(field) + ": " + why);
}

bool finite(double x) { return std::isfinite(x); }

}  // namespace

void SystemConfig::validate() const {
  require(n_levels == 4 || n_levels == 5, "n_levels", "must be 4 or 5");
  require(finite(omega_p_peak) && omega_p_peak > 0.0, "omega_p_peak", "must be > 0");
  require(finite(omega_s_peak) && omega_s_peak > 0.0, "omega_s_peak", "must be > 0");
  require(finite(pulse_width) && pulse_width > 0.0, "pulse_width", "must be > 0");
  require(finite(half_delay) && half_delay >= 0.0, "half_delay",
          "must be >= 0 (Stokes precedes pump)");
  require(finite(omega_c) && omega_c >= 0.0, "omega_c", "must be >= 0");
  require(finite(omega_d) && omega_d >= 0.0, "omega_d", "must be >= 0");
  require(finite(delta_1), "delta_1", "must be finite");
  require(finite(delta_2), "delta_2", "must be finite");
  require(finite(delta_3), "delta_3", "must be finite");
  require(finite(delta_4), "delta_4", "must be finite");
}

double PulseEnvelope::value(double t) const {
  if (kind == PulseKind::constant) return peak;
  const double x = (t - center) / width;
  return peak * std::exp(-x * x);
}

double PulseEnvelope::derivative(double t) const {
  if (kind == PulseKind::constant) return 0.0;
  const double x = (t - center) / width;
  return -2.0 * x / width * peak * std::exp(-x * x);
}

double envelope_value(const PulseEnvelope& env, double t) { return env.value(t); }

PulseEnvelope pump_envelope(const SystemConfig& cfg) {
  return PulseEnvelope::gaussian(cfg.omega_p_peak, cfg.half_delay, cfg.pulse_width);
}

PulseEnvelope stokes_envelope(const SystemConfig& cfg) {
  return PulseEnvelope::gaussian(cfg.omega_s_peak, -cfg.half_delay, cfg.pulse_width);
}

RealMatrix chain_hamiltonian(std::span<const double> couplings,
                             std::span<const double> diagonal) {
  const auto n = static_cast<Eigen::Index>(diagonal.size());
  if (n < 1 || n > kMaxLevels || couplings.size() + 1 != diagonal.size()) {
    throw ContractViolation("chain_hamiltonian: need N diagonal entries and N-1 couplings, N <= 5");
  }
  RealMatrix h = RealMatrix::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) h(i, i) = diagonal[static_cast<std::size_t>(i)];
  for (Eigen::Index i = 0; i + 1 < n; ++i) {
    const double g = couplings[static_cast<std::size_t>(i)];
    h(i, i + 1) = g;
    h(i + 1, i) = g;
  }
  return h;
}

RealVector level_energies(const SystemConfig& cfg) {
  const double delta = cfg.two_photon_detuning();
  RealVector d(cfg.n_levels);
  d(0) = 0.0;
  d(1) = -cfg.delta_1;
  d(2) = -delta;
  d(3) = -(delta - cfg.delta_3);
  if (cfg.n_levels == 5) d(4) = -(delta - cfg.delta_3 - cfg.delta_4);
  return d;
}

namespace {

RealMatrix build_chain(const SystemConfig& cfg, double omega_p, double omega_s) {
  const RealVector d = level_energies(cfg);
  std::array<double, kMaxLevels - 1> g{omega_p, omega_s, cfg.omega_c, cfg.omega_d};
  const auto n = static_cast<std::size_t>(cfg.n_levels);
  return chain_hamiltonian(std::span<const double>(g.data(), n - 1),
                           std::span<const double>(d.data(), n));
}

}  // namespace

RealMatrix build_hamiltonian_4(const SystemConfig& cfg, double t) {
  if (cfg.n_levels != 4) throw ConfigError("n_levels: build_hamiltonian_4 needs n_levels = 4");
  return build_chain(cfg, pump_envelope(cfg).value(t), stokes_envelope(cfg).value(t));
}

RealMatrix build_hamiltonian_5(const SystemConfig& cfg, double t) {
  if (cfg.n_levels != 5) throw ConfigError("n_levels: build_hamiltonian_5 needs n_levels = 5");
  return build_chain(cfg, pump_envelope(cfg).value(t), stokes_envelope(cfg).value(t));
}

RealMatrix build_hamiltonian(const SystemConfig& cfg, double t) {
  return cfg.n_levels == 5 ? build_hamiltonian_5(cfg, t) : build_hamiltonian_4(cfg, t);
}

RealMatrix asymptotic_hamiltonian(const SystemConfig& cfg) {
  if (cfg.n_levels != 4 && cfg.n_levels != 5) throw ConfigError("n_levels: must be 4 or 5");
  return build_chain(cfg, 0.0, 0.0);
}

}  // namespace stirap
