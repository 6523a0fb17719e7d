#pragma once

#include <span>

#include "stirap/types.hpp"

namespace stirap {

/// One simulation scenario. Frequencies are in units of 1/T0, times in T0,
/// with hbar = 1. Only detunings are stored; bare level energies and carrier
/// frequencies never enter the rotating-frame Hamiltonian on their own.
struct SystemConfig {
  int n_levels = 4;
  double omega_p_peak = 4.0;  // pump, couples 1-2
  double omega_s_peak = 4.0;  // Stokes, couples 2-3
  double omega_c = 0.0;       // control, couples 3-4
  double omega_d = 0.0;       // second control, couples 4-5 (5-level only)
  double pulse_width = 5.0;   // Gaussian width T
  double half_delay = 2.5;    // pump peaks at +tau, Stokes at -tau
  double delta_1 = 0.0;
  double delta_2 = 0.0;
  double delta_3 = 0.0;
  double delta_4 = 0.0;  // detuning of omega_d; not part of the original 4-level model

  /// Two-photon detuning delta_1 - delta_2.
  double two_photon_detuning() const { return delta_1 - delta_2; }

  /// Throws ConfigError naming the first offending field.
  void validate() const;
};

enum class PulseKind { gaussian, constant };

struct PulseEnvelope {
  PulseKind kind = PulseKind::gaussian;
  double peak = 0.0;
  double center = 0.0;
  double width = 1.0;

  static PulseEnvelope gaussian(double peak, double center, double width) {
    return {PulseKind::gaussian, peak, center, width};
  }
  static PulseEnvelope constant(double peak) { return {PulseKind::constant, peak, 0.0, 1.0}; }

  double value(double t) const;
  double derivative(double t) const;
};

double envelope_value(const PulseEnvelope& env, double t);

PulseEnvelope pump_envelope(const SystemConfig& cfg);
PulseEnvelope stokes_envelope(const SystemConfig& cfg);

/// Real symmetric nearest-neighbour chain: `couplings[k]` links levels k and k+1.
RealMatrix chain_hamiltonian(std::span<const double> couplings, std::span<const double> diagonal);

/// Diagonal (0, -D1, -D, -(D-D3)[, -(D-D3-D4)]) with D = delta_1 - delta_2.
RealVector level_energies(const SystemConfig& cfg);

RealMatrix build_hamiltonian_4(const SystemConfig& cfg, double t);
RealMatrix build_hamiltonian_5(const SystemConfig& cfg, double t);

/// Dispatches on cfg.n_levels.
RealMatrix build_hamiltonian(const SystemConfig& cfg, double t);

/// Hamiltonian with both pulses switched off (the t -> +-infinity limit).
RealMatrix asymptotic_hamiltonian(const SystemConfig& cfg);

}  // namespace stirap
