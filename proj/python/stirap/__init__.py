"""STIRAP into twofold and threefold level manifolds."""

from ._stirap import (
    ConfigError,
    DomainError,
    Error,
    NumericalError,
    PreconditionError,
    SystemConfig,
    TimeGrid,
    Trajectory,
    adiabaticity_margin,
    build_hamiltonian,
    consistency_warnings,
    control_detuning_for,
    control_detuning_for_5,
    dark_state,
    eigen_spectrum,
    final_superposition,
    inverse_design,
    load_config,
    mixing_angles,
    null_condition,
    null_detuning_pair,
    numeric_null_eigenvector,
    parse_config,
    population_ratio,
    propagate,
    scenario,
    scenario_names,
    sweep,
    theta_dot,
)

__all__ = [name for name in dir() if not name.startswith("_")]
