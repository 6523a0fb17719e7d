#pragma once

#include <istream>
#include <string>
#include <string_view>
#include <vector>

#include "stirap/model.hpp"
#include "stirap/propagator.hpp"

namespace stirap {

/// A scenario read from a `key = value` file.
struct ScenarioConfig {
  SystemConfig cfg;
  TimeGrid grid;
};

/// Parses the flat key-value scenario format:
///
///   # comment
///   omega_p_peak = 4.0
///   grid.dt = 1e-3
///
/// Keys are the SystemConfig field names plus grid.t_start, grid.t_end and
/// grid.dt. Unknown or repeated keys are errors, reported as
/// "<source>:<line>: <message>". The pulse and detuning keys are required;
/// n_levels, omega_d and delta_4 default to 4, 0 and 0, and the grid defaults
/// to [-5T, 5T] at dt = 1e-3.
ScenarioConfig parse_scenario_config(std::istream& in, const std::string& source = "<config>");
ScenarioConfig load_scenario_config(const std::string& path);

/// Serialises in the same format (round-trips through parse_scenario_config).
std::string format_scenario_config(const ScenarioConfig& sc);

/// Applies one `key=value` assignment. Throws ConfigError for unknown keys or bad values.
void apply_override(ScenarioConfig& sc, std::string_view assignment);
void set_field(ScenarioConfig& sc, std::string_view key, std::string_view value);

/// Keys accepted in config files.
const std::vector<std::string>& config_keys();

/// Real-valued SystemConfig fields (the ones a sweep may vary).
const std::vector<std::string>& sweepable_fields();

/// Sets a real-valued SystemConfig field by name; ConfigError listing valid names otherwise.
void set_system_field(SystemConfig& cfg, std::string_view field, double value);

}  // namespace stirap
