#pragma once

#include <optional>
#include <string>
#include <vector>

#include "stirap/config_file.hpp"
#include "stirap/propagator.hpp"

namespace stirap {

struct Target {
  double value = 0.0;
  double tolerance = 0.0;  // absolute, unless stated otherwise
};

/// What a scenario is expected to produce at t_end.
struct Expectation {
  std::optional<Target> p3;
  std::optional<Target> p4;
  std::optional<double> max_residual;     // bound on P1 + P2
  std::optional<Target> relative_phase;   // arg(C4 / C3), angular distance
  std::optional<Target> ratio;            // P3 / P4, tolerance relative
};

struct Scenario {
  std::string name;
  std::string description;
  ScenarioConfig config;
  std::optional<Expectation> expected;
  std::vector<std::string> notes;  // where each parameter comes from
};

/// fig2a, fig2b, fig2c, fig3a, fig3b, fig3c, fig4, fig5c in that order.
const std::vector<Scenario>& builtin_scenarios();

/// Throws ConfigError listing the known names.
const Scenario& find_scenario(const std::string& name);

/// Human-readable warnings about parameter sets without a dark state.
std::vector<std::string> consistency_warnings(const SystemConfig& cfg);

struct CheckResult {
  std::string name;
  bool passed = false;
  double observed = 0.0;
  std::string detail;
};

/// Evaluates an expectation against the final state of a trajectory.
std::vector<CheckResult> check_expectation(const Expectation& e, const Trajectory& traj);

}  // namespace stirap
