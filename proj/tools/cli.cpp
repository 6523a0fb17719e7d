#include "cli.hpp"

#include <CLI11.hpp>
#include <cmath>
#include <fstream>
#include <numbers>
#include <optional>

#include "stirap/analytics.hpp"
#include "stirap/config_file.hpp"
#include "stirap/csv.hpp"
#include "stirap/diagnostics.hpp"
#include "stirap/error.hpp"
#include "stirap/propagator.hpp"
#include "stirap/scenarios.hpp"
#include "stirap/sweep.hpp"

namespace stirap::cli {

namespace {

struct SourceOptions {
  std::string config;
  std::string scenario;
  std::optional<double> dt;
  std::optional<double> t_start;
  std::optional<double> t_end;
  std::vector<std::string> overrides;
};

void add_source_options(CLI::App* cmd, SourceOptions& o, bool scenario_flag = true) {
  cmd->add_option("--config", o.config, "scenario config file (key = value)");
  if (scenario_flag) cmd->add_option("--scenario", o.scenario, "builtin scenario as the base");
  cmd->add_option("--dt", o.dt, "time step in T0");
  cmd->add_option("--t-start", o.t_start, "grid start in T0");
  cmd->add_option("--t-end", o.t_end, "grid end in T0");
  cmd->add_option("--override", o.overrides, "key=value applied after loading (repeatable)");
}

struct Loaded {
  ScenarioConfig sc;
  std::string label;
};

Loaded load(const SourceOptions& o) {
  Loaded l;
  if (!o.config.empty() && !o.scenario.empty()) {
    throw ConfigError("give either --config or --scenario, not both");
  }
  if (!o.config.empty()) {
    l.sc = load_scenario_config(o.config);
    l.label = o.config;
  } else if (!o.scenario.empty()) {
    l.sc = find_scenario(o.scenario).config;
    l.label = o.scenario;
  } else {
    throw ConfigError("no input: give --config <path> or --scenario <name>");
  }
  for (const auto& ov : o.overrides) apply_override(l.sc, ov);
  if (o.dt) l.sc.grid.dt = *o.dt;
  if (o.t_start) l.sc.grid.t_start = *o.t_start;
  if (o.t_end) l.sc.grid.t_end = *o.t_end;
  l.sc.cfg.validate();
  l.sc.grid.validate();
  return l;
}

Branch parse_branch(const std::string& s) {
  if (s == "plus") return Branch::plus;
  if (s == "minus") return Branch::minus;
  throw ConfigError("--branch: expected plus or minus, got '" + s + "'");
}

const char* branch_name(Branch b) { return b == Branch::plus ? "plus" : "minus"; }

std::ofstream open_output(const std::string& path) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw ConfigError(path + ": cannot open for writing");
  return f;
}

void kv(std::ostream& out, const std::string& key, double v) {
  out << key << " = " << format_double(v) << '\n';
}

void kv(std::ostream& out, const std::string& key, const std::string& v) {
  out << key << " = " << v << '\n';
}

std::string join(const RealVector& v) {
  std::string s;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    s += format_double(v(i));
  }
  return s;
}

void warn(std::ostream& err, const SystemConfig& cfg) {
  for (const auto& w : consistency_warnings(cfg)) err << "warning: " << w << '\n';
}

void print_run_summary(std::ostream& out, const Loaded& l, const Trajectory& traj) {
  const StateVector& c = traj.final_state();
  const RealVector p = c.cwiseAbs2();
  kv(out, "source", l.label);
  kv(out, "n_levels", std::to_string(l.sc.cfg.n_levels));
  kv(out, "t_end", traj.grid.t_end);
  for (Eigen::Index i = 0; i < p.size(); ++i) kv(out, "p" + std::to_string(i + 1), p(i));
  kv(out, "residual", p(0) + p(1));
  kv(out, "ratio", p(2) / p(3));
  kv(out, "norm_drift", traj.max_norm_drift);
  try {
    const FinalSuperposition fs = final_superposition(traj);
    for (Eigen::Index i = 0; i < fs.magnitudes.size(); ++i) {
      kv(out, "magnitude" + std::to_string(i + 3), fs.magnitudes(i));
    }
    for (Eigen::Index i = 1; i < fs.relative_phases.size(); ++i) {
      kv(out, "phase" + std::to_string(i + 3), fs.relative_phases(i));
    }
  } catch (const TransferIncomplete& e) {
    kv(out, "superposition", std::string("unavailable (") + e.what() + ")");
  }
}

int cmd_simulate(const SourceOptions& o, const std::string& out_path, std::ostream& out,
                 std::ostream& err) {
  const Loaded l = load(o);
  warn(err, l.sc.cfg);
  const Trajectory traj = propagate(l.sc.cfg, l.sc.grid);
  if (!out_path.empty()) {
    auto f = open_output(out_path);
    write_trajectory_csv(f, traj);
  }
  print_run_summary(out, l, traj);
  return kExitOk;
}

int cmd_darkstate(const SourceOptions& o, double t, const std::string& branch_flag,
                  std::ostream& out, std::ostream& err) {
  const Loaded l = load(o);
  const SystemConfig& cfg = l.sc.cfg;
  warn(err, cfg);
  const double delta = cfg.two_photon_detuning();
  const NullCondition nc = null_condition(cfg);
  std::vector<Branch> branches{Branch::plus, Branch::minus};
  if (!branch_flag.empty()) branches = {parse_branch(branch_flag)};

  kv(out, "source", l.label);
  kv(out, "time", t);
  kv(out, "delta", delta);
  if (cfg.n_levels == 4) {
    const auto [dp, dm] = null_detuning_pair(cfg.delta_3, cfg.omega_c);
    kv(out, "delta_plus", dp);
    kv(out, "delta_minus", dm);
  } else {
    const double root = std::sqrt(cfg.omega_c * cfg.omega_c + cfg.omega_d * cfg.omega_d);
    kv(out, "delta_plus", root);
    kv(out, "delta_minus", -root);
  }
  kv(out, "null_condition", nc.holds ? "holds" : "violated");
  kv(out, "null_residual", nc.residual);
  if (nc.holds) kv(out, "branch", branch_name(nc.branch));

  const MixingAngles a = mixing_angles_at(cfg, t);
  kv(out, "alpha", a.alpha);
  kv(out, "theta", a.theta);
  kv(out, "phi", a.phi);
  kv(out, "ratio", population_ratio(a.phi));
  if (cfg.omega_c == 0.0 && cfg.n_levels == 4) {
    kv(out, "reduction", "normal lambda system (phi = 0): dark state cos(theta)|1> - sin(theta)|3>");
  }

  for (Branch b : branches) {
    const std::string name = branch_name(b);
    if (cfg.n_levels == 4) {
      kv(out, "dark_" + name, join(dark_state_4(a, b).amplitudes));
      const auto target = target_superposition(a.phi, b);
      kv(out, "target_" + name, format_double(target[0]) + ", " + format_double(target[1]));
    } else {
      const double root = std::sqrt(cfg.omega_c * cfg.omega_c + cfg.omega_d * cfg.omega_d);
      const DarkState d =
          dark_state_5(pump_envelope(cfg).value(t), stokes_envelope(cfg).value(t), cfg.omega_c,
                       cfg.omega_d, branch_sign(b) * root, b);
      kv(out, "dark_" + name, join(d.amplitudes));
    }
  }
  return kExitOk;
}

int cmd_spectrum(const SourceOptions& o, const std::string& out_path, std::ostream& out,
                 std::ostream& err) {
  const Loaded l = load(o);
  warn(err, l.sc.cfg);
  const SpectrumSeries s = eigen_spectrum(l.sc.cfg, l.sc.grid);
  if (!out_path.empty()) {
    auto f = open_output(out_path);
    write_spectrum_csv(f, s);
  }
  int min_null = l.sc.cfg.n_levels;
  int max_null = 0;
  for (const auto& ev : s.eigenvalues) {
    const int count = static_cast<int>((ev.array().abs() < 1e-10).count());
    min_null = std::min(min_null, count);
    max_null = std::max(max_null, count);
  }
  kv(out, "source", l.label);
  kv(out, "samples", std::to_string(s.times.size()));
  kv(out, "null_eigenvalues_min", std::to_string(min_null));
  kv(out, "null_eigenvalues_max", std::to_string(max_null));
  if (!s.theta_dot.empty() && !std::isnan(s.theta_dot.front())) {
    const AdiabaticityReport r = adiabaticity_report(s);
    kv(out, "max_theta_dot", r.max_theta_dot);
    kv(out, "min_gap", r.min_gap);
    kv(out, "margin", r.margin);
    kv(out, "window_start", r.window_start);
    kv(out, "window_end", r.window_end);
  }
  return kExitOk;
}

struct SweepOptions {
  std::string field;
  double start = 0.0;
  double stop = 0.0;
  std::size_t count = 0;
  std::optional<double> design_ratio;
  std::string branch = "plus";
  unsigned workers = 0;
};

int cmd_sweep(const SourceOptions& o, const SweepOptions& so, const std::string& out_path,
              std::ostream& out) {
  const Loaded l = load(o);
  std::optional<DesignTarget> design;
  if (so.design_ratio) design = DesignTarget{*so.design_ratio, parse_branch(so.branch)};
  const SweepSpec spec{so.field, so.start, so.stop, so.count};
  const auto rows = run_sweep(l.sc, spec, design, so.workers);
  if (out_path.empty()) {
    write_sweep_csv(out, so.field, l.sc.cfg.n_levels, rows);
  } else {
    auto f = open_output(out_path);
    write_sweep_csv(f, so.field, l.sc.cfg.n_levels, rows);
  }
  return kExitOk;
}

int cmd_scenario_list(std::ostream& out) {
  for (const auto& s : builtin_scenarios()) out << s.name << "  " << s.description << '\n';
  return kExitOk;
}

int cmd_scenario_run(const std::string& name, SourceOptions o, const std::string& out_path,
                     bool strict, std::ostream& out, std::ostream& err) {
  const Scenario& s = find_scenario(name);
  o.scenario = name;
  const Loaded l = load(o);
  for (const auto& n : s.notes) out << "# " << n << '\n';
  warn(err, l.sc.cfg);
  const Trajectory traj = propagate(l.sc.cfg, l.sc.grid);
  if (!out_path.empty()) {
    auto f = open_output(out_path);
    write_trajectory_csv(f, traj);
  }
  print_run_summary(out, l, traj);
  bool all_passed = true;
  if (s.expected) {
    for (const auto& c : check_expectation(*s.expected, traj)) {
      out << "check." << c.name << " = " << (c.passed ? "pass" : "FAIL") << " (observed "
          << format_double(c.observed) << ", " << c.detail << ")\n";
      all_passed = all_passed && c.passed;
    }
  }
  return strict && !all_passed ? kExitNumerical : kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"STIRAP into a twofold or threefold final manifold: propagation, dark states, spectra"};
  app.require_subcommand(1);

  SourceOptions sim_src;
  std::string sim_out;
  auto* sim = app.add_subcommand("simulate", "propagate a scenario and write the trajectory CSV");
  add_source_options(sim, sim_src);
  sim->add_option("--out", sim_out, "trajectory CSV path");

  SourceOptions dark_src;
  double dark_time = 0.0;
  std::string dark_branch;
  auto* dark = app.add_subcommand("darkstate", "closed-form dark-state report");
  add_source_options(dark, dark_src);
  dark->add_option("--time", dark_time, "evaluation time in T0");
  dark->add_option("--branch", dark_branch, "plus|minus (default: both)");

  SourceOptions spec_src;
  std::string spec_out;
  auto* spec = app.add_subcommand("spectrum", "instantaneous eigenvalues and mixing-angle rate");
  add_source_options(spec, spec_src);
  spec->add_option("--out", spec_out, "spectrum CSV path");

  SourceOptions sweep_src;
  SweepOptions sweep_opts;
  std::string sweep_out;
  auto* sweep = app.add_subcommand("sweep", "propagate once per value of one config field");
  add_source_options(sweep, sweep_src);
  sweep->add_option("--field", sweep_opts.field, "SystemConfig field to vary")->required();
  sweep->add_option("--start", sweep_opts.start)->required();
  sweep->add_option("--stop", sweep_opts.stop)->required();
  sweep->add_option("--count", sweep_opts.count)->required();
  sweep->add_option("--design-ratio", sweep_opts.design_ratio,
                    "re-derive delta_2, delta_3 per point for this final P3/P4");
  sweep->add_option("--branch", sweep_opts.branch, "plus|minus for --design-ratio");
  sweep->add_option("--workers", sweep_opts.workers, "worker threads (0 = all cores)");
  sweep->add_option("--out", sweep_out, "sweep CSV path (default: stdout)");

  auto* scen = app.add_subcommand("scenario", "builtin parameter sets");
  scen->require_subcommand(1);
  scen->add_subcommand("list", "list builtin scenarios");
  auto* scen_run = scen->add_subcommand("run", "run a builtin scenario and check its expectations");
  std::string scen_name;
  SourceOptions scen_src;
  std::string scen_out;
  bool scen_strict = false;
  scen_run->add_option("name", scen_name)->required();
  add_source_options(scen_run, scen_src, false);
  scen_run->add_option("--out", scen_out, "trajectory CSV path");
  scen_run->add_flag("--check", scen_strict, "exit 3 if an expectation fails");

  std::vector<std::string> argv_store{"stirap"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_store) argv.push_back(a.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitConfig;
  }

  try {
    if (sim->parsed()) return cmd_simulate(sim_src, sim_out, out, err);
    if (dark->parsed()) return cmd_darkstate(dark_src, dark_time, dark_branch, out, err);
    if (spec->parsed()) return cmd_spectrum(spec_src, spec_out, out, err);
    if (sweep->parsed()) return cmd_sweep(sweep_src, sweep_opts, sweep_out, out);
    if (scen_run->parsed()) {
      return cmd_scenario_run(scen_name, scen_src, scen_out, scen_strict, out, err);
    }
    return cmd_scenario_list(out);
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitNumerical;
  }
}

}  // namespace stirap::cli
