#include "stirap/config_file.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include "stirap/csv.hpp"
#include "stirap/error.hpp"

namespace stirap {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

double* real_field(SystemConfig& cfg, std::string_view key) {
  if (key == "omega_p_peak") return &cfg.omega_p_peak;
  if (key == "omega_s_peak") return &cfg.omega_s_peak;
  if (key == "omega_c") return &cfg.omega_c;
  if (key == "omega_d") return &cfg.omega_d;
  if (key == "pulse_width") return &cfg.pulse_width;
  if (key == "half_delay") return &cfg.half_delay;
  if (key == "delta_1") return &cfg.delta_1;
  if (key == "delta_2") return &cfg.delta_2;
  if (key == "delta_3") return &cfg.delta_3;
  if (key == "delta_4") return &cfg.delta_4;
  return nullptr;
}

double* grid_field(TimeGrid& grid, std::string_view key) {
  if (key == "grid.t_start") return &grid.t_start;
  if (key == "grid.t_end") return &grid.t_end;
  if (key == "grid.dt") return &grid.dt;
  return nullptr;
}

double parse_real(std::string_view key, std::string_view text) {
  double v = 0.0;
  const char* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (ec != std::errc() || ptr != end || !std::isfinite(v)) {
    throw ConfigError(std::string(key) + ": '" + std::string(text) + "' is not a finite number");
  }
  return v;
}

int parse_int(std::string_view key, std::string_view text) {
  int v = 0;
  const char* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (ec != std::errc() || ptr != end) {
    throw ConfigError(std::string(key) + ": '" + std::string(text) + "' is not an integer");
  }
  return v;
}

std::string join(const std::vector<std::string>& names) {
  std::string out;
  for (const auto& n : names) {
    if (!out.empty()) out += ", ";
    out += n;
  }
  return out;
}

const std::vector<std::string> kRequired = {"omega_p_peak", "omega_s_peak", "omega_c",
                                            "pulse_width",  "half_delay",   "delta_1",
                                            "delta_2",      "delta_3"};

}  // namespace

const std::vector<std::string>& sweepable_fields() {
  static const std::vector<std::string> names = {
      "omega_p_peak", "omega_s_peak", "omega_c", "omega_d", "pulse_width",
      "half_delay",   "delta_1",      "delta_2", "delta_3", "delta_4"};
  return names;
}

const std::vector<std::string>& config_keys() {
  static const std::vector<std::string> keys = [] {
    std::vector<std::string> k = {"n_levels"};
    k.insert(k.end(), sweepable_fields().begin(), sweepable_fields().end());
    k.insert(k.end(), {"grid.t_start", "grid.t_end", "grid.dt"});
    return k;
  }();
  return keys;
}

void set_system_field(SystemConfig& cfg, std::string_view field, double value) {
  double* slot = real_field(cfg, field);
  if (slot == nullptr) {
    throw ConfigError("unknown field '" + std::string(field) +
                      "'; valid fields: " + join(sweepable_fields()));
  }
  *slot = value;
}

void set_field(ScenarioConfig& sc, std::string_view key, std::string_view value) {
  if (key == "n_levels") {
    sc.cfg.n_levels = parse_int(key, value);
  } else if (double* slot = real_field(sc.cfg, key)) {
    *slot = parse_real(key, value);
  } else if (double* gslot = grid_field(sc.grid, key)) {
    *gslot = parse_real(key, value);
  } else {
    throw ConfigError("unknown key '" + std::string(key) + "'; valid keys: " + join(config_keys()));
  }
}

void apply_override(ScenarioConfig& sc, std::string_view assignment) {
  const auto eq = assignment.find('=');
  if (eq == std::string_view::npos) {
    throw ConfigError("override '" + std::string(assignment) + "' is not of the form key=value");
  }
  set_field(sc, trim(assignment.substr(0, eq)), trim(assignment.substr(eq + 1)));
}

ScenarioConfig parse_scenario_config(std::istream& in, const std::string& source) {
  ScenarioConfig sc;
  std::set<std::string, std::less<>> seen;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string_view body = line;
    if (const auto hash = body.find('#'); hash != std::string_view::npos) body = body.substr(0, hash);
    body = trim(body);
    if (body.empty()) continue;

    const auto eq = body.find('=');
    const std::string where = source + ":" + std::to_string(lineno) + ": ";
    if (eq == std::string_view::npos) throw ConfigError(where + "expected 'key = value'");
    const std::string_view key = trim(body.substr(0, eq));
    const std::string_view value = trim(body.substr(eq + 1));
    if (key.empty()) throw ConfigError(where + "missing key");
    if (value.empty()) throw ConfigError(where + "missing value for '" + std::string(key) + "'");
    if (!seen.emplace(key).second) throw ConfigError(where + "duplicate key '" + std::string(key) + "'");
    try {
      set_field(sc, key, value);
    } catch (const ConfigError& e) {
      throw ConfigError(where + e.what());
    }
  }
  if (seen.empty()) throw ConfigError(source + ":" + std::to_string(lineno) + ": no settings found");
  for (const auto& key : kRequired) {
    if (!seen.contains(key)) throw ConfigError(source + ": missing required key '" + key + "'");
  }
  if (!seen.contains("grid.t_start") && !seen.contains("grid.t_end")) {
    const TimeGrid def = TimeGrid::around_pulses(sc.cfg, sc.grid.dt);
    sc.grid.t_start = def.t_start;
    sc.grid.t_end = def.t_end;
  }
  return sc;
}

ScenarioConfig load_scenario_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError(path + ": cannot open");
  return parse_scenario_config(in, path);
}

std::string format_scenario_config(const ScenarioConfig& sc) {
  const SystemConfig& c = sc.cfg;
  std::ostringstream os;
  os << "n_levels = " << c.n_levels << '\n';
  const std::pair<const char*, double> fields[] = {
      {"omega_p_peak", c.omega_p_peak}, {"omega_s_peak", c.omega_s_peak},
      {"omega_c", c.omega_c},           {"omega_d", c.omega_d},
      {"pulse_width", c.pulse_width},   {"half_delay", c.half_delay},
      {"delta_1", c.delta_1},           {"delta_2", c.delta_2},
      {"delta_3", c.delta_3},           {"delta_4", c.delta_4},
      {"grid.t_start", sc.grid.t_start}, {"grid.t_end", sc.grid.t_end},
      {"grid.dt", sc.grid.dt}};
  for (const auto& [k, v] : fields) os << k << " = " << format_double(v) << '\n';
  return os.str();
}

}  // namespace stirap
