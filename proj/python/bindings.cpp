#include <pybind11/eigen.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "stirap/analytics.hpp"
#include "stirap/config_file.hpp"
#include "stirap/csv.hpp"
#include "stirap/diagnostics.hpp"
#include "stirap/error.hpp"
#include "stirap/propagator.hpp"
#include "stirap/scenarios.hpp"
#include "stirap/sweep.hpp"

namespace py = pybind11;
using namespace stirap;

namespace {

// Row k holds C(t_k).
py::array_t<std::complex<double>> states_array(const Trajectory& traj) {
  const auto rows = static_cast<py::ssize_t>(traj.states.size());
  const py::ssize_t cols = rows ? traj.states.front().size() : 0;
  py::array_t<std::complex<double>> out({rows, cols});
  auto v = out.mutable_unchecked<2>();
  for (py::ssize_t k = 0; k < rows; ++k)
    for (py::ssize_t i = 0; i < cols; ++i) v(k, i) = traj.states[k](i);
  return out;
}

py::array_t<double> times_array(const TimeGrid& grid, std::size_t n) {
  py::array_t<double> out(static_cast<py::ssize_t>(n));
  auto v = out.mutable_unchecked<1>();
  for (std::size_t k = 0; k < n; ++k) v(k) = grid.time_at(k);
  return out;
}

py::array_t<double> rows_array(const std::vector<RealVector>& rows) {
  const auto n = static_cast<py::ssize_t>(rows.size());
  const py::ssize_t m = n ? rows.front().size() : 0;
  py::array_t<double> out({n, m});
  auto v = out.mutable_unchecked<2>();
  for (py::ssize_t k = 0; k < n; ++k)
    for (py::ssize_t i = 0; i < m; ++i) v(k, i) = rows[k](i);
  return out;
}

Branch branch_of(const std::string& s) {
  if (s == "plus") return Branch::plus;
  if (s == "minus") return Branch::minus;
  throw ConfigError("branch must be 'plus' or 'minus', got '" + s + "'");
}

std::string name_of(Branch b) { return b == Branch::plus ? "plus" : "minus"; }

}  // namespace

PYBIND11_MODULE(_stirap, m) {
  m.doc() = "STIRAP into twofold and threefold level manifolds";

  auto base = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<ConfigError>(m, "ConfigError", base.ptr());
  auto numerical = py::register_exception<NumericalError>(m, "NumericalError", base.ptr());
  py::register_exception<DomainError>(m, "DomainError", numerical.ptr());
  py::register_exception<PreconditionError>(m, "PreconditionError", numerical.ptr());

  py::class_<SystemConfig>(m, "SystemConfig")
      .def(py::init<>())
      .def_readwrite("n_levels", &SystemConfig::n_levels)
      .def_readwrite("omega_p_peak", &SystemConfig::omega_p_peak)
      .def_readwrite("omega_s_peak", &SystemConfig::omega_s_peak)
      .def_readwrite("omega_c", &SystemConfig::omega_c)
      .def_readwrite("omega_d", &SystemConfig::omega_d)
      .def_readwrite("pulse_width", &SystemConfig::pulse_width)
      .def_readwrite("half_delay", &SystemConfig::half_delay)
      .def_readwrite("delta_1", &SystemConfig::delta_1)
      .def_readwrite("delta_2", &SystemConfig::delta_2)
      .def_readwrite("delta_3", &SystemConfig::delta_3)
      .def_readwrite("delta_4", &SystemConfig::delta_4)
      .def_property_readonly("delta", &SystemConfig::two_photon_detuning)
      .def("validate", &SystemConfig::validate)
      .def("__repr__", [](const SystemConfig& c) {
        std::ostringstream os;
        os << "SystemConfig(n_levels=" << c.n_levels << ", omega_c=" << format_double(c.omega_c)
           << ", delta=" << format_double(c.two_photon_detuning()) << ")";
        return os.str();
      });

  py::class_<TimeGrid>(m, "TimeGrid")
      .def(py::init<>())
      .def(py::init([](double t_start, double t_end, double dt) { return TimeGrid{t_start, t_end, dt}; }),
           py::arg("t_start"), py::arg("t_end"), py::arg("dt"))
      .def_readwrite("t_start", &TimeGrid::t_start)
      .def_readwrite("t_end", &TimeGrid::t_end)
      .def_readwrite("dt", &TimeGrid::dt)
      .def_property_readonly("steps", &TimeGrid::steps)
      .def("validate", &TimeGrid::validate);

  py::class_<Trajectory>(m, "Trajectory")
      .def_property_readonly("times", [](const Trajectory& t) { return times_array(t.grid, t.states.size()); })
      .def_property_readonly("states", &states_array)
      .def_property_readonly("populations", [](const Trajectory& t) { return rows_array(populations(t)); })
      .def_readonly("max_norm_drift", &Trajectory::max_norm_drift)
      .def("final_state", [](const Trajectory& t) { return ComplexVector(t.final_state()); })
      .def("to_csv", [](const Trajectory& t) {
        std::ostringstream os;
        write_trajectory_csv(os, t);
        return os.str();
      });

  m.def("build_hamiltonian", &build_hamiltonian, py::arg("cfg"), py::arg("t"));
  m.def(
      "propagate",
      [](const SystemConfig& cfg, const TimeGrid& grid, std::optional<ComplexVector> initial) {
        py::gil_scoped_release release;
        return initial ? propagate(cfg, grid, *initial) : propagate(cfg, grid);
      },
      py::arg("cfg"), py::arg("grid"), py::arg("initial") = py::none());
  m.def("final_superposition", [](const Trajectory& t) {
    const FinalSuperposition fs = final_superposition(t);
    return py::make_tuple(RealVector(fs.magnitudes), RealVector(fs.relative_phases));
  });

  m.def("null_detuning_pair", &null_detuning_pair, py::arg("delta_3"), py::arg("omega_c"));
  m.def("control_detuning_for", &control_detuning_for, py::arg("delta"), py::arg("omega_c"));
  m.def("control_detuning_for_5", &control_detuning_for_5, py::arg("delta"), py::arg("omega_c"),
        py::arg("omega_d"));
  m.def("population_ratio", &population_ratio, py::arg("phi"));
  m.def("mixing_angles", [](const SystemConfig& cfg, double t) {
    const MixingAngles a = mixing_angles_at(cfg, t);
    return py::dict(py::arg("theta") = a.theta, py::arg("phi") = a.phi, py::arg("alpha") = a.alpha);
  }, py::arg("cfg"), py::arg("t"));
  m.def("null_condition", [](const SystemConfig& cfg) {
    const NullCondition nc = null_condition(cfg);
    return py::dict(py::arg("holds") = nc.holds, py::arg("branch") = name_of(nc.branch),
                    py::arg("residual") = nc.residual);
  });
  m.def(
      "dark_state",
      [](const SystemConfig& cfg, double t, const std::string& branch) {
        return RealVector(dark_state_at(cfg, t, branch_of(branch)).amplitudes);
      },
      py::arg("cfg"), py::arg("t"), py::arg("branch"));
  m.def(
      "numeric_null_eigenvector",
      [](const RealMatrix& h, double tol) { return numeric_null_eigenvector(h, tol); },
      py::arg("h"), py::arg("tol") = 1e-10);
  m.def(
      "inverse_design",
      [](double ratio, const std::string& branch, double omega_c) {
        const DesignedDetunings d = inverse_design(ratio, branch_of(branch), omega_c);
        return py::make_tuple(d.delta, d.delta_3);
      },
      py::arg("ratio"), py::arg("branch"), py::arg("omega_c"));

  m.def(
      "eigen_spectrum",
      [](const SystemConfig& cfg, const TimeGrid& grid) {
        const SpectrumSeries s = eigen_spectrum(cfg, grid);
        return py::make_tuple(py::array(py::cast(s.times)), rows_array(s.eigenvalues),
                              py::array(py::cast(s.theta_dot)));
      },
      py::arg("cfg"), py::arg("grid"));
  m.def("theta_dot", &theta_dot, py::arg("cfg"), py::arg("t"));
  m.def("adiabaticity_margin", [](const SystemConfig& cfg, const TimeGrid& grid) {
    const AdiabaticityReport r = adiabaticity_report(eigen_spectrum(cfg, grid));
    return py::dict(py::arg("min_gap") = r.min_gap, py::arg("max_theta_dot") = r.max_theta_dot,
                    py::arg("margin") = r.margin, py::arg("window_start") = r.window_start,
                    py::arg("window_end") = r.window_end);
  }, py::arg("cfg"), py::arg("grid"));

  m.def("scenario_names", [] {
    std::vector<std::string> names;
    for (const auto& s : builtin_scenarios()) names.push_back(s.name);
    return names;
  });
  m.def("scenario", [](const std::string& name) {
    const ScenarioConfig& sc = find_scenario(name).config;
    return py::make_tuple(sc.cfg, sc.grid);
  }, py::arg("name"));
  m.def("consistency_warnings", &consistency_warnings, py::arg("cfg"));
  m.def("load_config", [](const std::string& path) {
    const ScenarioConfig sc = load_scenario_config(path);
    return py::make_tuple(sc.cfg, sc.grid);
  }, py::arg("path"));
  m.def("parse_config", [](const std::string& text) {
    std::istringstream in(text);
    const ScenarioConfig sc = parse_scenario_config(in, "<string>");
    return py::make_tuple(sc.cfg, sc.grid);
  }, py::arg("text"));

  m.def(
      "sweep",
      [](const SystemConfig& cfg, const TimeGrid& grid, const std::string& field, double start,
         double stop, std::size_t count, std::optional<double> design_ratio, const std::string& branch,
         unsigned workers) {
        std::optional<DesignTarget> design;
        if (design_ratio) design = DesignTarget{*design_ratio, branch_of(branch)};
        std::vector<SweepRow> rows;
        {
          py::gil_scoped_release release;
          rows = run_sweep(ScenarioConfig{cfg, grid}, SweepSpec{field, start, stop, count}, design, workers);
        }
        py::list out;
        for (const auto& r : rows) {
          out.append(py::dict(py::arg("value") = r.value,
                              py::arg("populations") = RealVector(r.final_populations),
                              py::arg("ratio") = r.ratio, py::arg("ratio_analytic") = r.ratio_analytic,
                              py::arg("margin") = r.margin));
        }
        return out;
      },
      py::arg("cfg"), py::arg("grid"), py::arg("field"), py::arg("start"), py::arg("stop"),
      py::arg("count"), py::arg("design_ratio") = py::none(), py::arg("branch") = "plus",
      py::arg("workers") = 0);
}
