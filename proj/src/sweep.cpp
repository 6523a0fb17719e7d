#include "stirap/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <limits>
#include <mutex>
#include <thread>

#include "stirap/analytics.hpp"
#include "stirap/csv.hpp"
#include "stirap/diagnostics.hpp"
#include "stirap/propagator.hpp"

namespace stirap {

std::vector<double> SweepSpec::values() const {
  std::vector<double> v;
  v.reserve(count);
  if (count == 1) v.push_back(start);
  for (std::size_t i = 0; count > 1 && i < count; ++i) {
    v.push_back(i + 1 == count ? stop
                               : start + (stop - start) * static_cast<double>(i) /
                                             static_cast<double>(count - 1));
  }
  return v;
}

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

// Spectrum stride for the margin column: the gap varies on the pulse time
// scale, so every 10th propagation step is plenty.
constexpr double kSpectrumStride = 10.0;

SweepRow run_point(ScenarioConfig sc, const SweepSpec& spec, double value,
                   const std::optional<DesignTarget>& design) {
  set_system_field(sc.cfg, spec.field, value);
  if (design) {
    const DesignedDetunings d = inverse_design(design->ratio, design->branch, sc.cfg.omega_c);
    sc.cfg.delta_2 = sc.cfg.delta_1 - d.delta;
    sc.cfg.delta_3 = d.delta_3;
  }
  const Trajectory traj = propagate(sc.cfg, sc.grid);

  SweepRow row;
  row.value = value;
  row.final_populations = traj.final_state().cwiseAbs2();
  row.ratio = row.final_populations(2) / row.final_populations(3);
  row.ratio_analytic = kNaN;
  row.margin = kNaN;
  try {
    row.ratio_analytic = population_ratio(mixing_angles_at(sc.cfg, sc.grid.t_end).phi);
  } catch (const DomainError&) {
  }
  TimeGrid coarse = sc.grid;
  coarse.dt = sc.grid.dt * kSpectrumStride;
  try {
    coarse.validate();
  } catch (const ConfigError&) {
    coarse = sc.grid;
  }
  const SpectrumSeries spectrum = eigen_spectrum(sc.cfg, coarse);
  if (!std::isnan(spectrum.theta_dot.front())) row.margin = adiabaticity_report(spectrum).margin;
  return row;
}

}  // namespace

std::vector<SweepRow> run_sweep(const ScenarioConfig& base, const SweepSpec& spec,
                                const std::optional<DesignTarget>& design, unsigned workers) {
  {
    SystemConfig probe = base.cfg;
    set_system_field(probe, spec.field, 0.0);  // rejects unknown fields up front
  }
  const std::vector<double> values = spec.values();
  std::vector<SweepRow> rows(values.size());
  if (values.empty()) return rows;

  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
  workers = std::min<unsigned>(workers, static_cast<unsigned>(values.size()));

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < values.size(); i = next++) {
          try {
            rows[i] = run_point(base, spec, values[i], design);
          } catch (...) {
            std::lock_guard lock(failure_mutex);
            if (!failure) failure = std::current_exception();
          }
        }
      });
    }
  }
  if (failure) std::rethrow_exception(failure);
  return rows;
}

void write_sweep_csv(std::ostream& os, const std::string& field, int n_levels,
                     const std::vector<SweepRow>& rows) {
  os << field;
  for (int i = 1; i <= n_levels; ++i) os << ",p" << i;
  os << ",ratio,ratio_analytic,margin\n";
  for (const auto& r : rows) {
    os << format_double(r.value);
    for (Eigen::Index i = 0; i < r.final_populations.size(); ++i) {
      os << ',' << format_double(r.final_populations(i));
    }
    os << ',' << format_double(r.ratio) << ',' << format_double(r.ratio_analytic) << ','
       << format_double(r.margin) << '\n';
  }
}

}  // namespace stirap
