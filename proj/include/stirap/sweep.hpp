#pragma once

#include <cstddef>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "stirap/config_file.hpp"

namespace stirap {

struct SweepSpec {
  std::string field;  // a SystemConfig real field
  double start = 0.0;
  double stop = 0.0;
  std::size_t count = 0;

  /// count evenly spaced values from start to stop inclusive.
  std::vector<double> values() const;
};

/// Per point, re-derive delta_2 and delta_3 so the final P3/P4 hits `ratio` on `branch`.
struct DesignTarget {
  double ratio = 1.0;
  Branch branch = Branch::plus;
};

struct SweepRow {
  double value = 0.0;
  RealVector final_populations;
  double ratio = 0.0;           // measured P3 / P4
  double ratio_analytic = 0.0;  // cot^2(phi), NaN when undefined
  double margin = 0.0;          // adiabaticity margin, NaN when undefined
};

/// One propagation per value. Points run on up to `workers` threads (0 picks
/// the hardware concurrency); rows come back ordered by sweep index.
std::vector<SweepRow> run_sweep(const ScenarioConfig& base, const SweepSpec& spec,
                                const std::optional<DesignTarget>& design = std::nullopt,
                                unsigned workers = 0);

/// <field>,p1..pN,ratio,ratio_analytic,margin
void write_sweep_csv(std::ostream& os, const std::string& field, int n_levels,
                     const std::vector<SweepRow>& rows);

}  // namespace stirap
