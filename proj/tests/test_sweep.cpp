#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <sstream>

#include "stirap/error.hpp"
#include "stirap/scenarios.hpp"
#include "stirap/sweep.hpp"

using namespace stirap;

namespace {

ScenarioConfig coarse(const char* name) {
  ScenarioConfig sc = find_scenario(name).config;
  sc.grid.dt = 1e-2;
  return sc;
}

}  // namespace

TEST_CASE("sweep values are inclusive and evenly spaced") {
  CHECK(SweepSpec{"omega_c", 0.0, 1.0, 0}.values().empty());
  CHECK(SweepSpec{"omega_c", 2.0, 5.0, 1}.values() == std::vector<double>{2.0});
  const auto v = SweepSpec{"omega_c", 1.0, 2.0, 5}.values();
  REQUIRE(v.size() == 5);
  CHECK(v[0] == 1.0);
  CHECK(v[2] == 1.5);
  CHECK(v[4] == 2.0);
}

TEST_CASE("unknown sweep fields are rejected before any work") {
  CHECK_THROWS_AS(run_sweep(coarse("fig2a"), SweepSpec{"bogus", 0.0, 1.0, 3}), ConfigError);
}

TEST_CASE("rows are ordered and independent of the worker count") {
  const SweepSpec spec{"omega_p_peak", 3.0, 5.0, 5};
  const auto serial = run_sweep(coarse("fig2a"), spec, std::nullopt, 1);
  const auto parallel = run_sweep(coarse("fig2a"), spec, std::nullopt, 4);
  REQUIRE(serial.size() == 5);
  REQUIRE(parallel.size() == 5);
  for (std::size_t i = 0; i < 5; ++i) {
    CHECK(serial[i].value == spec.values()[i]);
    CHECK(parallel[i].value == serial[i].value);
    CHECK(parallel[i].final_populations == serial[i].final_populations);
    CHECK(parallel[i].ratio == serial[i].ratio);
  }
}

TEST_CASE("design mode holds the analytic ratio while omega_c varies") {
  const auto rows =
      run_sweep(coarse("fig3a"), SweepSpec{"omega_c", 1.0, 2.0, 3}, DesignTarget{2.25, Branch::plus}, 2);
  for (const SweepRow& r : rows) {
    CAPTURE(r.value);
    CHECK(r.ratio_analytic == doctest::Approx(2.25).epsilon(1e-12));
    CHECK(r.ratio == doctest::Approx(2.25).epsilon(0.05));
    CHECK(std::isfinite(r.margin));
  }
}

TEST_CASE("worker failures propagate") {
  // A 0.5 step blows the norm tolerance on every point.
  ScenarioConfig sc = find_scenario("fig2a").config;
  sc.grid.dt = 0.5;
  CHECK_THROWS_AS(run_sweep(sc, SweepSpec{"omega_c", 2.0, 3.0, 4}, std::nullopt, 3), NumericalError);
}

TEST_CASE("sweep CSV layout") {
  const auto rows = run_sweep(coarse("fig2a"), SweepSpec{"omega_c", 2.5, 2.5, 1});
  std::ostringstream os;
  write_sweep_csv(os, "omega_c", 4, rows);
  std::istringstream in(os.str());
  std::string header, line;
  std::getline(in, header);
  std::getline(in, line);
  CHECK(header == "omega_c,p1,p2,p3,p4,ratio,ratio_analytic,margin");
  CHECK(line.rfind("2.5,", 0) == 0);
  CHECK(std::count(line.begin(), line.end(), ',') == 7);
}

TEST_CASE("zero-count sweep writes only the header") {
  const auto rows = run_sweep(coarse("fig2a"), SweepSpec{"delta_2", 1.0, 6.0, 0});
  CHECK(rows.empty());
  std::ostringstream os;
  write_sweep_csv(os, "delta_2", 4, rows);
  CHECK(os.str() == "delta_2,p1,p2,p3,p4,ratio,ratio_analytic,margin\n");
}

TEST_CASE("delta_2 sweep over both branches splits the population evenly") {
  const auto rows = run_sweep(find_scenario("fig2a").config, SweepSpec{"delta_2", 1.0, 6.0, 2});
  REQUIRE(rows.size() == 2);
  for (const SweepRow& r : rows) {
    CAPTURE(r.value);
    CHECK(r.final_populations(2) == doctest::Approx(0.5).epsilon(0.02));
    CHECK(r.final_populations(3) == doctest::Approx(0.5).epsilon(0.02));
    CHECK(r.ratio_analytic == doctest::Approx(1.0).epsilon(1e-12));
  }
}
