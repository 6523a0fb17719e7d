#include <doctest.h>

#include <cmath>
#include <numbers>

#include "stirap/analytics.hpp"
#include "stirap/error.hpp"
#include "stirap/scenarios.hpp"

using namespace stirap;

TEST_CASE("registry order and names") {
  const char* names[] = {"fig2a", "fig2b", "fig2c", "fig3a", "fig3b", "fig3c", "fig4", "fig5c"};
  const auto& all = builtin_scenarios();
  REQUIRE(all.size() == 8);
  for (std::size_t i = 0; i < 8; ++i) CHECK(all[i].name == names[i]);
}

TEST_CASE("every builtin scenario validates") {
  for (const Scenario& s : builtin_scenarios()) {
    CAPTURE(s.name);
    CHECK_NOTHROW(s.config.cfg.validate());
    CHECK_NOTHROW(s.config.grid.validate());
    CHECK_FALSE(s.notes.empty());
  }
}

TEST_CASE("unknown scenario lists the known ones") {
  try {
    find_scenario("fig9");
    FAIL("expected ConfigError");
  } catch (const ConfigError& e) {
    CHECK(std::string(e.what()).find("fig3b") != std::string::npos);
  }
}

TEST_CASE("scenario parameters") {
  const SystemConfig a = find_scenario("fig2a").config.cfg;
  CHECK(a.omega_p_peak == 4.0);
  CHECK(a.omega_c == 2.5);
  CHECK(a.two_photon_detuning() == 2.5);
  CHECK(find_scenario("fig2c").config.cfg.two_photon_detuning() == -2.5);
  CHECK(find_scenario("fig3a").config.cfg.delta_3 == doctest::Approx(-1.25).epsilon(1e-15));
  CHECK(find_scenario("fig3b").config.cfg.delta_3 == doctest::Approx(44.8).epsilon(1e-14));
  CHECK(find_scenario("fig3c").config.cfg.delta_3 == doctest::Approx(9.711).epsilon(1e-15));
  const SystemConfig c = find_scenario("fig3c").config.cfg;
  CHECK(c.omega_p_peak == 2.0);
  CHECK(c.omega_s_peak == 9.0);
}

TEST_CASE("4-level scenarios satisfy the null condition on the expected branch") {
  struct Case {
    const char* name;
    Branch branch;
  };
  for (const Case c : {Case{"fig2a", Branch::plus}, Case{"fig2b", Branch::plus},
                       Case{"fig2c", Branch::minus}, Case{"fig3a", Branch::plus},
                       Case{"fig3b", Branch::minus}, Case{"fig3c", Branch::plus},
                       Case{"fig4", Branch::minus}}) {
    CAPTURE(c.name);
    const NullCondition nc = null_condition(find_scenario(c.name).config.cfg);
    CHECK(nc.holds);
    CHECK(nc.branch == c.branch);
    CHECK(consistency_warnings(find_scenario(c.name).config.cfg).empty());
  }
}

TEST_CASE("expected ratios follow from the detunings") {
  for (const char* name : {"fig3a", "fig3b", "fig3c"}) {
    CAPTURE(name);
    const Scenario& s = find_scenario(name);
    const double phi = mixing_angles_at(s.config.cfg, 0.0).phi;
    CHECK(population_ratio(phi) == doctest::Approx(s.expected->ratio->value).epsilon(1e-12));
  }
}

TEST_CASE("fig5c warns and suggests both completions") {
  const auto warnings = consistency_warnings(find_scenario("fig5c").config.cfg);
  REQUIRE(warnings.size() == 1);
  CHECK(warnings[0].find("+-5") != std::string::npos);
  CHECK(warnings[0].find("-2.520797289396") != std::string::npos);
  CHECK(warnings[0].find("9.520797289396") != std::string::npos);
  bool suggests = false;
  for (const auto& n : find_scenario("fig5c").notes)
    suggests = suggests || n.find("--override delta_3=-2.520797289396") != std::string::npos;
  CHECK(suggests);
}

TEST_CASE("check_expectation evaluates each target") {
  Trajectory traj;
  traj.grid = TimeGrid{0.0, 1.0, 0.1};
  StateVector c(4);
  const double h = std::sqrt(0.5);
  c << 0.0, 0.0, h, std::polar(h, 3.1);
  traj.states = {c};
  Expectation e;
  e.p3 = Target{0.5, 0.01};
  e.p4 = Target{0.4, 0.01};
  e.max_residual = 1e-3;
  e.relative_phase = Target{std::numbers::pi, 0.05};
  e.ratio = Target{1.0, 0.02};
  const auto r = check_expectation(e, traj);
  REQUIRE(r.size() == 5);
  CHECK(r[0].passed);
  CHECK_FALSE(r[1].passed);
  CHECK(r[2].passed);
  CHECK(r[3].passed);
  CHECK(r[4].passed);
  e.relative_phase = Target{0.0, 0.05};
  CHECK_FALSE(check_expectation(e, traj)[3].passed);
}
