#include <doctest.h>

#include <cmath>
#include <limits>

#include "oracles.hpp"
#include "stirap/analytics.hpp"
#include "stirap/diagnostics.hpp"
#include "stirap/error.hpp"
#include "stirap/scenarios.hpp"

using namespace stirap;

TEST_CASE("theta_dot matches a central difference of theta") {
  for (const char* name : {"fig2b", "fig3a", "fig3b", "fig3c"}) {
    CAPTURE(name);
    const SystemConfig cfg = find_scenario(name).config.cfg;
    for (double t = -12.0; t <= 12.0; t += 0.9) {
      const double fd =
          oracle::central_difference([&](double s) { return mixing_angles_at(cfg, s).theta; }, t);
      CHECK(theta_dot(cfg, t) == doctest::Approx(fd).epsilon(1e-7).scale(1.0));
    }
  }
}

TEST_CASE("theta_dot of equal Gaussian pulses has a closed form") {
  // tan(theta) = alpha exp(k t), k = 4 tau / T^2, so
  // theta_dot = alpha k e^{kt} / (1 + alpha^2 e^{2kt}), peaking at k / 2.
  const SystemConfig cfg = find_scenario("fig2c").config.cfg;
  const double alpha = std::sqrt(2.0);
  const double k = 4.0 * 2.5 / 25.0;
  for (double t : {-10.0, -3.0, -1.0, 0.0, 2.0, 6.0}) {
    const double e = std::exp(k * t);
    CHECK(theta_dot(cfg, t) == doctest::Approx(alpha * k * e / (1.0 + alpha * alpha * e * e)).epsilon(1e-13));
  }
  const SpectrumSeries s = eigen_spectrum(cfg, TimeGrid{-15.0, 15.0, 1e-2});
  const AdiabaticityReport r = adiabaticity_report(s);
  CHECK(r.max_theta_dot == doctest::Approx(k / 2.0).epsilon(1e-6));
}

TEST_CASE("spectrum keeps a null eigenvalue when the condition holds") {
  const auto& sc = find_scenario("fig4").config;
  const SpectrumSeries s = eigen_spectrum(sc.cfg, TimeGrid{-15.0, 15.0, 1e-2});
  REQUIRE(s.times.size() == 3001);
  REQUIRE(s.eigenvalues.size() == 3001);
  REQUIRE(s.theta_dot.size() == 3001);
  for (const RealVector& ev : s.eigenvalues) {
    CHECK(ev.cwiseAbs().minCoeff() < 1e-10);
    for (int i = 1; i < 4; ++i) CHECK(ev(i - 1) <= ev(i));
  }
}

TEST_CASE("eigen_spectrum agrees with the determinant oracle at sample times") {
  const auto& sc = find_scenario("fig4").config;
  const SpectrumSeries s = eigen_spectrum(sc.cfg, TimeGrid{-5.0, 5.0, 1.0});
  for (std::size_t k = 0; k < s.times.size(); ++k) {
    const auto roots = oracle::eigenvalues_by_scan(build_hamiltonian(sc.cfg, s.times[k]));
    REQUIRE(roots.size() == 4);
    for (int i = 0; i < 4; ++i)
      CHECK(s.eigenvalues[k](i) == doctest::Approx(roots[i]).epsilon(1e-9).scale(1.0));
  }
}

TEST_CASE("nonzero_gap drops the eigenvalue nearest zero") {
  RealVector ev(4);
  ev << -3.0, 1e-12, 0.5, 2.0;
  CHECK(nonzero_gap(ev) == 0.5);
  ev << -0.2, -1e-13, 0.5, 2.0;
  CHECK(nonzero_gap(ev) == 0.2);
}

TEST_CASE("adiabaticity report restricts to the half-maximum window") {
  SpectrumSeries s;
  for (int k = 0; k <= 10; ++k) {
    s.times.push_back(k);
    RealVector ev(3);
    ev << -1.0, 0.0, 0.1 + k;  // gap grows with k
    s.eigenvalues.push_back(ev);
    s.theta_dot.push_back(k == 4 ? 1.0 : (k == 3 || k == 5) ? 0.6 : 0.1);
  }
  const AdiabaticityReport r = adiabaticity_report(s);
  CHECK(r.max_theta_dot == 1.0);
  CHECK(r.window_start == 3.0);
  CHECK(r.window_end == 5.0);
  CHECK(r.min_gap == 1.0);
  CHECK(r.margin == 1.0);
  CHECK(r.min_pointwise_ratio == doctest::Approx(1.0));
}

TEST_CASE("adiabaticity margin is infinite without rotation") {
  SpectrumSeries s;
  s.times = {0.0, 1.0};
  RealVector ev(2);
  ev << 0.0, 1.0;
  s.eigenvalues = {ev, ev};
  s.theta_dot = {0.0, 0.0};
  CHECK(std::isinf(adiabaticity_report(s).margin));
}

TEST_CASE("populations follow the dark state") {
  const auto& sc = find_scenario("fig2b").config;
  const Trajectory traj = propagate(sc.cfg, TimeGrid{-25.0, 25.0, 1e-2});
  const std::vector<double> f = darkstate_fidelity(traj, sc.cfg);
  REQUIRE(f.size() == traj.states.size());
  // At t = -25 the dark state is still cos(theta)|1> with tan(theta) ~ sqrt(2) e^-10.
  CHECK(f.front() == doctest::Approx(1.0).epsilon(1e-8));
  // Transient bright-state admixture is of order (theta_dot / gap)^2, a few
  // percent, and mostly returns; what stays behind is P1 at t_end.
  double lowest = 1.0;
  for (double v : f) lowest = std::min(lowest, v);
  CHECK(lowest > 0.96);
  const StateVector& c = traj.final_state();
  CHECK(f.back() == doctest::Approx(1.0 - std::norm(c(0)) - std::norm(c(1))).epsilon(1e-3));
}

TEST_CASE("fidelity needs an analytic dark state") {
  const auto& sc = find_scenario("fig5c").config;
  const Trajectory traj = propagate(sc.cfg, TimeGrid{-25.0, 25.0, 1e-2});
  CHECK_THROWS_AS(darkstate_fidelity(traj, sc.cfg), PreconditionError);
}

TEST_CASE("theta_dot is undefined when both pulses vanish") {
  SystemConfig cfg;
  cfg.omega_p_peak = 0.0;
  cfg.omega_s_peak = 0.0;
  CHECK_THROWS_AS(theta_dot(cfg, 0.0), NumericalError);
}
