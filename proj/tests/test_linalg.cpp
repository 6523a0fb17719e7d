#include <doctest.h>

#include <Eigen/Eigenvalues>
#include <random>

#include "oracles.hpp"
#include "stirap/error.hpp"
#include "stirap/linalg.hpp"
#include "stirap/model.hpp"
#include "stirap/scenarios.hpp"

using namespace stirap;

TEST_CASE("diagonal input returns sorted diagonal") {
  RealMatrix h = RealMatrix::Zero(4, 4);
  h.diagonal() << 3.0, -1.0, 2.0, 0.0;
  const auto es = jacobi_eigen(h);
  CHECK(es.eigenvalues(0) == -1.0);
  CHECK(es.eigenvalues(1) == 0.0);
  CHECK(es.eigenvalues(2) == 2.0);
  CHECK(es.eigenvalues(3) == 3.0);
  CHECK(es.sweeps == 0);
}

TEST_CASE("2x2 rotation matches closed form") {
  RealMatrix h(2, 2);
  h << 0.0, 1.0, 1.0, 0.0;
  const auto es = jacobi_eigen(h);
  CHECK(es.eigenvalues(0) == doctest::Approx(-1.0).epsilon(1e-15));
  CHECK(es.eigenvalues(1) == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("Jacobi eigenpairs satisfy H v = lambda v and orthonormality") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 500; ++trial) {
    const int n = 2 + trial % 4;
    const RealMatrix h = oracle::random_symmetric(rng, n);
    const auto es = jacobi_eigen(h);
    const double scale = spectral_scale(h);
    for (int k = 0; k < n; ++k) {
      const RealVector r = h * es.eigenvectors.col(k) - es.eigenvalues(k) * es.eigenvectors.col(k);
      CHECK(r.norm() <= 1e-10 * scale);
    }
    const RealMatrix gram = es.eigenvectors.transpose() * es.eigenvectors;
    CHECK((gram - RealMatrix::Identity(n, n)).cwiseAbs().maxCoeff() < 1e-12);
    for (int k = 1; k < n; ++k) CHECK(es.eigenvalues(k - 1) <= es.eigenvalues(k));
  }
}

TEST_CASE("Jacobi eigenvalues agree with a characteristic-polynomial scan") {
  const SystemConfig cfg = find_scenario("fig2c").config.cfg;
  for (double t : {-6.0, -1.0, 0.0, 2.0, 7.0}) {
    const RealMatrix h = build_hamiltonian(cfg, t);
    const auto roots = oracle::eigenvalues_by_scan(h);
    const auto es = jacobi_eigen(h);
    REQUIRE(roots.size() == 4);
    for (int k = 0; k < 4; ++k) CHECK(es.eigenvalues(k) == doctest::Approx(roots[k]).epsilon(1e-9).scale(1.0));
  }
}

TEST_CASE("Jacobi agrees with Eigen's self-adjoint solver") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    const RealMatrix h = oracle::random_symmetric(rng, 5);
    const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> ref(h);
    const auto es = jacobi_eigen(h);
    for (int k = 0; k < 5; ++k)
      CHECK(es.eigenvalues(k) == doctest::Approx(ref.eigenvalues()(k)).epsilon(1e-11).scale(1.0));
  }
}

TEST_CASE("degenerate spectra are handled") {
  const RealMatrix h = RealMatrix::Identity(5, 5) * 2.0;
  const auto es = jacobi_eigen(h);
  for (int k = 0; k < 5; ++k) CHECK(es.eigenvalues(k) == 2.0);
}

TEST_CASE("asymmetric input is a contract violation") {
  RealMatrix h = RealMatrix::Zero(3, 3);
  h(0, 1) = 1.0;
  CHECK_THROWS_AS(jacobi_eigen(h), ContractViolation);
  CHECK_THROWS_AS(jacobi_eigen(RealMatrix::Zero(2, 3)), ContractViolation);
}

TEST_CASE("fix_sign makes the first significant component positive") {
  RealVector v(3);
  v << 1e-16, -0.6, 0.8;
  fix_sign(v);
  CHECK(v(1) == 0.6);
  CHECK(v(2) == -0.8);
  CHECK(v(0) == -1e-16);
}
