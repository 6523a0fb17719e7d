// Test-only reference computations. Nothing here calls into the code paths
// it is used to check: the determinant scan knows nothing about Jacobi, the
// Rabi solution is closed form, and derivatives are central differences.
#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <numeric>
#include <random>
#include <vector>

#include "stirap/types.hpp"

namespace oracle {

/// Exact two-level Rabi solution for H = [[0, 1], [1, 0]] starting in |1>.
inline std::complex<double> rabi_c1(double t) { return {std::cos(t), 0.0}; }
inline std::complex<double> rabi_c2(double t) { return {0.0, -std::sin(t)}; }

/// Determinant by cofactor expansion along the first row (N <= 5).
inline double determinant(const std::vector<std::vector<double>>& a) {
  const std::size_t n = a.size();
  if (n == 1) return a[0][0];
  if (n == 2) return a[0][0] * a[1][1] - a[0][1] * a[1][0];
  double det = 0.0;
  for (std::size_t col = 0; col < n; ++col) {
    if (a[0][col] == 0.0) continue;
    std::vector<std::vector<double>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<double> row;
      for (std::size_t c = 0; c < n; ++c)
        if (c != col) row.push_back(a[r][c]);
      minor.push_back(row);
    }
    det += (col % 2 == 0 ? 1.0 : -1.0) * a[0][col] * determinant(minor);
  }
  return det;
}

inline double char_poly(const stirap::RealMatrix& h, double lambda) {
  const auto n = static_cast<std::size_t>(h.rows());
  std::vector<std::vector<double>> a(n, std::vector<double>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      a[i][j] = h(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) - (i == j ? lambda : 0.0);
  return determinant(a);
}

/// Roots of det(H - lambda I) found by scanning [-R, R] (Gershgorin bound)
/// for sign changes and bisecting. Assumes simple, separated roots.
inline std::vector<double> eigenvalues_by_scan(const stirap::RealMatrix& h, int samples = 200000) {
  double bound = 0.0;
  for (Eigen::Index i = 0; i < h.rows(); ++i) bound = std::max(bound, h.row(i).cwiseAbs().sum());
  bound += 1.0;
  std::vector<double> roots;
  double prev_x = -bound;
  double prev_f = char_poly(h, prev_x);
  for (int k = 1; k <= samples; ++k) {
    const double x = -bound + 2.0 * bound * k / samples;
    const double f = char_poly(h, x);
    if (f == 0.0) {
      roots.push_back(x);
    } else if ((prev_f < 0.0) != (f < 0.0) && prev_f != 0.0) {
      double lo = prev_x, hi = x, flo = prev_f;
      for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        const double fm = char_poly(h, mid);
        if ((fm < 0.0) == (flo < 0.0)) {
          lo = mid;
          flo = fm;
        } else {
          hi = mid;
        }
      }
      roots.push_back(0.5 * (lo + hi));
    }
    prev_x = x;
    prev_f = f;
  }
  return roots;
}

template <typename F>
double central_difference(F&& f, double t, double h = 1e-5) {
  return (f(t + h) - f(t - h)) / (2.0 * h);
}

/// Random symmetric matrix with entries in [-scale, scale].
inline stirap::RealMatrix random_symmetric(std::mt19937_64& rng, int n, double scale = 5.0) {
  std::uniform_real_distribution<double> u(-scale, scale);
  stirap::RealMatrix m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) m(i, j) = m(j, i) = u(rng);
  return m;
}

/// Compares two vectors up to a global sign; returns the max component error.
inline double max_error_up_to_sign(const stirap::RealVector& a, const stirap::RealVector& b) {
  return std::min((a - b).cwiseAbs().maxCoeff(), (a + b).cwiseAbs().maxCoeff());
}

}  // namespace oracle
