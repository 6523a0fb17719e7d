#include "stirap/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include "stirap/error.hpp"

namespace stirap {

namespace {

constexpr double kOffNormTol = 1e-12;
constexpr int kMaxSweeps = 100;

double off_norm(const RealMatrix& a) {
  double s = 0.0;
  for (Eigen::Index j = 0; j < a.cols(); ++j)
    for (Eigen::Index i = 0; i < a.rows(); ++i)
      if (i != j) s += a(i, j) * a(i, j);
  return std::sqrt(s);
}

// Zero a(p,q) with a plane rotation applied from both sides.
void rotate(RealMatrix& a, RealMatrix& v, Eigen::Index p, Eigen::Index q) {
  const double apq = a(p, q);
  if (apq == 0.0) return;
  const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
  const double t = std::copysign(1.0, theta) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
  const double c = 1.0 / std::sqrt(t * t + 1.0);
  const double s = t * c;
  const Eigen::Index n = a.rows();
  for (Eigen::Index k = 0; k < n; ++k) {
    const double akp = a(k, p);
    const double akq = a(k, q);
    a(k, p) = c * akp - s * akq;
    a(k, q) = s * akp + c * akq;
  }
  for (Eigen::Index k = 0; k < n; ++k) {
    const double apk = a(p, k);
    const double aqk = a(q, k);
    a(p, k) = c * apk - s * aqk;
    a(q, k) = s * apk + c * aqk;
  }
  a(p, q) = 0.0;
  a(q, p) = 0.0;
  for (Eigen::Index k = 0; k < n; ++k) {
    const double vkp = v(k, p);
    const double vkq = v(k, q);
    v(k, p) = c * vkp - s * vkq;
    v(k, q) = s * vkp + c * vkq;
  }
}

}  // namespace

SymmetricEigen jacobi_eigen(const RealMatrix& h) {
  if (h.rows() != h.cols()) throw ContractViolation("jacobi_eigen: matrix must be square");
  if (h != h.transpose()) throw ContractViolation("jacobi_eigen: matrix must be symmetric");
  const Eigen::Index n = h.rows();

  RealMatrix a = h;
  RealMatrix v = RealMatrix::Identity(n, n);
  int sweep = 0;
  while (off_norm(a) >= kOffNormTol) {
    if (sweep == kMaxSweeps) {
      throw NumericalError("jacobi_eigen: no convergence in 100 sweeps");
    }
    for (Eigen::Index p = 0; p + 1 < n; ++p)
      for (Eigen::Index q = p + 1; q < n; ++q) rotate(a, v, p, q);
    ++sweep;
  }

  std::vector<Eigen::Index> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](Eigen::Index i, Eigen::Index j) { return a(i, i) < a(j, j); });

  SymmetricEigen out;
  out.eigenvalues.resize(n);
  out.eigenvectors.resize(n, n);
  for (Eigen::Index k = 0; k < n; ++k) {
    const Eigen::Index src = order[static_cast<std::size_t>(k)];
    out.eigenvalues(k) = a(src, src);
    out.eigenvectors.col(k) = v.col(src);
  }
  out.sweeps = sweep;
  return out;
}

double spectral_scale(const RealMatrix& h) {
  // Frobenius norm bounds the spectral radius from above.
  return h.norm();
}

void fix_sign(RealVector& v) {
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (std::abs(v(i)) > 1e-14) {
      if (v(i) < 0.0) v = -v;
      return;
    }
  }
}

}  // namespace stirap
