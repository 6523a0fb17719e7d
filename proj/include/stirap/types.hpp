#pragma once

#include <Eigen/Core>
#include <complex>

namespace stirap {

/// Largest level count handled (the threefold manifold system).
inline constexpr int kMaxLevels = 5;

using complex = std::complex<double>;

// Dynamic size with a fixed upper bound: no heap traffic inside the stepper.
using RealMatrix = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::ColMajor,
                                 kMaxLevels, kMaxLevels>;
using RealVector = Eigen::Matrix<double, Eigen::Dynamic, 1, Eigen::ColMajor, kMaxLevels, 1>;
using ComplexVector = Eigen::Matrix<complex, Eigen::Dynamic, 1, Eigen::ColMajor, kMaxLevels, 1>;

/// Probability amplitudes C_1..C_N.
using StateVector = ComplexVector;

/// Which of the two null-eigenvalue detunings a dark state belongs to.
enum class Branch { plus, minus };

inline double branch_sign(Branch b) { return b == Branch::plus ? 1.0 : -1.0; }

}  // namespace stirap
