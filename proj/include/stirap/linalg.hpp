#pragma once

#include "stirap/types.hpp"

namespace stirap {

struct SymmetricEigen {
  RealVector eigenvalues;   // ascending
  RealMatrix eigenvectors;  // column k belongs to eigenvalues(k)
  int sweeps = 0;
};

/// Cyclic Jacobi rotations on a real symmetric matrix. Iterates until the
/// off-diagonal Frobenius norm drops below 1e-12; throws NumericalError if
/// that takes more than 100 sweeps and ContractViolation on asymmetric input.
SymmetricEigen jacobi_eigen(const RealMatrix& h);

/// Largest |eigenvalue| magnitude bound used for relative tolerances.
double spectral_scale(const RealMatrix& h);

/// Flip the sign so the first component with |v_i| > 1e-14 is positive.
void fix_sign(RealVector& v);

}  // namespace stirap
