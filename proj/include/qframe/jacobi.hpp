#pragma once

#include <vector>

#include "qframe/qmatrix.hpp"

namespace qframe {

struct JacobiOptions {
  int max_sweeps = 64;
  /// Stop once the off-diagonal Frobenius norm falls below this fraction of the total.
  double relative_tolerance = 1e-15;
};

struct ComplexEigen {
  std::vector<double> values;  ///< ascending
  ComplexMatrix vectors;       ///< column k pairs with values[k]
};

/// Cyclic-by-row Jacobi for a complex Hermitian matrix. Sweep order and pivot
/// rule are fixed, so results are reproducible for a given kernel table.
/// The input is Hermitian-symmetrized before iterating; callers validate
/// Hermiticity themselves. Throws ErrorCode::NumericalFailure on non-convergence.
ComplexEigen jacobi_eigen(const ComplexMatrix& a, const JacobiOptions& options = {});

}  // namespace qframe
