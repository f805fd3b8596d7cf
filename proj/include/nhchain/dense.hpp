#pragma once
// Dense non-symmetric complex eigensolver / linear solver wrappers used as
// the numerical oracle by the rest of the library.

#include "nhchain/model.hpp"

#include <vector>

namespace nhchain {

struct EigenDecomposition {
  Vector eigenvalues;          // sorted by (Re, Im) ascending
  Matrix right_eigenvectors;   // unit columns, phase-fixed, aligned with eigenvalues
  double max_residual = 0.0;   // max_i ||H v_i - lambda_i v_i||_2
  bool defective = false;      // eigenvector basis numerically rank-deficient
};

struct SingularMatrixError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Full eigendecomposition; residual contract: max_residual <= 1e-8 * ||M||_F
// (violations set the defective flag instead of being hidden).
EigenDecomposition eig(const Matrix& M);

// Eigenvalues only, sorted by (Re, Im).
Vector eigvals(const Matrix& M);

// Partial-pivot LU solve; throws SingularMatrixError when a pivot magnitude
// underflows 1e-14 * ||M||_F.
Matrix solve(const Matrix& M, const Matrix& B);

// Per-cell maxima of |psi| for a 2N-site state in (A,B) cell-major order.
std::vector<double> cell_maxima(const Vector& psi);

// Least-squares slope of ln(amplitude) vs cell index over the interior
// cells 3..N-2 (1-based).  Input is one nonnegative amplitude per cell.
double fit_decay_rate(const std::vector<double>& amplitudes);

// Roots of a polynomial c[0] + c[1] x + ... + c[n] x^n via the companion
// matrix, trailing zero leading coefficients stripped.
std::vector<cplx> poly_roots(const std::vector<cplx>& coeffs);

}  // namespace nhchain
