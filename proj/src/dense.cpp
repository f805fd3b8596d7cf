#include "nhchain/dense.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <numeric>

namespace nhchain {

namespace {

void sort_pairs(Vector& vals, Matrix* vecs) {
  const int n = static_cast<int>(vals.size());
  std::vector<int> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](int i, int j) {
    if (vals(i).real() != vals(j).real()) return vals(i).real() < vals(j).real();
    return vals(i).imag() < vals(j).imag();
  });
  Vector sv(n);
  Matrix svec;
  if (vecs) svec.resize(vecs->rows(), n);
  for (int k = 0; k < n; ++k) {
    sv(k) = vals(idx[k]);
    if (vecs) svec.col(k) = vecs->col(idx[k]);
  }
  vals = sv;
  if (vecs) *vecs = svec;
}

void phase_fix(Matrix& V) {
  for (int j = 0; j < V.cols(); ++j) {
    V.col(j).normalize();
    int imax = 0;
    V.col(j).cwiseAbs().maxCoeff(&imax);
    const cplx top = V(imax, j);
    if (std::abs(top) > 0) V.col(j) *= std::conj(top) / std::abs(top);
  }
}

}  // namespace

EigenDecomposition eig(const Matrix& M) {
  if (M.rows() != M.cols() || M.rows() < 1)
    throw std::invalid_argument("eig: square matrix required");
  if (!M.allFinite()) throw std::invalid_argument("eig: non-finite entries");

  Eigen::ComplexEigenSolver<Matrix> es(M, /*computeEigenvectors=*/true);
  if (es.info() != Eigen::Success)
    throw std::runtime_error("eig: QR iteration failed to converge");

  EigenDecomposition d;
  d.eigenvalues = es.eigenvalues();
  d.right_eigenvectors = es.eigenvectors();
  sort_pairs(d.eigenvalues, &d.right_eigenvectors);
  phase_fix(d.right_eigenvectors);

  const double scale = M.norm();
  d.max_residual = 0.0;
  for (int j = 0; j < M.cols(); ++j) {
    const double r =
        (M * d.right_eigenvectors.col(j) - d.eigenvalues(j) * d.right_eigenvectors.col(j)).norm();
    d.max_residual = std::max(d.max_residual, r);
  }
  if (d.max_residual > 1e-8 * std::max(scale, 1e-300)) d.defective = true;

  // rank check of the eigenvector basis (Jordan blocks collapse columns)
  Eigen::JacobiSVD<Matrix> svd(d.right_eigenvectors);
  if (svd.singularValues()(svd.singularValues().size() - 1) < 1e-10) d.defective = true;
  return d;
}

Vector eigvals(const Matrix& M) {
  if (M.rows() != M.cols() || M.rows() < 1)
    throw std::invalid_argument("eigvals: square matrix required");
  Eigen::ComplexEigenSolver<Matrix> es(M, false);
  if (es.info() != Eigen::Success)
    throw std::runtime_error("eigvals: QR iteration failed to converge");
  Vector v = es.eigenvalues();
  sort_pairs(v, nullptr);
  return v;
}

Matrix solve(const Matrix& M, const Matrix& B) {
  if (M.rows() != M.cols()) throw std::invalid_argument("solve: square matrix required");
  if (B.rows() != M.rows()) throw std::invalid_argument("solve: row count mismatch");
  Eigen::PartialPivLU<Matrix> lu(M);
  const double floor = 1e-14 * M.norm();
  const Matrix& U = lu.matrixLU();
  for (int i = 0; i < U.rows(); ++i)
    if (std::abs(U(i, i)) < floor)
      throw SingularMatrixError("solve: pivot underflow, matrix numerically singular");
  return lu.solve(B);
}

std::vector<double> cell_maxima(const Vector& psi) {
  if (psi.size() % 2 != 0) throw std::invalid_argument("cell_maxima: odd-length state");
  std::vector<double> out(psi.size() / 2);
  for (int n = 0; n < static_cast<int>(out.size()); ++n)
    out[n] = std::max(std::abs(psi(2 * n)), std::abs(psi(2 * n + 1)));
  return out;
}

double fit_decay_rate(const std::vector<double>& amplitudes) {
  const int N = static_cast<int>(amplitudes.size());
  if (N < 8) throw std::invalid_argument("fit_decay_rate: need at least 8 cells");
  int support = 0;
  for (double a : amplitudes)
    if (a > 1e-13) ++support;
  if (support < 6) throw std::invalid_argument("fit_decay_rate: insufficient support above floor");

  // interior cells 3..N-2 (1-based)
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  int m = 0;
  for (int n = 3; n <= N - 2; ++n) {
    const double a = amplitudes[n - 1];
    if (a <= 1e-13) continue;
    const double x = n, y = std::log(a);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
    ++m;
  }
  if (m < 2) throw std::invalid_argument("fit_decay_rate: insufficient interior support");
  return (m * sxy - sx * sy) / (m * sxx - sx * sx);
}

std::vector<cplx> poly_roots(const std::vector<cplx>& coeffs) {
  std::vector<cplx> c = coeffs;
  while (!c.empty() && std::abs(c.back()) == 0.0) c.pop_back();
  if (c.size() < 2) return {};
  const int n = static_cast<int>(c.size()) - 1;
  Matrix comp = Matrix::Zero(n, n);
  for (int i = 1; i < n; ++i) comp(i, i - 1) = 1.0;
  for (int i = 0; i < n; ++i) comp(i, n - 1) = -c[i] / c[n];
  Eigen::ComplexEigenSolver<Matrix> es(comp, false);
  std::vector<cplx> roots(es.eigenvalues().data(), es.eigenvalues().data() + n);
  return roots;
}

}  // namespace nhchain
