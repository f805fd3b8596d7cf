#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nhchain/dense.hpp"
#include "nhchain/model.hpp"

#include <algorithm>
#include <cmath>

using namespace nhchain;

TEST_CASE("eig: sorted eigenvalues, unit phase-fixed vectors, tight residual") {
  const ModelParams p{1.0, 1.2, 1.6, 0.6, 0.0, 20};
  const Matrix H = build_obc_hamiltonian(p);
  const EigenDecomposition dec = eig(H);
  REQUIRE(dec.eigenvalues.size() == 40);
  CHECK_FALSE(dec.defective);
  CHECK(dec.max_residual <= 1e-8 * H.norm());
  for (int i = 1; i < 40; ++i) {
    const cplx a = dec.eigenvalues(i - 1), b = dec.eigenvalues(i);
    CHECK((a.real() < b.real() || (a.real() == b.real() && a.imag() <= b.imag())));
  }
  for (int i = 0; i < 40; ++i) {
    CHECK(dec.right_eigenvectors.col(i).norm() == doctest::Approx(1.0).epsilon(1e-12));
    int arg;
    dec.right_eigenvectors.col(i).cwiseAbs().maxCoeff(&arg);
    const cplx top = dec.right_eigenvectors(arg, i);
    CHECK(top.real() > 0.0);
    CHECK(std::abs(top.imag()) < 1e-12 * std::abs(top));
  }
}

TEST_CASE("solve: LU result and singular rejection") {
  Matrix M(2, 2);
  M << cplx(2, 0), cplx(1, 1), cplx(0, -1), cplx(3, 0);
  Matrix b(2, 1);
  b << cplx(1, 0), cplx(0, 2);
  const Matrix x = solve(M, b);
  CHECK((M * x - b).norm() < 1e-13);

  Matrix S(2, 2);
  S << cplx(1, 0), cplx(2, 0), cplx(2, 0), cplx(4, 0);
  CHECK_THROWS_AS(solve(S, b), SingularMatrixError);
}

TEST_CASE("poly_roots: cubic with known roots, degenerate leading coefficients") {
  // (x-1)(x-2)(x-3) = -6 + 11x - 6x^2 + x^3
  auto r = poly_roots({cplx(-6), cplx(11), cplx(-6), cplx(1)});
  REQUIRE(r.size() == 3);
  std::sort(r.begin(), r.end(), [](cplx a, cplx b) { return a.real() < b.real(); });
  CHECK(std::abs(r[0] - 1.0) < 1e-10);
  CHECK(std::abs(r[1] - 2.0) < 1e-10);
  CHECK(std::abs(r[2] - 3.0) < 1e-10);

  // leading zero stripped: 2 + x + 0 x^2 has one root
  auto r1 = poly_roots({cplx(2), cplx(1), cplx(0)});
  REQUIRE(r1.size() == 1);
  CHECK(std::abs(r1[0] + 2.0) < 1e-12);
}

TEST_CASE("cell_maxima and fit_decay_rate recover a synthetic exponent") {
  const int N = 60;
  const double alpha = -0.23;
  Vector psi(2 * N);
  for (int n = 1; n <= N; ++n) {
    psi(2 * (n - 1)) = std::exp(alpha * n) * std::sin(0.9 * n);
    psi(2 * (n - 1) + 1) = 0.8 * std::exp(alpha * n) * std::cos(0.9 * n + 0.4);
  }
  const auto cm = cell_maxima(psi);
  REQUIRE((int)cm.size() == N);
  for (int n = 0; n < N; ++n)
    CHECK(cm[n] == doctest::Approx(std::max(std::abs(psi(2 * n)), std::abs(psi(2 * n + 1)))));
  // the oscillation perturbs individual cells; the fitted slope stays close
  CHECK(fit_decay_rate(cm) == doctest::Approx(alpha).epsilon(0.05));
}

TEST_CASE("fit_decay_rate is exact on a pure exponential") {
  std::vector<double> amp;
  for (int n = 1; n <= 40; ++n) amp.push_back(3.0 * std::exp(0.17 * n));
  CHECK(fit_decay_rate(amp) == doctest::Approx(0.17).epsilon(1e-10));
}
