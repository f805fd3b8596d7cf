#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nhchain/dense.hpp"
#include "nhchain/model.hpp"

#include <cmath>

using namespace nhchain;

TEST_CASE("obc hamiltonian entries and shape") {
  const ModelParams p{1.0, 3.5, 2.5, 1.3, 0.25, 4};
  const Matrix H = build_obc_hamiltonian(p);
  REQUIRE(H.rows() == 8);
  REQUIRE(H.cols() == 8);
  for (int i = 0; i < 8; ++i) CHECK(H(i, i) == cplx(0.25));
  // cell n: A = 2(n-1), B = 2(n-1)+1 (0-based)
  CHECK(H(0, 1) == cplx(1.0));   // t0 within cell 1
  CHECK(H(1, 0) == cplx(1.0));
  CHECK(H(2, 1) == cplx(3.5));   // t1R: (n+1)A <- nB
  CHECK(H(1, 2) == cplx(2.5));   // t1L: nB <- (n+1)A
  CHECK(H(4, 1) == cplx(1.3));   // t2: (n+2)A <-> nB
  CHECK(H(1, 4) == cplx(1.3));
  CHECK(H(0, 3) == cplx(0.0));   // no direct 1A-2B coupling
  CHECK(H(6, 1) == cplx(0.0));   // range-2 only
}

TEST_CASE("reciprocal hopping gives a hermitian matrix and a real spectrum") {
  const ModelParams p{0.7, 1.4, 1.4, 0.9, 0.1, 10};
  const Matrix H = build_obc_hamiltonian(p);
  CHECK((H - H.adjoint()).norm() == doctest::Approx(0.0).epsilon(1e-14));
  const Vector ev = eigvals(H);
  CHECK(ev.imag().cwiseAbs().maxCoeff() < 1e-10);
}

TEST_CASE("ring spectrum matches the bloch dispersion on the momentum grid") {
  const ModelParams p{1.0, 1.7, 0.8, 0.4, 0.0, 8};
  const Vector ev = eigvals(build_ring_hamiltonian(p));
  std::vector<double> ks;
  for (int m = 0; m < p.N; ++m) ks.push_back(2.0 * M_PI * m / p.N);
  const auto branches = pbc_spectrum(p, ks);
  for (const auto& [e1, e2] : branches) {
    double d1 = 1e300, d2 = 1e300;
    for (int i = 0; i < ev.size(); ++i) {
      d1 = std::min(d1, std::abs(ev(i) - e1));
      d2 = std::min(d2, std::abs(ev(i) - e2));
    }
    CHECK(d1 < 1e-9);
    CHECK(d2 < 1e-9);
  }
}

TEST_CASE("bloch hamiltonian off-diagonals are the h_a / h_b factors") {
  const ModelParams p{1.1, 2.3, 0.6, 0.9, 0.3, 3};
  const BlochFactors f = bloch_factors(p);
  for (double k : {0.3, 1.1, 2.9}) {
    const auto h = bloch_hamiltonian(p, k);
    const cplx z = std::polar(1.0, k);
    CHECK(std::abs(h(0, 1) - f.ha(z)) < 1e-14);
    CHECK(std::abs(h(1, 0) - f.hb(z)) < 1e-14);
    CHECK(h(0, 0) == cplx(0.3));
    CHECK(h(1, 1) == cplx(0.3));
  }
}

TEST_CASE("sublattice symmetry holds exactly when eps0 = 0") {
  CHECK(check_sls(ModelParams{1.0, 1.2, 1.6, 0.6, 0.0, 3}));
  CHECK_FALSE(check_sls(ModelParams{1.0, 1.2, 1.6, 0.6, 0.2, 3}));
}

TEST_CASE("obc assembly rejects undersized chains") {
  ModelParams p;
  p.N = 2;
  CHECK_THROWS_AS(build_obc_hamiltonian(p), std::invalid_argument);
}
