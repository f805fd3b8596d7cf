#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nhchain/dense.hpp"
#include "nhchain/greens.hpp"

#include <cmath>

using namespace nhchain;

TEST_CASE("principal layer blocks carry every coupling exactly once") {
  const ModelParams p{1.0, 1.2, 1.6, 0.6, 0.0, 8};
  const PrincipalLayer L = build_principal_layer(p);
  // H00 equals the leading 4x4 corner of the OBC matrix; H01/H10 the
  // adjacent off-diagonal blocks
  const Matrix H = build_obc_hamiltonian(p);
  CHECK((Matrix(L.H00) - H.block(0, 0, 4, 4)).norm() < 1e-15);
  CHECK((Matrix(L.H01) - H.block(0, 4, 4, 4)).norm() < 1e-15);
  CHECK((Matrix(L.H10) - H.block(4, 0, 4, 4)).norm() < 1e-15);
}

TEST_CASE("surface greens converges fast and matches a long finite chain off-band") {
  const ModelParams p{1.0, 1.2, 1.6, 0.6, 0.0, 400};
  const PrincipalLayer L = build_principal_layer(p);
  const cplx E = 6.0;  // far outside the spectrum: boundary effects die instantly
  const double eta = 1e-3;
  const GreensResult g = surface_greens(L, E, eta);
  CHECK(g.iterations <= 10);

  const Matrix H = build_obc_hamiltonian(p);
  const Matrix G =
      solve((E + cplx(0, eta)) * Matrix::Identity(2 * p.N, 2 * p.N) - H,
            Matrix::Identity(2 * p.N, 2 * p.N));
  CHECK((Matrix(g.G_left) - G.block(0, 0, 4, 4)).norm() / G.block(0, 0, 4, 4).norm() < 1e-8);
}

TEST_CASE("right surface matches the far corner of a long finite chain off-band") {
  const ModelParams p{1.0, 1.2, 1.6, 0.6, 0.0, 400};
  const PrincipalLayer L = build_principal_layer(p);
  const cplx E = 6.0;
  const double eta = 1e-3;
  const GreensResult g = surface_greens(L, E, eta);
  const Matrix H = build_obc_hamiltonian(p);
  const int M = 2 * p.N;
  const Matrix G = solve((E + cplx(0, eta)) * Matrix::Identity(M, M) - H,
                         Matrix::Identity(M, M));
  const Matrix corner = G.block(M - 4, M - 4, 4, 4);
  CHECK((Matrix(g.G_right) - corner).norm() / corner.norm() < 1e-8);
}

TEST_CASE("spectral functions are finite in the skin regime (no overflow)") {
  const ModelParams p{1.0, 3.5, 2.5, 1.3, 0.0, 8};
  const auto [As, Ab] = spectral_functions(p, 0.0, 1e-3);
  CHECK(std::isfinite(As));
  CHECK(std::isfinite(Ab));
}

TEST_CASE("transition scan: zero-energy surface weight collapses past 0.34") {
  ModelParams base{1.0, 1.2, 1.6, 0.0, 0.0, 8};
  std::vector<double> grid;
  for (int i = 0; i <= 80; ++i) grid.push_back(0.01 * i);
  const auto rows = transition_scan(base, grid, 1e-3);
  REQUIRE(rows.size() == 81);
  for (const auto& r : rows) CHECK(r.ok);
  // topological side carries a zero-mode peak orders of magnitude above the
  // trivial side
  double before = 0.0, after = 0.0;
  for (const auto& r : rows) {
    if (r.t2 <= 0.30) before = std::max(before, r.A_surface);
    if (r.t2 >= 0.40) after = std::max(after, r.A_surface);
  }
  CHECK(before > 100.0 * after);
}
