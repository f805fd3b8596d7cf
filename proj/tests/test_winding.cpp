#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nhchain/winding.hpp"

#include <cmath>

using namespace nhchain;

namespace {
const ModelParams kPhaseI{1.0, 3.5, 2.5, 1.0, 0.0, 3};
const ModelParams kPhaseIII{1.0, 1.2, 1.6, 0.6, 0.0, 3};
const ModelParams kPhaseIV{1.0, 1.2, 1.6, 1.0, 0.0, 3};
}  // namespace

TEST_CASE("off-diagonal roots at the reference point") {
  const auto [za, zb] = offdiag_roots(kPhaseI);
  CHECK(std::abs(za[0] - cplx(-0.313859338365493)) < 1e-12);
  CHECK(std::abs(za[1] - cplx(-3.186140661634507)) < 1e-12);
  CHECK(std::abs(zb[0] - cplx(-0.5)) < 1e-12);
  CHECK(std::abs(zb[1] - cplx(-2.0)) < 1e-12);
  CHECK_THROWS_AS(offdiag_roots(ModelParams{1.0, 1.0, 1.0, 0.0, 0.0, 3}), DegenerateModelError);
}

TEST_CASE("winding numbers inside and outside the root annulus") {
  // between max|za| = 3.186 and min|zb| = 0.5 the factors wind oppositely
  CHECK(winding_number(Factor::a, kPhaseI, 1.0) == 1 - 2);
  CHECK(winding_number(Factor::b, kPhaseI, 1.0) == 1);
  // outside all roots: h_a has both zeros in, h_b both zeros in
  CHECK(winding_number(Factor::a, kPhaseI, 10.0) == 0);
  CHECK(winding_number(Factor::b, kPhaseI, 10.0) == 2);
  // contour through a root is rejected
  CHECK_THROWS_AS(winding_number(Factor::b, kPhaseI, 0.5), ContourOnRootError);
  CHECK_THROWS_AS(winding_number(Factor::a, kPhaseI, -1.0), std::invalid_argument);
}

TEST_CASE("topological criterion and witness radius") {
  const WindingReport yes = topological_criterion(kPhaseI);
  CHECK(yes.topological);
  REQUIRE(yes.witness_radius.has_value());
  CHECK(winding_number(Factor::a, kPhaseI, *yes.witness_radius) *
            winding_number(Factor::b, kPhaseI, *yes.witness_radius) <
        0);

  const WindingReport no = topological_criterion(kPhaseIII);
  CHECK_FALSE(no.topological);
  CHECK_FALSE(no.witness_radius.has_value());

  // t0 = t2 with conjugate-pair roots: margin is structurally zero, not a
  // flagged boundary
  const WindingReport pinned = topological_criterion(kPhaseIV);
  CHECK_FALSE(pinned.topological);
  CHECK_FALSE(pinned.boundary_degenerate);
}

TEST_CASE("criterion margin limits with vanishing t0 or t2") {
  // t2 = 0: h_a zeros {0, -t1R/t0}, h_b zero {-t0/t1L}
  const ModelParams p{1.0, 1.2, 1.6, 0.0, 0.0, 3};
  CHECK(criterion_margin(p) == doctest::Approx(1.2 - 0.625).epsilon(1e-12));
  CHECK(topological_radius_scan(p));
  const ModelParams q{1.0, 1.2, 1.6, 1.0, 0.0, 3};
  CHECK_FALSE(topological_radius_scan(q));
}

TEST_CASE("transition along t2 hits the analytic value") {
  const ModelParams base{1.0, 1.2, 1.6, 0.5, 0.0, 3};
  const double t = find_topological_transition(base, "t2", 0.0, 0.8);
  CHECK(std::abs(t - 0.33985834473852207) < 2e-6);
  CHECK_THROWS_AS(find_topological_transition(base, "t2", 0.5, 0.8), NoBracketError);
  CHECK_THROWS_AS(find_topological_transition(base, "bogus", 0.0, 0.8), std::invalid_argument);
}
