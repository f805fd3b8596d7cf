#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nhchain/dense.hpp"
#include "nhchain/phase.hpp"

#include <cmath>
#include <set>

using namespace nhchain;

TEST_CASE("the four reference points classify as I, II, III, IV") {
  CHECK(classify(ModelParams{1.0, 3.5, 2.5, 1.0, 0.0, 3}).phase == Phase::I);
  CHECK(classify(ModelParams{1.0, 3.5, 2.5, 1.3, 0.0, 3}).phase == Phase::II);
  const PhasePoint p3 = classify(ModelParams{1.0, 1.2, 1.6, 0.6, 0.0, 3});
  CHECK(p3.phase == Phase::III);
  CHECK(p3.skin_side == SkinSide::left);
  CHECK(classify(ModelParams{1.0, 1.2, 1.6, 1.0, 0.0, 3}).phase == Phase::IV);
}

TEST_CASE("label round-trips the (topological, skin) pair") {
  for (const ModelParams& p : {ModelParams{1.0, 3.5, 2.5, 1.0, 0.0, 3},
                               ModelParams{1.0, 3.5, 2.5, 1.3, 0.0, 3},
                               ModelParams{1.0, 1.2, 1.6, 0.6, 0.0, 3},
                               ModelParams{1.0, 1.2, 1.6, 1.0, 0.0, 3}}) {
    const PhasePoint pt = classify(p);
    REQUIRE(pt.flag.empty());
    const Phase want = pt.topological ? (pt.skin ? Phase::II : Phase::I)
                                      : (pt.skin ? Phase::III : Phase::IV);
    CHECK(pt.phase == want);
  }
}

TEST_CASE("default two-axis sweep shows all four phases; t0 = t2 line stays pure") {
  ModelParams base{1.0, 1.0, 1.0, 1.0, 0.0, 3};
  const AxisSpec a1{"t1L", 0.5, 3.5, 13};
  const AxisSpec a2{"t2", 0.2, 1.8, 9};
  const LinearTie tie{"t1R", "t1L", 0.5};
  const auto grid = diagram(base, a1, a2, tie);
  REQUIRE(grid.size() == 13 * 9);
  std::set<Phase> seen;
  for (const auto& pt : grid) {
    if (pt.flag.empty()) seen.insert(pt.phase);
    if (std::abs(pt.params.t2 - 1.0) < 1e-12 && pt.flag.empty()) {
      // t0 = t2 slice: no skin phases
      CHECK((pt.phase == Phase::I || pt.phase == Phase::IV));
    }
  }
  CHECK(seen.count(Phase::I));
  CHECK(seen.count(Phase::II));
  CHECK(seen.count(Phase::III));
  CHECK(seen.count(Phase::IV));
}

TEST_CASE("hermitian slice: no skin labels and a real dense spectrum") {
  ModelParams base{1.0, 1.0, 1.0, 0.4, 0.0, 10};
  const AxisSpec a1{"t1L", 0.6, 2.6, 5};
  const AxisSpec a2{"eps0", -0.5, 0.5, 3};
  const LinearTie tie{"t1R", "t1L", 0.0};
  for (const auto& pt : diagram(base, a1, a2, tie)) {
    if (!pt.flag.empty()) continue;
    CHECK((pt.phase == Phase::I || pt.phase == Phase::IV));
    const Vector ev = eigvals(build_obc_hamiltonian(pt.params));
    CHECK(ev.imag().cwiseAbs().maxCoeff() < 1e-10);
  }
}

TEST_CASE("disk counting agrees with the dense oracle at small N") {
  ModelParams p{1.0, 1.2, 1.6, 0.2, 0.0, 40};
  for (double t2 : {0.1, 0.25, 0.45, 0.6}) {
    p.t2 = t2;
    const Vector ev = eigvals(build_obc_hamiltonian(p));
    int dense_count = 0;
    for (int i = 0; i < ev.size(); ++i)
      if (std::abs(ev(i)) < 1e-2) ++dense_count;
    CHECK(count_eigs_in_disk(p, 0.0, 1e-2) == dense_count);
  }
  ModelParams odd = p;
  odd.N = 7;
  CHECK_THROWS_AS(count_eigs_in_disk(odd, 0.0, 1e-2), std::invalid_argument);
}

TEST_CASE("finite-size report: N = 40 window and N = 6 strong deviation") {
  ModelParams base{1.0, 1.2, 1.6, 0.5, 0.0, 3};
  const auto rows = finite_size_report(base, {6, 40});
  REQUIRE(rows.size() == 2);
  CHECK(rows[0].analytic == doctest::Approx(0.33985834473852207).epsilon(1e-4));
  if (rows[0].transition) {
    // tiny chains misplace the transition by far more than the grid step
    CHECK(std::abs(*rows[0].transition - rows[0].analytic) > 0.02);
  }
  REQUIRE(rows[1].transition.has_value());
  CHECK(*rows[1].transition >= 0.29);
  CHECK(*rows[1].transition <= 0.33);
  CHECK(rows[1].drift < (rows[0].transition ? rows[0].drift : 1e300));
}
