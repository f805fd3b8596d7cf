#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nhchain/dense.hpp"
#include "nhchain/skin.hpp"

#include <algorithm>
#include <cmath>

using namespace nhchain;

namespace {
const ModelParams kPhaseII{1.0, 3.5, 2.5, 1.3, 0.0, 100};
const ModelParams kPhaseIII{1.0, 1.2, 1.6, 0.6, 0.0, 100};
}  // namespace

TEST_CASE("vieta coefficients at the reference points") {
  const VietaCoefficients w3 = vieta(kPhaseIII, 0.0);
  CHECK(w3.omega1 == doctest::Approx(-2.32 / 0.6).epsilon(1e-14));
  CHECK(w3.omega3 == doctest::Approx(-2.16 / 0.6).epsilon(1e-14));
  CHECK(w3.omega4 == 1.0);

  const VietaCoefficients w2 = vieta(kPhaseII, 0.0);
  CHECK(w2.omega1 == doctest::Approx(-7.05 / 1.3).epsilon(1e-14));
  CHECK(w2.omega3 == doctest::Approx(-6.75 / 1.3).epsilon(1e-14));
}

TEST_CASE("quartic roots satisfy the characteristic polynomial and pair up") {
  const cplx E = 1.7;
  const auto z = quartic_roots(kPhaseII, E);
  const BlochFactors f = bloch_factors(kPhaseII);
  for (const cplx& zi : z) {
    // (E - eps0)^2 = h_a h_b is the quartic, up to the t0 t2 z^2 scaling
    CHECK(std::abs(f.ha(zi) * f.hb(zi) - E * E) < 1e-9);
  }
  // product of all four roots is omega4 = 1
  CHECK(std::abs(z[0] * z[1] * z[2] * z[3] - 1.0) < 1e-10);
}

TEST_CASE("alpha(pi/2) matches the closed form at both reference points") {
  // tanh(alpha) = -(w1 - w3)/(w1 + w3) at theta = pi/2
  CHECK(alpha_from_theta(kPhaseIII, M_PI / 2) ==
        doctest::Approx(-0.0357294819910725).epsilon(1e-10));
  CHECK(alpha_from_theta(kPhaseII, M_PI / 2) ==
        doctest::Approx(-0.0217425559698694).epsilon(1e-10));
}

TEST_CASE("alpha vanishes identically on the t0 = t2 manifold") {
  const ModelParams p{1.3, 2.1, 0.7, 1.3, 0.0, 40};
  for (double th : {0.3, 1.1, M_PI / 2, 2.7}) {
    const auto cands = alpha_candidates(p, th);
    REQUIRE(!cands.empty());
    CHECK(cands.front() == 0.0);
  }
  CHECK(localization_profile(p, 64).max_abs_alpha < 1e-12);
}

TEST_CASE("energy reconstruction closes the alpha-theta relation") {
  const double th = 1.234;
  const double a = alpha_from_theta(kPhaseIII, th);
  CHECK(eq13_residual(kPhaseIII, th, a) < 1e-10);
  bool complex_flag = true;
  const cplx E = energy_from_mode(kPhaseIII, a, th, &complex_flag);
  CHECK_FALSE(complex_flag);
  CHECK(E.real() >= 0.0);
  // E must be a root of the quartic determinant chain: h_a h_b at z1 = e^{a+i th}
  const BlochFactors f = bloch_factors(kPhaseIII);
  const cplx z1 = std::exp(cplx(a, th));
  CHECK(std::abs(E * E - f.ha(z1) * f.hb(z1)) < 1e-10);
}

TEST_CASE("boundary determinant vanishes exactly at dense eigenvalues") {
  ModelParams p = kPhaseIII;
  p.N = 14;
  const Vector ev = eigvals(build_obc_hamiltonian(p));
  // pick a handful of eigenvalues away from eps0
  int checked = 0;
  for (int i = 0; i < ev.size() && checked < 5; ++i) {
    if (std::abs(ev(i)) < 0.2) continue;
    const double at = std::abs(boundary_determinant(p, p.N, ev(i)));
    const double off = std::abs(boundary_determinant(p, p.N, ev(i) + cplx(0.05, 0.0)));
    CHECK(at < 1e-8 * std::max(off, 1.0));
    ++checked;
  }
  CHECK(checked == 5);
}

TEST_CASE("exact eigenstate reproduces a dense eigenvector") {
  ModelParams p = kPhaseIII;
  p.N = 14;
  const Matrix H = build_obc_hamiltonian(p);
  const EigenDecomposition dec = eig(H);
  const cplx E = dec.eigenvalues(2);
  const Vector psi = exact_eigenstate(p, p.N, E);
  CHECK(psi.norm() == doctest::Approx(1.0).epsilon(1e-12));
  CHECK((H * psi - E * psi).norm() < 1e-9 * H.norm());
}

TEST_CASE("quantization at N = 100, phase II: counts, partners, residuals") {
  const QuantizeReport rep = quantize(kPhaseII);
  CHECK(rep.expected_count == 198);  // 2N minus the two zero modes
  CHECK(rep.found_count == 198);
  for (const SkinMode& m : rep.modes) {
    CHECK(m.state_residual <= 1e-8);
    CHECK(m.penetration_length == doctest::Approx(std::abs(1.0 / m.alpha)).epsilon(1e-12));
  }
  // SLS partners: energies come in +/- pairs
  for (const SkinMode& m : rep.modes) {
    double best = 1e300;
    for (const SkinMode& n : rep.modes) best = std::min(best, std::abs(m.energy + n.energy));
    CHECK(best < 1e-9);
  }
  // m indices are unique, within 1..200, and skip the two middle slots
  std::vector<int> ms;
  for (const SkinMode& m : rep.modes) ms.push_back(m.m);
  std::sort(ms.begin(), ms.end());
  CHECK(std::adjacent_find(ms.begin(), ms.end()) == ms.end());
  CHECK(ms.front() == 1);
  CHECK(ms.back() == 200);
}

TEST_CASE("small chains: quantize agrees with the dense oracle eigenvalue-by-eigenvalue") {
  ModelParams p{1.0, 1.2, 1.6, 0.6, 0.0, 6};
  const QuantizeReport rep = quantize(p);
  const Vector ev = eigvals(build_obc_hamiltonian(p));
  REQUIRE(rep.found_count == 12);
  std::vector<double> a, b;
  for (const SkinMode& m : rep.modes) a.push_back(m.energy.real());
  for (int i = 0; i < 12; ++i) b.push_back(ev(i).real());
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  for (int i = 0; i < 12; ++i) CHECK(std::abs(a[i] - b[i]) < 1e-8);
}

TEST_CASE("two-term ansatz tracks the exact state in the bulk at large N") {
  const QuantizeReport rep = quantize(kPhaseII);
  const SkinMode* mode = nullptr;
  for (const SkinMode& m : rep.modes)
    if (!m.hyperbolic && m.energy.real() > 0 &&
        (!mode || std::abs(m.theta - M_PI / 2) < std::abs(mode->theta - M_PI / 2)))
      mode = &m;
  REQUIRE(mode != nullptr);
  const auto [Ax, Bx] = build_eigenstate(kPhaseII, *mode, kPhaseII.N);
  const auto [Aa, Ba] = ansatz_eigenstate(kPhaseII, *mode, kPhaseII.N);
  // compare normalized B-sublattice magnitude profiles over interior cells
  double worst = 0.0;
  for (int n = 20; n < 80; ++n)
    worst = std::max(worst, std::abs(std::abs(Bx(n)) / Bx.norm() - std::abs(Ba(n)) / Ba.norm()));
  CHECK(worst < 2e-2);
}
