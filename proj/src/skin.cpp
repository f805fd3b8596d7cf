#include "nhchain/skin.hpp"

#include "nhchain/dense.hpp"
#include "nhchain/winding.hpp"

#include <Eigen/SVD>
#include <algorithm>
#include <cmath>

namespace nhchain {

namespace {

constexpr double kDedupeTol = 1e-9;       // minimum eigenvalue separation
constexpr double kStateResidualTol = 1e-8;  // relative to ||H||_F
constexpr int kGridPerCell = 40;          // scan density factor
constexpr int kMaxPasses = 4;

cplx energy_sq(const ModelParams& p, cplx z1) {
  const BlochFactors f = bloch_factors(p);
  return f.ha(z1) * f.hb(z1);
}

struct BoundarySystem {
  std::array<cplx, 4> z, g;
  std::array<double, 4> scale;
  Eigen::Matrix4cd M;
};

// Four boundary constraints phi_{0,B} = phi_{-1,B} = phi_{N+1,A} = phi_{N+2,A} = 0
// on the root coefficients, columns scaled by max(1,|z|)^{N+2} to avoid overflow.
BoundarySystem boundary_system(const ModelParams& p, int N, cplx E) {
  BoundarySystem s;
  s.z = quartic_roots(p, E);
  for (int j = 0; j < 4; ++j) {
    const cplx z = s.z[j];
    s.g[j] = (p.t2 + p.t1R * z + p.t0 * z * z) / ((E - p.eps0) * z * z);
    s.scale[j] = std::pow(std::max(1.0, std::abs(z)), N + 2);
    const cplx zn1 = std::pow(z, N + 1);
    s.M(0, j) = 1.0 / s.scale[j];
    s.M(1, j) = (1.0 / z) / s.scale[j];
    s.M(2, j) = s.g[j] * zn1 / s.scale[j];
    s.M(3, j) = s.g[j] * zn1 * z / s.scale[j];
  }
  return s;
}

struct Classified {
  double alpha = 0.0, theta = 0.0;
  bool hyperbolic = false;
  bool ok = false;
};

Classified classify_roots(const std::array<cplx, 4>& z) {
  Classified best;
  // oscillatory: a complex-conjugate pair with real positive product
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) {
      const cplx pr = z[i] * z[j];
      if (std::abs(z[i] - std::conj(z[j])) < 1e-7 * std::abs(z[i]) &&
          std::abs(z[i].imag()) > 1e-9 && std::abs(pr.imag()) < 1e-7 * std::abs(pr) &&
          pr.real() > 0) {
        const double a = 0.5 * std::log(pr.real());
        if (!best.ok || std::abs(a) < std::abs(best.alpha)) {
          best = {a, std::abs(std::arg(z[i])), false, true};
        }
      }
    }
  if (best.ok) return best;
  // hyperbolic: all roots real; pair same-sign roots
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) {
      if (std::abs(z[i].imag()) > 1e-9 * (1.0 + std::abs(z[i])) ||
          std::abs(z[j].imag()) > 1e-9 * (1.0 + std::abs(z[j])))
        continue;
      const double pr = z[i].real() * z[j].real();
      if (pr <= 0) continue;
      const double a = 0.5 * std::log(pr);
      if (!best.ok || std::abs(a) < std::abs(best.alpha)) {
        best = {a, z[i].real() > 0 ? 0.0 : M_PI, true, true};
      }
    }
  return best;
}

}  // namespace

VietaCoefficients vieta(const ModelParams& p, cplx E) {
  p.require_quartic();
  VietaCoefficients w;
  const double d = p.t0 * p.t2;
  w.omega1 = -(p.t0 * p.t1L + p.t1R * p.t2) / d;
  w.omega2 = (p.t0 * p.t0 + p.t1R * p.t1L + p.t2 * p.t2 - (E - p.eps0) * (E - p.eps0)) / d;
  w.omega3 = -(p.t0 * p.t1R + p.t1L * p.t2) / d;
  w.omega4 = 1.0;
  return w;
}

std::array<cplx, 4> quartic_roots(const ModelParams& p, cplx E) {
  p.require_quartic();
  const cplx dE = E - p.eps0;
  const std::vector<cplx> c = {p.t0 * p.t2, p.t0 * p.t1R + p.t1L * p.t2,
                               p.t0 * p.t0 + p.t1R * p.t1L + p.t2 * p.t2 - dE * dE,
                               p.t0 * p.t1L + p.t1R * p.t2, p.t0 * p.t2};
  auto roots = poly_roots(c);
  // one Newton step per root against the quartic for residual hygiene
  for (auto& z : roots) {
    const cplx f = c[0] + z * (c[1] + z * (c[2] + z * (c[3] + z * c[4])));
    const cplx df = c[1] + z * (2.0 * c[2] + z * (3.0 * c[3] + z * 4.0 * c[4]));
    if (std::abs(df) > 0) z -= f / df;
  }
  return {roots[0], roots[1], roots[2], roots[3]};
}

std::vector<double> alpha_candidates(const ModelParams& p, double theta) {
  p.require_quartic();
  const VietaCoefficients w = vieta(p, p.eps0);  // omega1/3 are E-independent
  const double A = w.omega1 + w.omega3;
  const double B = w.omega1 - w.omega3;
  const double c = 8.0 * std::cos(theta);
  if (std::abs(B) < 1e-13) return {0.0};
  auto g = [&](double a) { return A / std::cosh(a) + B / std::sinh(a) - c; };
  auto dg = [&](double a) {
    const double sh = std::sinh(a), ch = std::cosh(a);
    return -A * sh / (ch * ch) - B * ch / (sh * sh);
  };
  auto polish = [&](double a) {
    for (int it = 0; it < 12 && std::abs(g(a)) > 1e-13; ++it) {
      const double d = dg(a);
      if (d == 0.0) break;
      a -= g(a) / d;
    }
    return a;
  };
  std::vector<double> out;
  const double scale = std::abs(A) + std::abs(B) + std::abs(c);
  if (std::abs(c) < 1e-9 * scale) {
    // c -> 0 limit: tanh(a) = -B/A; the quartic below loses its leading
    // coefficient (c^2) and its companion matrix degenerates
    if (std::abs(B) < std::abs(A)) out.push_back(polish(std::atanh(-B / A)));
  } else {
    // quartic in s = sinh(alpha):
    //   c^2 s^4 - 2Bc s^3 + (B^2 + c^2 - A^2) s^2 - 2Bc s + B^2 = 0
    const std::vector<cplx> coeffs = {B * B, -2.0 * B * c, B * B + c * c - A * A, -2.0 * B * c,
                                      c * c};
    for (const cplx& r : poly_roots(coeffs)) {
      if (std::abs(r.imag()) >= 1e-9 * std::max(1.0, std::abs(r))) continue;
      const double s = r.real();
      if (s == 0.0) continue;
      const double a = polish(std::asinh(s));
      if (std::abs(g(a)) < 1e-9 * scale) out.push_back(a);
    }
  }
  std::sort(out.begin(), out.end(), [](double x, double y) { return std::abs(x) < std::abs(y); });
  out.erase(std::unique(out.begin(), out.end(),
                        [](double x, double y) { return std::abs(x - y) < 1e-12; }),
            out.end());
  return out;
}

double alpha_from_theta(const ModelParams& p, double theta) {
  for (double a : alpha_candidates(p, theta)) {
    const cplx E2 = energy_sq(p, std::exp(cplx(a, theta)));
    if (std::abs(E2.imag()) <= 1e-8 * std::max(std::abs(E2), 1e-30) && E2.real() > 0) return a;
  }
  throw NoRealSolutionError("alpha_from_theta: no real alpha on either branch at this theta");
}

cplx energy_from_mode(const ModelParams& p, double alpha, double theta, bool* complex_flag) {
  const cplx E2 = energy_sq(p, std::exp(cplx(alpha, theta)));
  if (complex_flag) *complex_flag = std::abs(E2.imag()) > 1e-8 * std::abs(E2);
  cplx root = std::sqrt(E2);
  if (root.real() < 0) root = -root;
  return p.eps0 + root;
}

cplx boundary_determinant(const ModelParams& p, int N, cplx E) {
  return boundary_system(p, N, E).M.determinant();
}

Vector exact_eigenstate(const ModelParams& p, int N, cplx E) {
  const BoundarySystem s = boundary_system(p, N, E);
  Eigen::JacobiSVD<Eigen::Matrix4cd> svd(s.M, Eigen::ComputeFullV);
  Eigen::Vector4cd c = svd.matrixV().col(3);
  for (int j = 0; j < 4; ++j) c(j) /= s.scale[j];

  Vector psi = Vector::Zero(2 * N);
  for (int n = 1; n <= N; ++n) {
    cplx phiA = 0, phiB = 0;
    for (int j = 0; j < 4; ++j) {
      const cplx zn = std::pow(s.z[j], n);
      phiB += c(j) * zn;
      phiA += c(j) * s.g[j] * zn;
    }
    psi(2 * (n - 1)) = phiA;
    psi(2 * (n - 1) + 1) = phiB;
  }
  psi.normalize();
  int imax = 0;
  psi.cwiseAbs().maxCoeff(&imax);
  psi *= std::conj(psi(imax)) / std::abs(psi(imax));
  return psi;
}

double eq12_value(const ModelParams& p, int N, double theta, double alpha) {
  const double mu1 = std::exp(-alpha) * p.t1R / p.t0;
  const double mu2 = std::exp(-2.0 * alpha) * p.t2 / p.t0;
  return std::sin((N + 1) * theta) + mu1 * std::sin(N * theta) + mu2 * std::sin((N - 1) * theta);
}

double eq13_residual(const ModelParams& p, double theta, double alpha) {
  const VietaCoefficients w = vieta(p, p.eps0);
  const double A = w.omega1 + w.omega3;
  const double B = w.omega1 - w.omega3;
  if (alpha == 0.0) return std::abs(B);
  return std::abs(A / std::cosh(alpha) + B / std::sinh(alpha) - 8.0 * std::cos(theta));
}

QuantizeReport quantize(const ModelParams& p) {
  p.require_obc();
  p.require_quartic();
  const int N = p.N;
  const Matrix H = build_obc_hamiltonian(p);
  const double Hnorm = H.norm();
  const double Emax = std::abs(p.t0) + std::abs(p.t1R) + std::abs(p.t1L) + 2.0 * std::abs(p.t2) + 0.1;
  const int M = kGridPerCell * N;
  const double cell = Emax / M;

  std::vector<double> xs(M), ds(M);
  for (int i = 0; i < M; ++i) {
    xs[i] = Emax * (i + 1) / M;
    ds[i] = std::abs(boundary_determinant(p, N, p.eps0 + xs[i]));
  }

  std::vector<double> found;
  std::vector<Vector> states;
  std::vector<bool> dead(M, false);

  auto deflated = [&](double x) {
    if (x <= 0) return std::numeric_limits<double>::infinity();
    double v = std::abs(boundary_determinant(p, N, p.eps0 + x));
    for (double e : found) v /= std::max(std::abs(x - e), 1e-16);
    return v;
  };

  const double gr = 0.5 * (std::sqrt(5.0) - 1.0);
  QuantizeReport rep;

  for (int pass = 0; pass < kMaxPasses; ++pass) {
    std::vector<double> Fs(M);
    for (int i = 0; i < M; ++i) {
      if (dead[i]) {
        Fs[i] = std::numeric_limits<double>::infinity();
        continue;
      }
      double v = ds[i];
      for (double e : found) v /= std::max(std::abs(xs[i] - e), 1e-16);
      Fs[i] = v;
    }
    int added = 0;
    for (int i = 0; i < M; ++i) {
      const double l = (i > 0) ? Fs[i - 1] : std::numeric_limits<double>::infinity();
      const double r = (i < M - 1) ? Fs[i + 1] : std::numeric_limits<double>::infinity();
      if (!std::isfinite(Fs[i]) || Fs[i] > l || Fs[i] > r) continue;

      double a = std::max(xs[i] - 2.0 * cell, 1e-12), b = xs[i] + 2.0 * cell;
      double x1 = b - gr * (b - a), x2 = a + gr * (b - a);
      double F1 = deflated(x1), F2 = deflated(x2);
      for (int it = 0; it < 140; ++it) {
        if (F1 < F2) {
          b = x2;
          x2 = x1;
          F2 = F1;
          x1 = b - gr * (b - a);
          F1 = deflated(x1);
        } else {
          a = x1;
          x1 = x2;
          F1 = F2;
          x2 = a + gr * (b - a);
          F2 = deflated(x2);
        }
        if (b - a < 1e-15 * std::max(1.0, std::abs(a))) break;
      }
      const double x = 0.5 * (a + b);
      bool dup = false;
      for (double e : found)
        if (std::abs(x - e) <= kDedupeTol) dup = true;
      if (dup) {
        dead[i] = true;
        continue;
      }
      const cplx E = p.eps0 + x;
      Vector psi = exact_eigenstate(p, N, E);
      const double res = (H * psi - E * psi).norm() / Hnorm;
      if (res > kStateResidualTol) {
        dead[i] = true;
        continue;
      }
      found.push_back(x);
      states.push_back(std::move(psi));
      ++added;
    }
    if (added == 0) break;
  }

  // assemble +/- pairs; the -E partner is sigma_z psi by sub-lattice symmetry
  for (std::size_t k = 0; k < found.size(); ++k) {
    const double x = found[k];
    const auto roots = quartic_roots(p, p.eps0 + x);
    const Classified cl = classify_roots(roots);
    const VietaCoefficients w = vieta(p, p.eps0);

    SkinMode plus;
    plus.theta = cl.ok ? cl.theta : 0.0;
    plus.alpha = cl.ok ? cl.alpha : 0.0;
    plus.hyperbolic = cl.ok ? cl.hyperbolic : false;
    plus.energy = p.eps0 + x;
    plus.xi = std::acos(cplx((w.omega1 + w.omega3) / (4.0 * std::cosh(plus.alpha)) -
                             std::cos(plus.theta)));
    plus.penetration_length = (std::abs(plus.alpha) > 0)
                                  ? 1.0 / std::abs(plus.alpha)
                                  : std::numeric_limits<double>::infinity();
    plus.eq12_residual = std::abs(eq12_value(p, N, plus.theta, plus.alpha));
    plus.eq13_residual = eq13_residual(p, plus.theta, plus.alpha);
    const Vector& psi = states[k];
    plus.state_residual = (H * psi - plus.energy * psi).norm() / Hnorm;
    plus.amplitudes_A.resize(N);
    plus.amplitudes_B.resize(N);
    for (int n = 0; n < N; ++n) {
      plus.amplitudes_A(n) = psi(2 * n);
      plus.amplitudes_B(n) = psi(2 * n + 1);
    }

    SkinMode minus = plus;
    minus.energy = p.eps0 - x;
    minus.amplitudes_B = -plus.amplitudes_B;
    Vector psim(2 * N);
    for (int n = 0; n < N; ++n) {
      psim(2 * n) = minus.amplitudes_A(n);
      psim(2 * n + 1) = minus.amplitudes_B(n);
    }
    minus.state_residual = (H * psim - minus.energy * psim).norm() / Hnorm;

    rep.modes.push_back(std::move(minus));
    rep.modes.push_back(std::move(plus));
  }

  std::sort(rep.modes.begin(), rep.modes.end(), [](const SkinMode& u, const SkinMode& v) {
    if (u.energy.real() != v.energy.real()) return u.energy.real() < v.energy.real();
    return u.energy.imag() < v.energy.imag();
  });

  bool topological = false;
  try {
    topological = criterion_margin(p) > 0;
  } catch (const DegenerateModelError&) {
  }
  // at small N the would-be zero modes split to E != eps0 and the scan finds
  // them itself; only reserve middle slots when they are genuinely pinned
  const int zero_modes =
      (topological && static_cast<int>(rep.modes.size()) < 2 * N) ? 2 : 0;
  for (std::size_t k = 0; k < rep.modes.size(); ++k) {
    rep.modes[k].m = static_cast<int>(k) + 1;
    if (rep.modes[k].energy.real() > p.eps0) rep.modes[k].m += zero_modes;
  }

  rep.expected_count = 2 * N - zero_modes;
  rep.found_count = static_cast<int>(rep.modes.size());
  if (rep.found_count != rep.expected_count) {
    rep.diagnostics.push_back(
        "mode count " + std::to_string(rep.found_count) + " != expected " +
        std::to_string(rep.expected_count) +
        " (complex eigenvalues fall outside the real-(alpha,theta) ansatz and are not scanned)");
  }
  return rep;
}

std::pair<Vector, Vector> build_eigenstate(const ModelParams& p, const SkinMode& mode, int N) {
  const Vector psi = exact_eigenstate(p, N, mode.energy);
  Vector A(N), B(N);
  for (int n = 0; n < N; ++n) {
    A(n) = psi(2 * n);
    B(n) = psi(2 * n + 1);
  }
  return {A, B};
}

std::pair<Vector, Vector> ansatz_eigenstate(const ModelParams& p, const SkinMode& mode, int N) {
  const double a = mode.alpha, t = mode.theta;
  const double mu1 = std::exp(-a) * p.t1R / p.t0;
  const double mu2 = std::exp(-2.0 * a) * p.t2 / p.t0;
  Vector A(N), B(N);
  double norm2 = 0.0;
  for (int n = 1; n <= N; ++n) {
    const double en = std::exp(a * n);
    A(n - 1) = en * (std::sin(n * t) + mu1 * std::sin((n - 1) * t) + mu2 * std::sin((n - 2) * t));
    B(n - 1) = en * ((mode.energy - p.eps0) / p.t0) * std::sin(n * t);
    norm2 += std::norm(A(n - 1)) + std::norm(B(n - 1));
  }
  const double s = 1.0 / std::sqrt(norm2);
  A *= s;
  B *= s;
  return {A, B};
}

LocalizationProfile localization_profile(const ModelParams& p, int samples) {
  p.require_quartic();
  LocalizationProfile prof;
  prof.theta.resize(samples);
  prof.alpha.resize(samples);
  prof.solvable.resize(samples);
  for (int i = 0; i < samples; ++i) {
    const double t = M_PI * (i + 1) / (samples + 1);
    prof.theta[i] = t;
    try {
      const double a = alpha_from_theta(p, t);
      prof.alpha[i] = a;
      prof.solvable[i] = true;
      prof.max_abs_alpha = std::max(prof.max_abs_alpha, std::abs(a));
    } catch (const NoRealSolutionError&) {
      prof.alpha[i] = std::numeric_limits<double>::quiet_NaN();
      prof.solvable[i] = false;
    }
  }
  return prof;
}

}  // namespace nhchain
