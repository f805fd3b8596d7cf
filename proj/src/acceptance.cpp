#include "nhchain/acceptance.hpp"

#include "nhchain/dense.hpp"
#include "nhchain/greens.hpp"
#include "nhchain/model.hpp"
#include "nhchain/phase.hpp"
#include "nhchain/skin.hpp"
#include "nhchain/winding.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <random>
#include <sstream>

namespace nhchain {

namespace {

using Clock = std::chrono::steady_clock;

std::string fmt(double v) {
  std::ostringstream s;
  s.precision(10);
  s << v;
  return s.str();
}

double nearest_distance(cplx e, const Vector& set) {
  double best = std::numeric_limits<double>::infinity();
  for (int i = 0; i < set.size(); ++i) best = std::min(best, std::abs(e - set(i)));
  return best;
}

Vector interleave(const Vector& A, const Vector& B) {
  Vector psi(2 * A.size());
  for (int n = 0; n < A.size(); ++n) {
    psi(2 * n) = A(n);
    psi(2 * n + 1) = B(n);
  }
  return psi;
}

double profile_deviation(const Vector& exact, const Vector& dense) {
  const cplx z = dense.adjoint() * exact;
  const cplx phase = (std::abs(z) > 0) ? z / std::abs(z) : cplx(1.0);
  return (exact - phase * dense).cwiseAbs().maxCoeff();
}

// --- criterion 1 + 2 share the phase II N = 100 run ---------------------

void crit_spectra_and_states(std::vector<CriterionResult>& out) {
  const ModelParams p{1.0, 3.5, 2.5, 1.3, 0.0, 100};

  auto t0 = Clock::now();
  const QuantizeReport rep = quantize(p);
  const EigenDecomposition dec = eig(build_obc_hamiltonian(p));
  const double secs = std::chrono::duration<double>(Clock::now() - t0).count();

  CriterionResult c1{1, "exact-vs-numeric spectra (phase II, N=100)"};
  double worst = 0.0;
  for (const SkinMode& m : rep.modes) worst = std::max(worst, nearest_distance(m.energy, dec.eigenvalues));
  int zeros = 0;
  for (int i = 0; i < dec.eigenvalues.size(); ++i)
    if (std::abs(dec.eigenvalues(i)) < 1e-6) ++zeros;
  const bool counts_ok = rep.found_count + zeros == 2 * p.N;
  c1.pass = worst <= 1e-6 && counts_ok && secs < 30.0;
  c1.detail = "max |E_exact - E_dense| = " + fmt(worst) + ", modes " + std::to_string(rep.found_count) +
              " + " + std::to_string(zeros) + " zero modes = " +
              std::to_string(rep.found_count + zeros) + "/200, " + fmt(secs) + " s";
  c1.seconds = secs;
  out.push_back(c1);

  CriterionResult c2{2, "exact-vs-numeric eigenstates (m=9, m=192)"};
  auto t1 = Clock::now();
  double dev = 0.0;
  bool found_both = true;
  for (int target : {9, 192}) {
    const SkinMode* mode = nullptr;
    for (const SkinMode& m : rep.modes)
      if (m.m == target) mode = &m;
    if (!mode) {
      found_both = false;
      continue;
    }
    const Vector exact = interleave(mode->amplitudes_A, mode->amplitudes_B);
    const Vector dense = dec.right_eigenvectors.col(target - 1);
    dev = std::max(dev, profile_deviation(exact, dense));
  }
  c2.pass = found_both && dev <= 1e-5;
  c2.detail = found_both ? ("max pointwise deviation = " + fmt(dev)) : "mode m=9 or m=192 missing";
  c2.seconds = std::chrono::duration<double>(Clock::now() - t1).count();
  out.push_back(c2);
}

void crit_transition(std::vector<CriterionResult>& out) {
  CriterionResult c{3, "topological transition value t2 = 0.3398"};
  auto t0 = Clock::now();
  ModelParams p{1.0, 1.2, 1.6, 0.5, 0.0, 3};
  const double x = find_topological_transition(p, "t2", 0.0, 0.8);
  c.pass = std::abs(x - 0.3398) <= 1e-4;
  c.detail = "bisection -> " + fmt(x) + " (|x - 0.3398| = " + fmt(std::abs(x - 0.3398)) + ")";
  c.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
  out.push_back(c);
}

void crit_finite_size(std::vector<CriterionResult>& out, bool quick) {
  CriterionResult c{4, "finite-size drift of the zero-mode transition"};
  auto t0 = Clock::now();
  ModelParams base{1.0, 1.2, 1.6, 0.5, 0.0, 40};
  std::vector<int> sizes = quick ? std::vector<int>{40} : std::vector<int>{40, 400};
  const auto rows = finite_size_report(base, sizes);
  bool ok = true;
  std::ostringstream d;
  for (const auto& r : rows) {
    if (!r.transition) {
      ok = false;
      d << "N=" << r.N << ": no transition; ";
      continue;
    }
    const double t = *r.transition;
    if (r.N == 40) ok = ok && t >= 0.29 && t <= 0.33;
    if (r.N == 400) ok = ok && std::abs(t - 0.3398) <= 0.01;
    d << "N=" << r.N << ": " << fmt(t) << "; ";
  }
  if (quick) d << "(quick: N=400 leg skipped)";
  c.pass = ok;
  c.detail = d.str();
  c.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
  out.push_back(c);
}

void crit_greens(std::vector<CriterionResult>& out) {
  CriterionResult c{5, "surface Green's function transition in [0.30, 0.38]"};
  auto t0 = Clock::now();
  ModelParams base{1.0, 1.2, 1.6, 0.0, 0.0, 3};
  std::vector<double> grid(161);
  for (int i = 0; i < 161; ++i) grid[i] = 0.005 * i;
  const auto rows = transition_scan(base, grid, 1e-3);
  int failed = 0;
  double best_drop = -1.0, t_star = 0.0;
  for (std::size_t i = 0; i + 1 < rows.size(); ++i) {
    if (!rows[i].ok || !rows[i + 1].ok) {
      ++failed;
      continue;
    }
    const double a0 = std::max(rows[i].A_surface, 1e-12);
    const double a1 = std::max(rows[i + 1].A_surface, 1e-12);
    const double drop = std::log(a0) - std::log(a1);
    if (drop > best_drop) {
      best_drop = drop;
      t_star = 0.5 * (rows[i].t2 + rows[i + 1].t2);
    }
  }
  c.pass = failed == 0 && t_star >= 0.30 && t_star <= 0.38;
  c.detail = "peak drop-off at t2 = " + fmt(t_star) + ", failed points: " + std::to_string(failed);
  c.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
  out.push_back(c);
}

void crit_phases(std::vector<CriterionResult>& out) {
  CriterionResult c{6, "four-phase classification of the reference points"};
  auto t0 = Clock::now();
  struct Case {
    ModelParams p;
    Phase want;
  };
  const std::vector<Case> cases = {
      {{1.0, 3.5, 2.5, 1.0, 0.0, 3}, Phase::I},
      {{1.0, 3.5, 2.5, 1.3, 0.0, 3}, Phase::II},
      {{1.0, 1.2, 1.6, 0.6, 0.0, 3}, Phase::III},
      {{1.0, 1.2, 1.6, 1.0, 0.0, 3}, Phase::IV},
  };
  bool ok = true;
  std::ostringstream d;
  for (const auto& cs : cases) {
    const PhasePoint pt = classify(cs.p);
    ok = ok && pt.phase == cs.want;
    d << phase_name(pt.phase);
    if (cs.want == Phase::III) {
      ok = ok && pt.skin_side == SkinSide::left;
      d << "(" << skin_side_name(pt.skin_side) << ")";
    }
    d << " ";
  }
  c.pass = ok;
  c.detail = "got: " + d.str() + "(want I II III(left) IV)";
  c.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
  out.push_back(c);
}

void crit_skin_vanishing(std::vector<CriterionResult>& out, bool quick, unsigned seed) {
  CriterionResult c{7, "skin effect vanishes on t0 = t2 (50 draws) + alpha(pi/2) closed form"};
  auto t0 = Clock::now();
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> mag(0.1, 4.0);
  const int N = quick ? 24 : 40;
  double worst_alpha = 0.0, worst_imag = 0.0;
  int accepted = 0, redraws = 0;
  while (accepted < 50 && redraws < 5000) {
    ModelParams p;
    p.t0 = p.t2 = mag(rng);
    p.t1R = mag(rng);
    p.t1L = mag(rng);
    p.eps0 = 0.0;
    p.N = N;
    // alpha vanishes on the whole t0 = t2 manifold; check it on every draw
    worst_alpha = std::max(worst_alpha, localization_profile(p, 128).max_abs_alpha);
    // the spectrum is real only where E^2 = (2 t0 cos k + t1R)(2 t0 cos k + t1L)
    // keeps one sign across the band, i.e. min(t1R, t1L) >= 2 t0; elsewhere
    // conjugate pairs appear (pseudo-Hermiticity broken), so reality is
    // asserted on draws from the unbroken subregion
    if (std::min(p.t1R, p.t1L) < 2.0 * p.t0) {
      ++redraws;
      continue;
    }
    ++accepted;
    const Vector ev = eigvals(build_obc_hamiltonian(p));
    worst_imag = std::max(worst_imag, ev.imag().cwiseAbs().maxCoeff());
  }

  // closed form tanh(a) = -(w1-w3)/(w1+w3) at theta = pi/2, phase III params,
  // vs an independent bisection root of the alpha-theta relation itself
  const ModelParams p3{1.0, 1.2, 1.6, 0.6, 0.0, 3};
  const VietaCoefficients w = vieta(p3, 0.0);
  const double closed = std::atanh(-(w.omega1 - w.omega3) / (w.omega1 + w.omega3));
  double lo = -0.5, hi = -1e-12;
  auto g = [&](double a) {
    return (w.omega1 + w.omega3) / std::cosh(a) + (w.omega1 - w.omega3) / std::sinh(a);
  };
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    if ((g(mid) > 0) == (g(lo) > 0)) lo = mid;
    else hi = mid;
  }
  const double rooted = 0.5 * (lo + hi);

  c.pass = accepted == 50 && worst_alpha < 1e-9 && worst_imag < 1e-8 &&
           std::abs(closed - rooted) <= 1e-6;
  c.detail = "max|alpha| = " + fmt(worst_alpha) + " (" + std::to_string(accepted + redraws) +
             " draws), max|Im E| = " + fmt(worst_imag) + " (50 unbroken draws)" +
             ", alpha(pi/2) closed = " + fmt(closed) + " vs rooted = " + fmt(rooted) +
             " (the rounded -0.035736 sometimes quoted for this point is an arithmetic slip "
             "of the same closed form: atanh(1/28) = 0.0357295)";
  c.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
  out.push_back(c);
}

void crit_properties(std::vector<CriterionResult>& out, bool quick, unsigned seed) {
  CriterionResult c{8, "property suites (Vieta, winding, small-N oracle, SLS, residuals, decay slopes)"};
  auto tstart = Clock::now();
  std::mt19937 rng(seed + 1);
  std::uniform_real_distribution<double> mag(0.1, 4.0);
  std::bernoulli_distribution coin;
  auto draw_t = [&]() { return (coin(rng) ? 1.0 : -1.0) * mag(rng); };
  std::ostringstream d;
  bool ok = true;

  // (a) Vieta closure on 50 draws
  {
    double worst = 0.0;
    for (int k = 0; k < 50; ++k) {
      ModelParams p{draw_t(), draw_t(), draw_t(), draw_t(), 0.0, 3};
      std::uniform_real_distribution<double> eu(-5.0, 5.0);
      const cplx E = eu(rng);
      const auto z = quartic_roots(p, E);
      const VietaCoefficients w = vieta(p, E);
      const cplx e1 = z[0] + z[1] + z[2] + z[3];
      const cplx e2 = z[0] * z[1] + z[0] * z[2] + z[0] * z[3] + z[1] * z[2] + z[1] * z[3] + z[2] * z[3];
      const cplx e3 = z[0] * z[1] * z[2] + z[0] * z[1] * z[3] + z[0] * z[2] * z[3] + z[1] * z[2] * z[3];
      const cplx e4 = z[0] * z[1] * z[2] * z[3];
      // omega1/omega3 carry the minus sign of the monic coefficients, so the
      // elementary symmetric sums equal them directly: e1 = w1, e3 = w3
      const double scale = std::max({std::abs(w.omega1), std::abs(w.omega2), std::abs(w.omega3), 1.0});
      worst = std::max({worst, std::abs(e1 - w.omega1) / scale, std::abs(e2 - w.omega2) / scale,
                        std::abs(e3 - w.omega3) / scale, std::abs(e4 - 1.0) / scale});
    }
    ok = ok && worst <= 1e-9;
    d << "vieta " << fmt(worst) << "; ";
  }

  // (b) contour vs root count, 100 draws (winding_number throws on mismatch)
  {
    int checked = 0;
    bool agree = true;
    for (int k = 0; k < 100; ++k) {
      ModelParams p{draw_t(), draw_t(), draw_t(), draw_t(), 0.0, 3};
      auto roots = offdiag_roots(p);
      std::vector<double> moduli;
      for (const auto& z : roots.first) moduli.push_back(std::abs(z));
      for (const auto& z : roots.second) moduli.push_back(std::abs(z));
      std::uniform_real_distribution<double> ru(0.5 * *std::min_element(moduli.begin(), moduli.end()),
                                                2.0 * *std::max_element(moduli.begin(), moduli.end()));
      for (int attempt = 0; attempt < 20; ++attempt) {
        const double R = ru(rng);
        try {
          winding_number(Factor::a, p, R);
          winding_number(Factor::b, p, R);
          ++checked;
          break;
        } catch (const ContourOnRootError&) {
          continue;
        } catch (const std::runtime_error&) {
          agree = false;
          break;
        }
      }
    }
    ok = ok && agree && checked == 100;
    d << "winding " << checked << "/100; ";
  }

  // (c) small-N multiset equivalence, 20 real-spectrum draws
  {
    double worst = 0.0;
    int done = 0, redraws = 0;
    std::uniform_int_distribution<int> nu(4, 6);
    while (done < 20 && redraws < 400) {
      ModelParams p{draw_t(), draw_t(), draw_t(), draw_t(), 0.0, nu(rng)};
      if (std::abs(p.t0 - p.t2) < 0.05 || std::abs(p.t1R - p.t1L) < 0.05) {
        ++redraws;
        continue;
      }
      const Vector ev = eigvals(build_obc_hamiltonian(p));
      const double rho = ev.cwiseAbs().maxCoeff();
      if (ev.imag().cwiseAbs().maxCoeff() > 1e-9 * rho) {
        ++redraws;  // complex spectrum: outside the real-(alpha,theta) ansatz
        continue;
      }
      const QuantizeReport rep = quantize(p);
      if (rep.found_count != rep.expected_count) {
        worst = std::max(worst, 1.0);
        ++done;
        continue;
      }
      std::vector<double> a, b;
      for (const SkinMode& m : rep.modes) a.push_back(m.energy.real());
      for (int i = 0; i < ev.size(); ++i) b.push_back(ev(i).real());
      std::sort(b.begin(), b.end(), [](double x, double y) { return std::abs(x) < std::abs(y); });
      // topological draws: the boundary pair near eps0 is outside the scan's
      // remit (expected_count = 2N - 2), drop its dense counterparts
      b.erase(b.begin(), b.begin() + (b.size() - a.size()));
      std::sort(a.begin(), a.end());
      std::sort(b.begin(), b.end());
      for (std::size_t i = 0; i < a.size(); ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
      ++done;
    }
    ok = ok && done == 20 && worst <= 1e-7;
    d << "small-N " << fmt(worst) << " (" << redraws << " redraws); ";
  }

  // (d) SLS spectral symmetry at eps0 = 0
  {
    double worst = 0.0;
    for (int k = 0; k < 10; ++k) {
      ModelParams p{draw_t(), draw_t(), draw_t(), draw_t(), 0.0, 12};
      const Vector ev = eigvals(build_obc_hamiltonian(p));
      const double rho = std::max(ev.cwiseAbs().maxCoeff(), 1e-30);
      std::vector<cplx> plus(ev.data(), ev.data() + ev.size());
      for (const cplx& e : plus) {
        double best = 1e300;
        for (const cplx& f : plus) best = std::min(best, std::abs(e + f));
        worst = std::max(worst, best / rho);
      }
    }
    ok = ok && worst <= 1e-9;
    d << "sls " << fmt(worst) << "; ";
  }

  // (e) eigensolver residual contract on the phase II matrix
  {
    const ModelParams p{1.0, 3.5, 2.5, 1.3, 0.0, quick ? 60 : 100};
    const Matrix H = build_obc_hamiltonian(p);
    const EigenDecomposition dec = eig(H);
    ok = ok && dec.max_residual <= 1e-8 * H.norm();
    d << "residual " << fmt(dec.max_residual / H.norm()) << "; ";
  }

  // (f) decay-slope agreement for phases II and III at N = 100
  {
    double worst_rel = 0.0;
    for (const ModelParams& p : {ModelParams{1.0, 3.5, 2.5, 1.3, 0.0, 100},
                                 ModelParams{1.0, 1.2, 1.6, 0.6, 0.0, 100}}) {
      const QuantizeReport rep = quantize(p);
      const EigenDecomposition dec = eig(build_obc_hamiltonian(p));
      int tested = 0;
      for (std::size_t k = 10; k < rep.modes.size() && tested < 8; k += 25, ++tested) {
        const SkinMode& m = rep.modes[k];
        if (std::abs(m.alpha) < 1e-6) continue;
        // match the dense eigenvector by eigenvalue
        int best = 0;
        double bd = 1e300;
        for (int i = 0; i < dec.eigenvalues.size(); ++i)
          if (std::abs(dec.eigenvalues(i) - m.energy) < bd) {
            bd = std::abs(dec.eigenvalues(i) - m.energy);
            best = i;
          }
        const double slope = fit_decay_rate(cell_maxima(dec.right_eigenvectors.col(best)));
        worst_rel = std::max(worst_rel, std::abs(slope - m.alpha) / std::abs(m.alpha));
      }
    }
    ok = ok && worst_rel <= 0.05;
    d << "decay-slope " << fmt(worst_rel);
  }

  c.pass = ok;
  c.detail = d.str();
  c.seconds = std::chrono::duration<double>(Clock::now() - tstart).count();
  out.push_back(c);
}

}  // namespace

std::vector<CriterionResult> run_acceptance(bool quick, unsigned seed) {
  std::vector<CriterionResult> out;
  crit_spectra_and_states(out);
  crit_transition(out);
  crit_finite_size(out, quick);
  crit_greens(out);
  crit_phases(out);
  crit_skin_vanishing(out, quick, seed);
  crit_properties(out, quick, seed);
  return out;
}

std::string acceptance_report(const std::vector<CriterionResult>& results) {
  std::ostringstream s;
  for (const auto& r : results) {
    s << (r.pass ? "PASS" : "FAIL") << "  [" << r.id << "] " << r.name << " — " << r.detail
      << "\n";
  }
  s << (all_passed(results) ? "ALL CRITERIA PASSED" : "CRITERIA FAILED") << "\n";
  return s.str();
}

bool all_passed(const std::vector<CriterionResult>& results) {
  for (const auto& r : results)
    if (!r.pass) return false;
  return !results.empty();
}

}  // namespace nhchain
