#pragma once
// Exact-solution machinery for the open-boundary eigenproblem: Vieta
// coefficients of the characteristic quartic, the alpha(theta) relation,
// boundary quantization, and closed-form eigenstates.

#include "nhchain/model.hpp"

#include <array>
#include <limits>
#include <optional>
#include <string>
#include <vector>

namespace nhchain {

struct VietaCoefficients {
  double omega1 = 0.0;  // -(t0 t1L + t1R t2) / (t0 t2)
  cplx omega2 = 0.0;    // (t0^2 + t1R t1L + t2^2 - (E - eps0)^2) / (t0 t2)
  double omega3 = 0.0;  // -(t0 t1R + t1L t2) / (t0 t2)
  double omega4 = 1.0;
};

struct NoRealSolutionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SkinMode {
  double theta = 0.0;       // in (0, pi) for oscillatory modes; 0 or pi for hyperbolic ones
  double alpha = 0.0;       // per-cell localization exponent
  cplx xi = 0.0;            // auxiliary angle, may be complex (diagnostic only)
  cplx energy = 0.0;
  int m = 0;                // 1-based index in the (Re, Im)-sorted full spectrum
  Vector amplitudes_A, amplitudes_B;
  double penetration_length = std::numeric_limits<double>::infinity();  // |1/alpha|
  bool hyperbolic = false;  // all four characteristic roots real (edge-split mode)
  double eq12_residual = 0.0;   // sine-quantization value at (theta, alpha); approximate at finite N
  double eq13_residual = 0.0;   // alpha-theta relation residual; exact for oscillatory modes
  double state_residual = 0.0;  // ||H psi - E psi|| / ||H||_F
};

struct QuantizeReport {
  std::vector<SkinMode> modes;  // sorted by (Re E, Im E); +/- partners both present
  int expected_count = 0;       // 2N minus zero modes handled elsewhere
  int found_count = 0;
  std::vector<std::string> diagnostics;
};

struct LocalizationProfile {
  std::vector<double> theta;
  std::vector<double> alpha;      // NaN where unsolvable
  std::vector<bool> solvable;
  double max_abs_alpha = 0.0;
};

VietaCoefficients vieta(const ModelParams& p, cplx E);

// Roots of t0 t2 z^4 + (t0 t1L + t1R t2) z^3
//          + (t0^2 + t1R t1L + t2^2 - (E-eps0)^2) z^2
//          + (t0 t1R + t1L t2) z + t0 t2 = 0.
std::array<cplx, 4> quartic_roots(const ModelParams& p, cplx E);

// All real solutions of (w1+w3)/cosh a + (w1-w3)/sinh a = 8 cos(theta),
// ascending |a|; the exact a = 0 answer when w1 == w3.
std::vector<double> alpha_candidates(const ModelParams& p, double theta);

// Primary branch: smallest-|alpha| candidate whose reconstructed energy
// squared is real and positive.  Throws NoRealSolutionError on gaps.
double alpha_from_theta(const ModelParams& p, double theta);

// E = eps0 + sqrt(h_a(z1) h_b(z1)) at z1 = e^{alpha + i theta}, branch with
// nonnegative real part.  complex_flag (optional) is set when Im (E-eps0)^2
// exceeds 1e-8 relative.
cplx energy_from_mode(const ModelParams& p, double alpha, double theta,
                      bool* complex_flag = nullptr);

// Column-scaled determinant of the four open-boundary constraints at E;
// zero exactly at OBC eigenvalues with E != eps0.
cplx boundary_determinant(const ModelParams& p, int N, cplx E);

// Exact eigenstate from the null vector of the boundary-constraint system,
// unit norm, phase fixed at the largest component.
Vector exact_eigenstate(const ModelParams& p, int N, cplx E);

// Sine-quantization value sin((N+1)t) + mu1 sin(Nt) + mu2 sin((N-1)t) with
// mu1 = e^-a t1R/t0, mu2 = e^-2a t2/t0 (approximate at finite N).
double eq12_value(const ModelParams& p, int N, double theta, double alpha);

// Residual of the alpha-theta relation at (theta, alpha).
double eq13_residual(const ModelParams& p, double theta, double alpha);

// Full boundary quantization at size p.N (energies E != eps0).
QuantizeReport quantize(const ModelParams& p);

// Exact amplitudes of a converged mode, split by sublattice, unit norm overall.
std::pair<Vector, Vector> build_eigenstate(const ModelParams& p, const SkinMode& mode, int N);

// Thermodynamic-limit two-term ansatz profile (for comparison only):
//   phi_A(n) = e^{a n} (sin nt + mu1 sin (n-1)t + mu2 sin (n-2)t),
//   phi_B(n) = e^{a n} ((E-eps0)/t0) sin nt.
std::pair<Vector, Vector> ansatz_eigenstate(const ModelParams& p, const SkinMode& mode, int N);

LocalizationProfile localization_profile(const ModelParams& p, int samples = 512);

}  // namespace nhchain
