#pragma once
// Non-Hermitian winding numbers of the off-diagonal Bloch factors and the
// resulting criterion for topological boundary modes.

#include "nhchain/model.hpp"

#include <array>
#include <optional>
#include <string>

namespace nhchain {

struct WindingReport {
  std::array<cplx, 2> za_roots{};  // zeros of t0 z^2 + t1R z + t2, ascending modulus
  std::array<cplx, 2> zb_roots{};  // zeros of t2 z^2 + t1L z + t0, ascending modulus
  bool topological = false;
  std::optional<double> witness_radius;  // R with W_a(R) * W_b(R) < 0
  bool boundary_degenerate = false;      // |max|za| - min|zb|| below tolerance
};

struct DegenerateModelError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct ContourOnRootError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NoBracketError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Closed-form quadratic roots, ascending modulus.  Throws DegenerateModelError
// when t0 == 0 or t2 == 0.
std::pair<std::array<cplx, 2>, std::array<cplx, 2>> offdiag_roots(const ModelParams& p);

enum class Factor { a, b };

// Zeros-minus-poles count inside |z| = R; the analytic count is cross-checked
// against trapezoidal phase accumulation on 4096 contour points and both must
// agree exactly.
int winding_number(Factor f, const ModelParams& p, double R);

WindingReport topological_criterion(const ModelParams& p);

// Raw existence scan over sampled radii for degenerate (t0 == 0 or t2 == 0)
// models where the quadratic root criterion does not apply.
bool topological_radius_scan(const ModelParams& p);

// Signed criterion margin max|za| - min|zb| with stable degenerate limits
// (a vanishing leading/trailing quadratic coefficient sends one root to
// infinity / removes it).
double criterion_margin(const ModelParams& p);

// Bisection on the sign of criterion_margin along one parameter.
// sweep is one of "t0", "t1R", "t1L", "t2", "eps0".
double find_topological_transition(const ModelParams& base, const std::string& sweep,
                                   double lo, double hi);

}  // namespace nhchain
