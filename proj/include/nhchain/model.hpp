#pragma once
// Two-band 1D lattice with non-reciprocal nearest-neighbor hopping:
// intra-cell t0, inter-cell t1R (rightward) / t1L (leftward), and a
// reciprocal next-nearest-neighbor hopping t2.  Basis ordering is
// cell-major, A before B: (1A, 1B, 2A, 2B, ..., NA, NB).

#include <Eigen/Dense>
#include <complex>
#include <stdexcept>
#include <utility>
#include <vector>

namespace nhchain {

using cplx = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

struct ModelParams {
  double t0 = 1.0;
  double t1R = 1.0;
  double t1L = 1.0;
  double t2 = 0.0;
  double eps0 = 0.0;
  int N = 3;  // unit cells

  void require_obc() const {
    if (N < 3) throw std::invalid_argument("ModelParams: N >= 3 required for OBC assembly");
  }
  void require_quartic() const {
    if (t0 == 0.0 || t2 == 0.0)
      throw std::invalid_argument("ModelParams: t0 and t2 must be nonzero for the characteristic quartic");
  }
};

// Off-diagonal Bloch factors as Laurent polynomials in z = e^{ik}:
//   h_a(z) = t0 + t1R z^-1 + t2 z^-2,  h_b(z) = t0 + t1L z + t2 z^2.
struct BlochFactors {
  double t0, t1R, t1L, t2;

  cplx ha(cplx z) const { return t0 + t1R / z + t2 / (z * z); }
  cplx hb(cplx z) const { return t0 + t1L * z + t2 * z * z; }
};

BlochFactors bloch_factors(const ModelParams& p);

// 2N x 2N real-space Hamiltonian, open boundaries.
Matrix build_obc_hamiltonian(const ModelParams& p);

// Same couplings with periodic wrap of both the t1 and t2 bonds.
Matrix build_ring_hamiltonian(const ModelParams& p);

Eigen::Matrix2cd bloch_hamiltonian(const ModelParams& p, double k);

// Both dispersion branches eps0 +- sqrt(h_a h_b) per grid point.
std::vector<std::pair<cplx, cplx>> pbc_spectrum(const ModelParams& p,
                                                const std::vector<double>& k_grid);

// Sub-lattice symmetry holds iff eps0 == 0 (checked numerically on a k sample).
bool check_sls(const ModelParams& p);

}  // namespace nhchain
