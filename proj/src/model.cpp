#include "nhchain/model.hpp"

#include <cmath>

namespace nhchain {

BlochFactors bloch_factors(const ModelParams& p) {
  return BlochFactors{p.t0, p.t1R, p.t1L, p.t2};
}

Matrix build_obc_hamiltonian(const ModelParams& p) {
  p.require_obc();
  const int N = p.N;
  Matrix H = Matrix::Zero(2 * N, 2 * N);
  auto A = [](int n) { return 2 * (n - 1); };      // n is 1-based cell index
  auto B = [](int n) { return 2 * (n - 1) + 1; };

  for (int n = 1; n <= N; ++n) {
    H(A(n), A(n)) = p.eps0;
    H(B(n), B(n)) = p.eps0;
    H(A(n), B(n)) += p.t0;
    H(B(n), A(n)) += p.t0;
  }
  for (int n = 1; n <= N - 1; ++n) {
    H(A(n + 1), B(n)) += p.t1R;
    H(B(n), A(n + 1)) += p.t1L;
  }
  for (int n = 1; n <= N - 2; ++n) {
    H(A(n + 2), B(n)) += p.t2;
    H(B(n), A(n + 2)) += p.t2;
  }
  return H;
}

Matrix build_ring_hamiltonian(const ModelParams& p) {
  p.require_obc();
  const int N = p.N;
  Matrix H = build_obc_hamiltonian(p);
  auto A = [N](int n) { return 2 * (((n - 1) % N + N) % N); };
  auto B = [N](int n) { return 2 * (((n - 1) % N + N) % N) + 1; };

  // wrap the t1 bond N -> N+1 and the t2 bonds (N-1, N) -> (N+1, N+2)
  H(A(N + 1), B(N)) += p.t1R;
  H(B(N), A(N + 1)) += p.t1L;
  for (int n = N - 1; n <= N; ++n) {
    H(A(n + 2), B(n)) += p.t2;
    H(B(n), A(n + 2)) += p.t2;
  }
  return H;
}

Eigen::Matrix2cd bloch_hamiltonian(const ModelParams& p, double k) {
  const cplx z = std::polar(1.0, k);
  const BlochFactors f = bloch_factors(p);
  Eigen::Matrix2cd H;
  H << p.eps0, f.ha(z), f.hb(z), p.eps0;
  return H;
}

std::vector<std::pair<cplx, cplx>> pbc_spectrum(const ModelParams& p,
                                                const std::vector<double>& k_grid) {
  if (k_grid.empty()) throw std::invalid_argument("pbc_spectrum: empty k grid");
  const BlochFactors f = bloch_factors(p);
  std::vector<std::pair<cplx, cplx>> out;
  out.reserve(k_grid.size());
  for (double k : k_grid) {
    const cplx z = std::polar(1.0, k);
    const cplx root = std::sqrt(f.ha(z) * f.hb(z));
    out.emplace_back(p.eps0 + root, p.eps0 - root);
  }
  return out;
}

bool check_sls(const ModelParams& p) {
  if (p.eps0 != 0.0) return false;
  // sigma_z H(k) sigma_z = -H(k) on a sample grid
  for (int m = 0; m < 64; ++m) {
    const double k = 2.0 * M_PI * m / 64.0;
    Eigen::Matrix2cd H = bloch_hamiltonian(p, k);
    Eigen::Matrix2cd sz;
    sz << 1, 0, 0, -1;
    if ((sz * H * sz + H).norm() > 1e-14 * std::max(1.0, H.norm())) return false;
  }
  return true;
}

}  // namespace nhchain
