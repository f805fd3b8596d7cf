#include "nhchain/greens.hpp"

#include <cmath>

namespace nhchain {

PrincipalLayer build_principal_layer(const ModelParams& p) {
  PrincipalLayer L;
  L.H00.setZero();
  L.H01.setZero();
  L.H10.setZero();
  enum { A1, B1, A2, B2 };
  for (int i = 0; i < 4; ++i) L.H00(i, i) = p.eps0;
  L.H00(A1, B1) = L.H00(B1, A1) = p.t0;
  L.H00(A2, B2) = L.H00(B2, A2) = p.t0;
  L.H00(A2, B1) = p.t1R;
  L.H00(B1, A2) = p.t1L;
  // couplings into the next layer (primed sites)
  L.H01(B1, A1) = p.t2;
  L.H01(B2, A1) = p.t1L;
  L.H01(B2, A2) = p.t2;
  L.H10(A1, B1) = p.t2;
  L.H10(A1, B2) = p.t1R;
  L.H10(A2, B2) = p.t2;
  return L;
}

GreensResult surface_greens(const PrincipalLayer& layer, cplx E, double eta, double tol,
                            int max_iter) {
  if (eta <= 0) throw std::invalid_argument("surface_greens: eta must be positive");
  if (tol <= 0) throw std::invalid_argument("surface_greens: tol must be positive");

  const Eigen::Matrix4cd w = (E + cplx(0.0, eta)) * Eigen::Matrix4cd::Identity();
  Eigen::Matrix4cd es = layer.H00;   // left-surface self-consistent block
  Eigen::Matrix4cd esb = layer.H00;  // right-surface counterpart
  Eigen::Matrix4cd ee = layer.H00;   // bulk

  auto normalize = [](Eigen::Matrix4cd& M, double& logn) {
    const double n = M.norm();
    if (n > 0) {
      M /= n;
      logn = std::log(n);
    } else {
      logn = -std::numeric_limits<double>::infinity();
    }
  };

  Eigen::Matrix4cd A = layer.H01, B = layer.H10;
  double P = 0, Q = 0;
  normalize(A, P);
  normalize(B, Q);

  GreensResult out;
  int it = 0;
  for (; it < max_iter; ++it) {
    if (P + Q < std::log(tol)) break;
    const Eigen::Matrix4cd g = (w - ee).inverse();
    const Eigen::Matrix4cd agb = std::exp(P + Q) * (A * g * B);
    const Eigen::Matrix4cd bga = std::exp(P + Q) * (B * g * A);
    es += agb;
    esb += bga;
    ee += agb + bga;
    Eigen::Matrix4cd A2 = A * g * A, B2 = B * g * B;
    double dP, dQ;
    normalize(A2, dP);
    normalize(B2, dQ);
    A = A2;
    P = 2 * P + dP;
    B = B2;
    Q = 2 * Q + dQ;
  }
  out.iterations = it;
  out.final_log_norm = P + Q;
  if (P + Q >= std::log(tol))
    throw MaxIterationsError("surface_greens: doubling recursion failed to converge, residual log-norm " +
                             std::to_string(P + Q));
  out.G_left = (w - es).inverse();
  out.G_right = (w - esb).inverse();
  out.G_bulk = (w - ee).inverse();
  return out;
}

std::pair<double, double> spectral_functions(const ModelParams& p, cplx E, double eta) {
  const GreensResult g = surface_greens(build_principal_layer(p), E, eta);
  const double As = -g.G_left.trace().imag() / M_PI;
  const double Ab = -g.G_bulk.trace().imag() / M_PI;
  return {As, Ab};
}

std::vector<GreensScanRow> transition_scan(const ModelParams& base,
                                           const std::vector<double>& t2_grid, double eta) {
  if (t2_grid.empty()) throw std::invalid_argument("transition_scan: empty grid");
  std::vector<GreensScanRow> rows;
  rows.reserve(t2_grid.size());
  for (double t2 : t2_grid) {
    GreensScanRow row;
    row.t2 = t2;
    ModelParams p = base;
    p.t2 = t2;
    try {
      auto [As, Ab] = spectral_functions(p, p.eps0, eta);
      row.A_surface = As;
      row.A_bulk = Ab;
    } catch (const std::exception& e) {
      row.ok = false;
      row.error = e.what();
    }
    rows.push_back(row);
  }
  return rows;
}

}  // namespace nhchain
