#pragma once
// Iterative (doubling) surface and bulk Green's functions for the
// semi-infinite lattice, with independent forward/backward coupling tracks
// for the non-reciprocal case.

#include "nhchain/model.hpp"

#include <string>
#include <vector>

namespace nhchain {

// Principal layer = 2 unit cells, basis (A1, B1, A2, B2); minimal blocking
// that makes the t2 bonds nearest-neighbor between blocks.
struct PrincipalLayer {
  Eigen::Matrix4cd H00, H01, H10;
};

struct MaxIterationsError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct GreensResult {
  Eigen::Matrix4cd G_left;   // self-energy from the right half-line only
  Eigen::Matrix4cd G_right;  // self-energy from the left half-line only
  Eigen::Matrix4cd G_bulk;   // both sides
  int iterations = 0;
  double final_log_norm = 0.0;  // log of the residual coupling product norm
};

PrincipalLayer build_principal_layer(const ModelParams& p);

// Doubling recursion on log-scaled coupling iterates (the raw products
// overflow in the skin regime before the eta broadening damps them).
GreensResult surface_greens(const PrincipalLayer& layer, cplx E, double eta,
                            double tol = 1e-12, int max_iter = 100);

// A = -(1/pi) Im Tr G at probe E + i eta; (surface-left, bulk).
std::pair<double, double> spectral_functions(const ModelParams& p, cplx E, double eta);

struct GreensScanRow {
  double t2 = 0.0;
  double A_surface = 0.0;
  double A_bulk = 0.0;
  bool ok = true;
  std::string error;
};

// Fixed probe E = eps0; one row per grid point, failures tagged in place.
std::vector<GreensScanRow> transition_scan(const ModelParams& base,
                                           const std::vector<double>& t2_grid,
                                           double eta = 1e-3);

}  // namespace nhchain
