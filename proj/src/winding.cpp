#include "nhchain/winding.hpp"

#include "nhchain/dense.hpp"

#include <algorithm>
#include <cmath>

namespace nhchain {

namespace {

// h_a cleared of its z^-2 pole: t0 z^2 + t1R z + t2, coefficients low->high.
std::vector<cplx> cleared_poly(Factor f, const ModelParams& p) {
  if (f == Factor::a) return {p.t2, p.t1R, p.t0};
  return {p.t0, p.t1L, p.t2};
}

std::vector<cplx> finite_zeros(Factor f, const ModelParams& p) {
  auto c = cleared_poly(f, p);
  if (f == Factor::a) {
    // clearing the z^-2 pole multiplies h_a by z^2; when trailing hopping
    // terms vanish that manufactures roots at z = 0 which are not zeros of
    // h_a (the pole order is reduced instead, see pole_order)
    while (c.size() > 1 && std::abs(c.front()) == 0.0) c.erase(c.begin());
  }
  auto roots = poly_roots(c);
  std::sort(roots.begin(), roots.end(),
            [](const cplx& x, const cplx& y) { return std::abs(x) < std::abs(y); });
  return roots;
}

// pole order of the factor at z = 0 (2 for h_a, 0 for h_b, reduced when
// trailing coefficients vanish and a power of z cancels)
int pole_order(Factor f, const ModelParams& p) {
  if (f == Factor::b) return 0;
  int order = 2;
  auto c = cleared_poly(f, p);
  for (std::size_t i = 0; i < c.size() && order > 0; ++i) {
    if (std::abs(c[i]) != 0.0) break;
    --order;
  }
  return order;
}

int contour_winding(Factor f, const ModelParams& p, double R) {
  const BlochFactors bf = bloch_factors(p);
  const int M = 4096;
  double acc = 0.0;
  cplx prev = (f == Factor::a) ? bf.ha(cplx(R, 0.0)) : bf.hb(cplx(R, 0.0));
  for (int i = 1; i <= M; ++i) {
    const cplx z = std::polar(R, 2.0 * M_PI * i / M);
    const cplx h = (f == Factor::a) ? bf.ha(z) : bf.hb(z);
    acc += std::arg(h / prev);
    prev = h;
  }
  return static_cast<int>(std::lround(acc / (2.0 * M_PI)));
}

void set_param(ModelParams& p, const std::string& name, double v) {
  if (name == "t0") p.t0 = v;
  else if (name == "t1R") p.t1R = v;
  else if (name == "t1L") p.t1L = v;
  else if (name == "t2") p.t2 = v;
  else if (name == "eps0") p.eps0 = v;
  else throw std::invalid_argument("unknown sweep parameter: " + name);
}

}  // namespace

std::pair<std::array<cplx, 2>, std::array<cplx, 2>> offdiag_roots(const ModelParams& p) {
  if (p.t0 == 0.0 || p.t2 == 0.0)
    throw DegenerateModelError("offdiag_roots: t0 = 0 or t2 = 0 reduces the root count");
  auto za = finite_zeros(Factor::a, p);
  auto zb = finite_zeros(Factor::b, p);
  // residual polish: one Newton step per root keeps |poly(root)| tiny
  auto polish = [](std::vector<cplx>& roots, const std::vector<cplx>& c) {
    for (auto& z : roots) {
      const cplx f = c[0] + c[1] * z + c[2] * z * z;
      const cplx df = c[1] + 2.0 * c[2] * z;
      if (std::abs(df) > 0) z -= f / df;
    }
  };
  polish(za, cleared_poly(Factor::a, p));
  polish(zb, cleared_poly(Factor::b, p));
  return {{za[0], za[1]}, {zb[0], zb[1]}};
}

int winding_number(Factor f, const ModelParams& p, double R) {
  if (R <= 0) throw std::invalid_argument("winding_number: R must be positive");
  const auto zeros = finite_zeros(f, p);
  int inside = 0;
  for (const cplx& z : zeros) {
    if (std::abs(std::abs(z) - R) < 1e-9)
      throw ContourOnRootError("winding_number: root within 1e-9 of the contour");
    if (std::abs(z) < R) ++inside;
  }
  const int analytic = inside - pole_order(f, p);
  const int numeric = contour_winding(f, p, R);
  if (analytic != numeric)
    throw std::runtime_error("winding_number: contour phase accumulation disagrees with root count");
  return analytic;
}

double criterion_margin(const ModelParams& p) {
  const auto za = finite_zeros(Factor::a, p);
  const auto zb = finite_zeros(Factor::b, p);
  if (za.empty() || zb.empty())
    throw DegenerateModelError("criterion_margin: an off-diagonal factor has no zeros");
  double max_za = 0.0, min_zb = std::numeric_limits<double>::infinity();
  for (const cplx& z : za) max_za = std::max(max_za, std::abs(z));
  for (const cplx& z : zb) min_zb = std::min(min_zb, std::abs(z));
  return max_za - min_zb;
}

WindingReport topological_criterion(const ModelParams& p) {
  WindingReport rep;
  auto [za, zb] = offdiag_roots(p);
  rep.za_roots = za;
  rep.zb_roots = zb;
  const double max_za = std::max(std::abs(za[0]), std::abs(za[1]));
  const double min_zb = std::min(std::abs(zb[0]), std::abs(zb[1]));
  // A conjugate pair has both moduli pinned at sqrt(|t2/t0|) (resp. the
  // reciprocal), so a zero margin there is structural — the non-topological
  // verdict is robust, not a transition; only a transversal zero is flagged.
  const bool pinned = std::abs(za[0].imag()) > 1e-12 * std::abs(za[0]) &&
                      std::abs(zb[0].imag()) > 1e-12 * std::abs(zb[0]);
  rep.boundary_degenerate = std::abs(max_za - min_zb) < 1e-10 && !pinned;
  rep.topological = max_za - min_zb > 1e-10;
  if (rep.topological) {
    const double R = std::sqrt(max_za * min_zb);
    const int wa = winding_number(Factor::a, p, R);
    const int wb = winding_number(Factor::b, p, R);
    if (wa * wb < 0) rep.witness_radius = R;
  }
  return rep;
}

bool topological_radius_scan(const ModelParams& p) {
  std::vector<double> moduli;
  for (Factor f : {Factor::a, Factor::b})
    for (const cplx& z : finite_zeros(f, p))
      if (std::abs(z) > 0) moduli.push_back(std::abs(z));
  if (moduli.empty()) return false;
  const double lo = 0.5 * *std::min_element(moduli.begin(), moduli.end());
  const double hi = 2.0 * *std::max_element(moduli.begin(), moduli.end());
  for (int i = 0; i < 256; ++i) {
    const double R = lo * std::pow(hi / lo, (i + 0.5) / 256.0);
    try {
      if (winding_number(Factor::a, p, R) * winding_number(Factor::b, p, R) < 0) return true;
    } catch (const ContourOnRootError&) {
      continue;
    }
  }
  return false;
}

double find_topological_transition(const ModelParams& base, const std::string& sweep,
                                   double lo, double hi) {
  auto margin_at = [&](double v) {
    ModelParams p = base;
    set_param(p, sweep, v);
    return criterion_margin(p);
  };
  double flo = margin_at(lo), fhi = margin_at(hi);
  if (flo == 0.0) return lo;
  if (fhi == 0.0) return hi;
  if ((flo > 0) == (fhi > 0))
    throw NoBracketError("find_topological_transition: criterion verdict equal at both endpoints");
  while (hi - lo > 1e-6) {
    const double mid = 0.5 * (lo + hi);
    const double fm = margin_at(mid);
    if (fm == 0.0) return mid;
    if ((fm > 0) == (flo > 0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace nhchain
