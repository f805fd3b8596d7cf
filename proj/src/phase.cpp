#include "nhchain/phase.hpp"

#include "nhchain/greens.hpp"
#include "nhchain/skin.hpp"
#include "nhchain/winding.hpp"

#include <cmath>

namespace nhchain {

namespace {

constexpr double kAlphaTol = 1e-9;

void set_param(ModelParams& p, const std::string& name, double v) {
  if (name == "t0") p.t0 = v;
  else if (name == "t1R") p.t1R = v;
  else if (name == "t1L") p.t1L = v;
  else if (name == "t2") p.t2 = v;
  else if (name == "eps0") p.eps0 = v;
  else throw std::invalid_argument("unknown parameter: " + name);
}

double get_param(const ModelParams& p, const std::string& name) {
  if (name == "t0") return p.t0;
  if (name == "t1R") return p.t1R;
  if (name == "t1L") return p.t1L;
  if (name == "t2") return p.t2;
  if (name == "eps0") return p.eps0;
  throw std::invalid_argument("unknown parameter: " + name);
}

}  // namespace

std::string phase_name(Phase ph) {
  switch (ph) {
    case Phase::I: return "I";
    case Phase::II: return "II";
    case Phase::III: return "III";
    case Phase::IV: return "IV";
    default: return "flagged";
  }
}

std::string skin_side_name(SkinSide s) {
  switch (s) {
    case SkinSide::left: return "left";
    case SkinSide::right: return "right";
    default: return "none";
  }
}

PhasePoint classify(const ModelParams& p) {
  PhasePoint pt;
  pt.params = p;
  try {
    const WindingReport rep = topological_criterion(p);
    pt.topological = rep.topological;
    pt.max_abs_za = std::max(std::abs(rep.za_roots[0]), std::abs(rep.za_roots[1]));
    pt.min_abs_zb = std::min(std::abs(rep.zb_roots[0]), std::abs(rep.zb_roots[1]));

    const VietaCoefficients w = vieta(p, p.eps0);
    pt.omega_diff = w.omega1 - w.omega3;

    const LocalizationProfile prof = localization_profile(p);
    pt.max_abs_alpha = prof.max_abs_alpha;
    pt.skin = pt.max_abs_alpha > kAlphaTol;

    try {
      pt.alpha_half_pi = alpha_from_theta(p, M_PI / 2.0);
    } catch (const NoRealSolutionError&) {
      pt.alpha_half_pi = std::numeric_limits<double>::quiet_NaN();
    }

    if (pt.skin) {
      double a = pt.alpha_half_pi;
      if (!std::isfinite(a)) {  // fall back to the largest-|alpha| sample
        for (std::size_t i = 0; i < prof.alpha.size(); ++i)
          if (prof.solvable[i] && std::abs(prof.alpha[i]) == pt.max_abs_alpha) a = prof.alpha[i];
      }
      pt.skin_side = (a < 0) ? SkinSide::left : SkinSide::right;
    }

    if (rep.boundary_degenerate) {
      pt.flag = "topological criterion at its boundary";
      pt.phase = Phase::Flagged;
      return pt;
    }
    if (pt.max_abs_alpha > 0.1 * kAlphaTol && pt.max_abs_alpha < 10.0 * kAlphaTol) {
      pt.flag = "skin criterion at its boundary";
      pt.phase = Phase::Flagged;
      return pt;
    }

    if (pt.topological)
      pt.phase = pt.skin ? Phase::II : Phase::I;
    else
      pt.phase = pt.skin ? Phase::III : Phase::IV;
  } catch (const std::exception& e) {
    pt.flag = e.what();
    pt.phase = Phase::Flagged;
  }
  return pt;
}

std::vector<PhasePoint> diagram(const ModelParams& base, const AxisSpec& axis1,
                                const AxisSpec& axis2, const std::optional<LinearTie>& tie) {
  if (axis1.steps < 2 || axis2.steps < 2)
    throw std::invalid_argument("diagram: need at least 2 steps per axis");
  std::vector<PhasePoint> grid;
  grid.reserve(static_cast<std::size_t>(axis1.steps) * axis2.steps);
  for (int i = 0; i < axis1.steps; ++i) {
    const double v1 = axis1.lo + (axis1.hi - axis1.lo) * i / (axis1.steps - 1);
    for (int j = 0; j < axis2.steps; ++j) {
      const double v2 = axis2.lo + (axis2.hi - axis2.lo) * j / (axis2.steps - 1);
      ModelParams p = base;
      try {
        set_param(p, axis1.name, v1);
        set_param(p, axis2.name, v2);
        if (tie) set_param(p, tie->target, get_param(p, tie->source) + tie->offset);
        grid.push_back(classify(p));
      } catch (const std::exception& e) {
        PhasePoint pt;
        pt.params = p;
        pt.flag = e.what();
        grid.push_back(pt);
      }
    }
  }
  return grid;
}

int count_eigs_in_disk(const ModelParams& p, cplx center, double radius) {
  p.require_obc();
  if (p.N % 2 != 0)
    throw std::invalid_argument("count_eigs_in_disk: even N required for 2-cell layer blocking");
  const PrincipalLayer L = build_principal_layer(p);
  const int layers = p.N / 2;

  auto total_phase = [&](cplx z) {
    const Eigen::Matrix4cd w = z * Eigen::Matrix4cd::Identity();
    Eigen::Matrix4cd S = w - L.H00;
    double ph = std::arg(S.determinant());
    for (int i = 1; i < layers; ++i) {
      S = (w - L.H00) - L.H10 * S.inverse() * L.H01;
      ph += std::arg(S.determinant());
    }
    return ph;
  };

  for (int M = 128; M <= 4096; M *= 2) {
    std::vector<double> ang(M + 1);
    for (int i = 0; i <= M; ++i)
      ang[i] = total_phase(center + std::polar(radius, 2.0 * M_PI * i / M));
    double wind = 0.0;
    bool fine = true;
    for (int i = 0; i < M; ++i) {
      double d = ang[i + 1] - ang[i];
      d = std::remainder(d, 2.0 * M_PI);
      if (std::abs(d) > 2.5) fine = false;
      wind += d;
    }
    if (fine) return static_cast<int>(std::lround(wind / (2.0 * M_PI)));
  }
  throw std::runtime_error("count_eigs_in_disk: contour refinement exhausted (eigenvalue on contour?)");
}

std::vector<FiniteSizeRow> finite_size_report(const ModelParams& base,
                                              const std::vector<int>& sizes, double lo, double hi,
                                              double step, double gap_tol) {
  double analytic = std::numeric_limits<double>::quiet_NaN();
  try {
    analytic = find_topological_transition(base, "t2", std::max(lo, 1e-6), hi);
  } catch (const std::exception&) {
  }

  std::vector<FiniteSizeRow> rows;
  for (int N : sizes) {
    if (N < 3) throw std::invalid_argument("finite_size_report: N >= 3 required");
    FiniteSizeRow row;
    row.N = N;
    row.analytic = analytic;
    ModelParams p = base;
    p.N = N + (N % 2);  // layer blocking needs even N
    bool seen_pair = false;
    for (double t2 = lo; t2 <= hi + 0.5 * step; t2 += step) {
      p.t2 = t2;
      const int c = count_eigs_in_disk(p, p.eps0, gap_tol);
      if (c == 2) {
        seen_pair = true;
      } else if (seen_pair) {
        row.transition = t2;
        break;
      }
    }
    row.drift = row.transition ? std::abs(*row.transition - analytic)
                               : std::numeric_limits<double>::quiet_NaN();
    rows.push_back(row);
  }
  return rows;
}

}  // namespace nhchain
