#pragma once
// Phase classification (I..IV) and the two-axis phase diagram, plus the
// finite-size transition report.

#include "nhchain/model.hpp"

#include <optional>
#include <string>
#include <vector>

namespace nhchain {

enum class Phase { I, II, III, IV, Flagged };
enum class SkinSide { left, right, none };

std::string phase_name(Phase ph);
std::string skin_side_name(SkinSide s);

struct PhasePoint {
  ModelParams params;
  Phase phase = Phase::Flagged;
  bool topological = false;
  bool skin = false;
  SkinSide skin_side = SkinSide::none;
  double max_abs_alpha = 0.0;
  // evidence
  double max_abs_za = 0.0;
  double min_abs_zb = 0.0;
  double omega_diff = 0.0;      // omega1 - omega3
  double alpha_half_pi = 0.0;   // alpha at theta = pi/2 (NaN when unsolvable)
  std::string flag;             // nonempty when unclassifiable / errored
};

PhasePoint classify(const ModelParams& p);

struct AxisSpec {
  std::string name;  // t0 | t1R | t1L | t2 | eps0
  double lo = 0.0, hi = 1.0;
  int steps = 2;
};

// Linear tie applied before classification, e.g. t1R = t1L + 0.5.
struct LinearTie {
  std::string target, source;
  double offset = 0.0;
};

// Row-major grid over (axis1, axis2); per-point failures are flagged in
// place and never abort the sweep.
std::vector<PhasePoint> diagram(const ModelParams& base, const AxisSpec& axis1,
                                const AxisSpec& axis2,
                                const std::optional<LinearTie>& tie = std::nullopt);

// Number of OBC eigenvalues inside the disk |E - center| < radius, computed
// by the argument principle on det(zI - H) with the block-tridiagonal
// determinant recursion (stable where dense eigensolvers are not).
int count_eigs_in_disk(const ModelParams& p, cplx center, double radius);

struct FiniteSizeRow {
  int N = 0;
  std::optional<double> transition;  // absent when no detection in the sweep
  double analytic = 0.0;
  double drift = 0.0;  // |transition - analytic| (NaN when absent)
};

// Sweeps t2 upward; the empirical transition is the smallest t2 where the
// disk of radius gap_tol around eps0 no longer holds exactly the 2 zero
// modes.  gap_tol default 1e-2 (see README on detector calibration).
std::vector<FiniteSizeRow> finite_size_report(const ModelParams& base,
                                              const std::vector<int>& sizes, double lo = 0.0,
                                              double hi = 0.8, double step = 0.005,
                                              double gap_tol = 1e-2);

}  // namespace nhchain
