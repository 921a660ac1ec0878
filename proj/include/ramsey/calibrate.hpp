#pragma once

#include <string>
#include <vector>

#include "ramsey/cavity_state.hpp"
#include "ramsey/duality.hpp"

namespace ramsey {

enum class CalibrationTarget { Symmetric, MaxAsymmetric };

struct CalibrationResult {
  double theta_star = 0.0;
  double achieved_P = 0.0;
  CalibrationTarget target = CalibrationTarget::Symmetric;
  double residual = 0.0;  // |w+ - w-| for Symmetric, 1 - P for MaxAsymmetric
  long evaluations = 0;
};

// Search window and coarse-grid resolution for both calibrations. The first
// oscillation of w+ - w- is well resolved for truncation dims up to ~1e4.
constexpr double kThetaMax = 6.283185307179586476925286766559;  // 2 pi
constexpr int kThetaGridPoints = 4096;

// Smallest theta > 0 with w+(theta) = w-(theta), located by scanning
// w+ - w- on the coarse grid and resolving the first sign change by
// bisection (tangential zeros, where the difference touches zero without
// changing sign, are resolved by golden-section on its magnitude).
// Throws CalibrationError if no root exists in (0, kThetaMax].
CalibrationResult calibrate_symmetric(const CavityState& state, double lambda);

// Maximizer of P(theta) = |w+ - w-| over (0, kThetaMax]: dense coarse grid
// followed by golden-section refinement; ties resolve to the lower theta.
// The achieved P is reported as found and may be < 1.
CalibrationResult calibrate_asymmetric(const CavityState& state,
                                       double lambda);

// One row of the coherent-state sweep. Calibration failures are flagged
// rather than aborting the sweep.
struct SweepRow {
  double nbar = 0.0;
  double theta = 0.0;
  double P2 = 0.0;
  double Q2 = 0.0;
  double D2 = 0.0;
  double V2 = 0.0;
  double lhs_eq2 = 0.0;
  bool ok = true;
  std::string error;
};

// Per-nbar calibration and duality report over a coherent-state grid.
// Rows are computed in parallel (RAMSEY_WORKERS, default: hardware
// concurrency) and returned in input order.
std::vector<SweepRow> sweep_figure2(CalibrationTarget regime,
                                    const std::vector<double>& nbar_grid,
                                    double lambda,
                                    double eps_trunc = kDefaultEpsTrunc);

}  // namespace ramsey
