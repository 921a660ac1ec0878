#pragma once

#include <vector>

#include "ramsey/cavity_state.hpp"
#include "ramsey/jc_branch.hpp"

namespace ramsey {

// Sampled interferometer output versus the phase-shifter setting phi.
// The grid spans one full period [0, 2pi] inclusive of both endpoints, so
// the canonical 721-point scan steps in half degrees and quarter-period
// features land exactly on grid points.
struct FringeScan {
  std::vector<double> phi_values;
  std::vector<double> p_a;
  double extracted_visibility = 0.0;  // (max - min) / (max + min)
  double extracted_phase = 0.0;       // phi of the fringe maximum
};

// Output probabilities (p_a, p_b) after beam splitter, +-phi/2 phase shift
// and the pi/2 beam merger, traced over the detector. Both are computed from
// the composite state; p_b is not derived as 1 - p_a.
struct FringeProbabilities {
  double p_a = 0.0;
  double p_b = 0.0;
};

FringeProbabilities fringe_probabilities(const CavityState& state,
                                         const JcParams& params, double phi);

double fringe_probability(const CavityState& state, const JcParams& params,
                          double phi);

FringeScan fringe_scan(const CavityState& state, const JcParams& params,
                       int n_points = 721);

// Mean of p_a over the scan with periodic weighting (the shared endpoint
// counts once); exactly 1/2 for the cosine fringes this pipeline produces.
double scan_mean(const FringeScan& scan);

}  // namespace ramsey
