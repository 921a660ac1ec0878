#pragma once

#include <optional>
#include <vector>

#include "ramsey/cavity_state.hpp"

namespace ramsey {

// Interaction parameters of one cavity crossing: the vacuum Rabi phase
// theta = Omega*tau and the detuning lambda normalized to twice the Rabi
// frequency.
struct JcParams {
  double theta = 0.0;
  double lambda = 0.0;

  JcParams(double theta_, double lambda_ = 0.0);
};

// Per-level coefficients of the two branch operators, plus the branch
// weights once a state is folded in:
//   s[n] = sin(theta*sqrt(n+1+lambda^2)) / sqrt(n+1+lambda^2)
//   c[n] = cos(theta*sqrt(n+1+lambda^2)) + i*lambda*s[n]
// The upper branch acts diagonally as conj(c[n]); the lower branch adds a
// photon, |n> -> s[n]*sqrt(n+1)*|n+1>. Pointwise, |c[n]|^2 + (n+1)*s[n]^2 = 1.
struct BranchData {
  std::vector<double> s;
  std::vector<Complex> c;
  double w_plus = 0.0;
  double w_minus = 0.0;
};

// Branch weights only.
struct BranchWeights {
  double w_plus = 0.0;
  double w_minus = 0.0;
};

// Conditional detector states given the atom took the upper (+) or lower (-)
// way. A side is disengaged (nullopt) when its branch weight falls below
// kMinBranchWeight; the weight is still reported.
struct ConditionalStates {
  std::optional<CavityState> rho_plus;
  std::optional<CavityState> rho_minus;
  double w_plus = 0.0;
  double w_minus = 0.0;
};

// Branch weight below which a conditional state is reported undefined.
constexpr double kMinBranchWeight = 1e-12;

// s,c arrays of length dim (weights left zero).
BranchData branch_coefficients(const JcParams& params, int dim);

// s,c with one extra level of headroom plus the branch weights for `state`.
BranchData branch_data(const CavityState& state, const JcParams& params);

// w_plus = sum_n p_n |c_n|^2, w_minus = sum_n p_n s_n^2 (n+1).
BranchWeights branch_weights(const CavityState& state, const JcParams& params);

// <S a C> over the initial state; exactly zero for diagonal mixtures.
Complex coherence_term(const CavityState& state, const JcParams& params);

// Inner product <B+ psi | B- psi> of the unnormalized conditional vectors,
// i.e. <psi| C a'S |psi>. Pure states only.
Complex branch_overlap(const CavityState& state, const JcParams& params);

ConditionalStates conditional_states(const CavityState& state,
                                     const JcParams& params);

namespace detail {

// Unnormalized branch vectors B+|psi> and B-|psi>, both of length dim+1.
// Shared by the duality measures so singular weights can be resolved by the
// direction of the vanishing vector.
struct BranchVectors {
  std::vector<Complex> plus;
  std::vector<Complex> minus;
};
BranchVectors branch_vectors(const CavityState& state, const JcParams& params);

// Unnormalized conditional populations (summing to w+/w-) for diagonal
// mixtures, both of length dim+1.
struct BranchPopulations {
  std::vector<double> plus;
  std::vector<double> minus;
};
BranchPopulations branch_populations(const CavityState& state,
                                     const JcParams& params);

}  // namespace detail

}  // namespace ramsey
