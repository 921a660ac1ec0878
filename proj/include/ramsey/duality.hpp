#pragma once

#include <optional>

#include "ramsey/cavity_state.hpp"
#include "ramsey/jc_branch.hpp"

namespace ramsey {

// Fringe visibility in the two conventions carried by this library: V is
// 2|<S a C>|; V_internal is 2|<B+ psi|B- psi>|. They coincide at lambda = 0;
// the identity checks are exact in the internal convention only.
struct Visibility {
  double V = 0.0;
  double V_internal = 0.0;
};

// All duality quantities for one (state, params) configuration, plus the
// identity residuals. The residuals apply to pure preparations only and are
// empty for diagonal mixtures, where the weaker inequality lhs_eq2 <= 1 is
// the statement being checked.
struct DualityReport {
  double w_plus = 0.0;
  double w_minus = 0.0;
  double P = 0.0;
  double V = 0.0;
  double V_internal = 0.0;
  double Q = 0.0;
  double D = 0.0;
  std::optional<double> residual_eq3;  // |(1-P^2)Q^2 + P^2 + V_int^2 - 1|
  std::optional<double> residual_dqp;  // |D^2 - (1 - V_int^2)|
  double lhs_eq2 = 0.0;                // (1-P^2)Q^2 + P^2 + V_int^2
};

// P = |w_plus - w_minus|; requires w_plus + w_minus = 1 within 1e-8.
double predictability(double w_plus, double w_minus);

Visibility visibility(const CavityState& state, const JcParams& params);

// Trace distance of the normalized conditional detector states. Singular
// branch weights are resolved by the direction of the vanishing branch
// vector; throws UndefinedQuantityError if that direction vanishes too.
double quality(const CavityState& state, const JcParams& params);

// Trace norm of w+ rho+ - w- rho-, via closed forms (no eigensolver).
double distinguishability(const CavityState& state, const JcParams& params);

DualityReport duality_report(const CavityState& state, const JcParams& params);

}  // namespace ramsey
