#include "ramsey/duality.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "ramsey/errors.hpp"

namespace ramsey {

namespace {

double norm2_of(const std::vector<Complex>& v) {
  double acc = 0.0;
  for (const Complex& a : v) acc += std::norm(a);
  return acc;
}

Complex inner(const std::vector<Complex>& u, const std::vector<Complex>& v) {
  Complex acc(0.0, 0.0);
  for (size_t k = 0; k < u.size(); ++k) acc += std::conj(u[k]) * v[k];
  return acc;
}

double sum_of(const std::vector<double>& v) {
  double acc = 0.0;
  for (double x : v) acc += x;
  return acc;
}

// |<u+|u->| between the normalized conditional pure states; 0 when a branch
// vector vanishes identically (the weighted formulas carry the zero weight).
double normalized_overlap_abs(const CavityState& state,
                              const JcParams& params) {
  const auto v = detail::branch_vectors(state, params);
  const double np = std::sqrt(norm2_of(v.plus));
  const double nm = std::sqrt(norm2_of(v.minus));
  if (np == 0.0 || nm == 0.0) return 0.0;
  const double o = std::abs(inner(v.plus, v.minus)) / (np * nm);
  return std::min(o, 1.0);
}

}  // namespace

double predictability(double w_plus, double w_minus) {
  if (std::abs(w_plus + w_minus - 1.0) > 1e-8)
    throw std::invalid_argument("branch weights do not sum to 1: " +
                                std::to_string(w_plus + w_minus));
  return std::abs(w_plus - w_minus);
}

Visibility visibility(const CavityState& state, const JcParams& params) {
  Visibility vis;
  vis.V = 2.0 * std::abs(coherence_term(state, params));
  vis.V_internal =
      state.is_pure() ? 2.0 * std::abs(branch_overlap(state, params)) : 0.0;
  return vis;
}

double quality(const CavityState& state, const JcParams& params) {
  if (state.is_pure()) {
    const auto v = detail::branch_vectors(state, params);
    const double np2 = norm2_of(v.plus);
    const double nm2 = norm2_of(v.minus);
    if (np2 == 0.0 || nm2 == 0.0)
      throw UndefinedQuantityError(
          "quality undefined: a branch vector vanishes identically");
    double o = std::abs(inner(v.plus, v.minus)) / std::sqrt(np2 * nm2);
    o = std::min(o, 1.0);
    return std::sqrt(std::max(0.0, 1.0 - o * o));
  }
  const auto bp = detail::branch_populations(state, params);
  const double sp = sum_of(bp.plus);
  const double sm = sum_of(bp.minus);
  if (sp <= 0.0 || sm <= 0.0)
    throw UndefinedQuantityError(
        "quality undefined: a conditional mixture vanishes identically");
  double acc = 0.0;
  for (size_t l = 0; l < bp.plus.size(); ++l)
    acc += std::abs(bp.plus[l] / sp - bp.minus[l] / sm);
  return 0.5 * acc;
}

double distinguishability(const CavityState& state, const JcParams& params) {
  if (state.is_pure()) {
    const BranchWeights w = branch_weights(state, params);
    const double o = normalized_overlap_abs(state, params);
    return std::sqrt(
        std::max(0.0, 1.0 - 4.0 * w.w_plus * w.w_minus * o * o));
  }
  // Diagonal conditionals never overlap off-diagonally, so the trace norm is
  // the l1 distance of the weighted populations.
  const auto bp = detail::branch_populations(state, params);
  double acc = 0.0;
  for (size_t l = 0; l < bp.plus.size(); ++l)
    acc += std::abs(bp.plus[l] - bp.minus[l]);
  return acc;
}

DualityReport duality_report(const CavityState& state, const JcParams& params) {
  DualityReport rep;
  const BranchWeights w = branch_weights(state, params);
  rep.w_plus = w.w_plus;
  rep.w_minus = w.w_minus;
  rep.P = predictability(w.w_plus, w.w_minus);
  const Visibility vis = visibility(state, params);
  rep.V = vis.V;
  rep.V_internal = vis.V_internal;
  rep.Q = quality(state, params);
  rep.D = distinguishability(state, params);
  const double p2 = rep.P * rep.P;
  const double vi2 = rep.V_internal * rep.V_internal;
  rep.lhs_eq2 = (1.0 - p2) * rep.Q * rep.Q + p2 + vi2;
  if (state.is_pure()) {
    rep.residual_eq3 = std::abs(rep.lhs_eq2 - 1.0);
    rep.residual_dqp = std::abs(rep.D * rep.D - (1.0 - vi2));
  }
  return rep;
}

}  // namespace ramsey
