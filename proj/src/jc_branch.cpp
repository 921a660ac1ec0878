#include "ramsey/jc_branch.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace ramsey {

JcParams::JcParams(double theta_, double lambda_)
    : theta(theta_), lambda(lambda_) {
  if (!(theta >= 0.0))
    throw std::domain_error("theta must be >= 0, got " +
                            std::to_string(theta_));
  if (!std::isfinite(lambda))
    throw std::domain_error("lambda must be finite");
}

BranchData branch_coefficients(const JcParams& params, int dim) {
  if (dim < 1) throw std::domain_error("dim must be positive");
  BranchData bd;
  bd.s.resize(dim);
  bd.c.resize(dim);
  const double lam2 = params.lambda * params.lambda;
  for (int n = 0; n < dim; ++n) {
    const double rho = std::sqrt(n + 1 + lam2);
    const double sn = std::sin(params.theta * rho) / rho;
    bd.s[n] = sn;
    bd.c[n] = Complex(std::cos(params.theta * rho), params.lambda * sn);
  }
  return bd;
}

BranchData branch_data(const CavityState& state, const JcParams& params) {
  BranchData bd = branch_coefficients(params, state.dim() + 1);
  double wp = 0.0, wm = 0.0;
  for (int n = 0; n < state.dim(); ++n) {
    const double pn = state.population(n);
    wp += pn * std::norm(bd.c[n]);
    wm += pn * bd.s[n] * bd.s[n] * (n + 1);
  }
  bd.w_plus = wp;
  bd.w_minus = wm;
  return bd;
}

BranchWeights branch_weights(const CavityState& state, const JcParams& params) {
  const BranchData bd = branch_data(state, params);
  return {bd.w_plus, bd.w_minus};
}

Complex coherence_term(const CavityState& state, const JcParams& params) {
  if (!state.is_pure()) return Complex(0.0, 0.0);  // a-shift kills diagonals
  const BranchData bd = branch_coefficients(params, state.dim());
  const auto& psi = state.amplitudes();
  Complex acc(0.0, 0.0);
  for (int n = 1; n < state.dim(); ++n)
    acc += std::conj(psi[n - 1]) * psi[n] * std::sqrt(double(n)) *
           bd.s[n - 1] * bd.c[n];
  return acc;
}

Complex branch_overlap(const CavityState& state, const JcParams& params) {
  if (!state.is_pure())
    throw std::invalid_argument("branch_overlap requires a pure state");
  const BranchData bd = branch_coefficients(params, state.dim() + 1);
  const auto& psi = state.amplitudes();
  // <C'psi | a'S psi> = sum_n c[n+1] conj(psi[n+1]) s[n] sqrt(n+1) psi[n]
  Complex acc(0.0, 0.0);
  for (int n = 0; n + 1 < state.dim(); ++n)
    acc += bd.c[n + 1] * std::conj(psi[n + 1]) * bd.s[n] *
           std::sqrt(double(n + 1)) * psi[n];
  return acc;
}

namespace detail {

BranchVectors branch_vectors(const CavityState& state, const JcParams& params) {
  const auto& psi = state.amplitudes();
  const BranchData bd = branch_coefficients(params, state.dim() + 1);
  BranchVectors v;
  v.plus.assign(state.dim() + 1, Complex(0.0, 0.0));
  v.minus.assign(state.dim() + 1, Complex(0.0, 0.0));
  for (int n = 0; n < state.dim(); ++n) {
    v.plus[n] = std::conj(bd.c[n]) * psi[n];
    v.minus[n + 1] = bd.s[n] * std::sqrt(double(n + 1)) * psi[n];
  }
  return v;
}

BranchPopulations branch_populations(const CavityState& state,
                                     const JcParams& params) {
  const BranchData bd = branch_coefficients(params, state.dim() + 1);
  BranchPopulations bp;
  bp.plus.assign(state.dim() + 1, 0.0);
  bp.minus.assign(state.dim() + 1, 0.0);
  for (int n = 0; n < state.dim(); ++n) {
    const double pn = state.population(n);
    bp.plus[n] = pn * std::norm(bd.c[n]);
    bp.minus[n + 1] = pn * bd.s[n] * bd.s[n] * (n + 1);
  }
  return bp;
}

}  // namespace detail

namespace {

std::optional<CavityState> normalized_pure(const std::vector<Complex>& vec,
                                           double weight) {
  if (weight < kMinBranchWeight) return std::nullopt;
  double norm2 = 0.0;
  for (const Complex& a : vec) norm2 += std::norm(a);
  if (norm2 <= 0.0) return std::nullopt;
  std::vector<Complex> out(vec);
  const double scale = 1.0 / std::sqrt(norm2);
  for (Complex& a : out) a *= scale;
  return CavityState::pure(std::move(out));
}

std::optional<CavityState> normalized_mixed(const std::vector<double>& pops,
                                            double weight) {
  if (weight < kMinBranchWeight) return std::nullopt;
  double total = 0.0;
  for (double p : pops) total += p;
  if (total <= 0.0) return std::nullopt;
  std::vector<double> out(pops);
  for (double& p : out) p /= total;
  return CavityState::diagonal_mixed(std::move(out));
}

}  // namespace

ConditionalStates conditional_states(const CavityState& state,
                                     const JcParams& params) {
  const BranchWeights w = branch_weights(state, params);
  ConditionalStates cs;
  cs.w_plus = w.w_plus;
  cs.w_minus = w.w_minus;
  if (state.is_pure()) {
    const auto v = detail::branch_vectors(state, params);
    cs.rho_plus = normalized_pure(v.plus, w.w_plus);
    cs.rho_minus = normalized_pure(v.minus, w.w_minus);
  } else {
    const auto p = detail::branch_populations(state, params);
    cs.rho_plus = normalized_mixed(p.plus, w.w_plus);
    cs.rho_minus = normalized_mixed(p.minus, w.w_minus);
  }
  return cs;
}

}  // namespace ramsey
