#include "ramsey/cavity_state.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace ramsey {

namespace {

constexpr int kMinDim = 8;
constexpr int kMaxDim = 1 << 20;

void check_eps(double eps_trunc) {
  if (!(eps_trunc > 0.0 && eps_trunc < 1.0))
    throw std::domain_error("eps_trunc must lie in (0, 1), got " +
                            std::to_string(eps_trunc));
}

void check_nbar(double nbar) {
  if (!(nbar >= 0.0))
    throw std::domain_error("mean photon number must be >= 0, got " +
                            std::to_string(nbar));
}

}  // namespace

CavityState CavityState::pure(std::vector<Complex> amplitudes) {
  if (amplitudes.empty())
    throw std::invalid_argument("pure state needs at least one amplitude");
  double norm2 = 0.0;
  for (const Complex& a : amplitudes) norm2 += std::norm(a);
  if (std::abs(norm2 - 1.0) > kNormTolerance)
    throw std::invalid_argument("pure state not normalized: |psi|^2 = " +
                                std::to_string(norm2));
  const int dim = static_cast<int>(amplitudes.size());
  return CavityState(StateKind::Pure, std::move(amplitudes), {}, dim);
}

CavityState CavityState::diagonal_mixed(std::vector<double> populations) {
  if (populations.empty())
    throw std::invalid_argument("mixed state needs at least one population");
  double total = 0.0;
  for (double p : populations) {
    if (p < 0.0)
      throw std::invalid_argument("populations must be nonnegative");
    total += p;
  }
  if (std::abs(total - 1.0) > kNormTolerance)
    throw std::invalid_argument("populations do not sum to 1: " +
                                std::to_string(total));
  const int dim = static_cast<int>(populations.size());
  return CavityState(StateKind::DiagonalMixed, {}, std::move(populations), dim);
}

const std::vector<Complex>& CavityState::amplitudes() const {
  if (kind_ != StateKind::Pure)
    throw std::logic_error("amplitudes() on a non-pure state");
  return amplitudes_;
}

const std::vector<double>& CavityState::populations() const {
  if (kind_ != StateKind::DiagonalMixed)
    throw std::logic_error("populations() on a pure state");
  return populations_;
}

double CavityState::population(int n) const {
  if (n < 0 || n >= dim_) return 0.0;
  return kind_ == StateKind::Pure ? std::norm(amplitudes_[n])
                                  : populations_[n];
}

int auto_dim(double nbar, double eps_trunc) {
  check_nbar(nbar);
  check_eps(eps_trunc);
  // Accumulate the exact Poisson weights until the mass on and beyond the
  // top level drops below eps_trunc.
  double p = std::exp(-nbar);
  double cum = 0.0;
  int k = 0;
  while (true) {
    cum += p;
    if (1.0 - cum < eps_trunc) break;
    ++k;
    if (k >= kMaxDim)
      throw std::domain_error("auto_dim: truncation did not converge");
    p *= nbar / k;
  }
  return std::max(kMinDim, k + 2);
}

CavityState coherent_state(double nbar, double eps_trunc) {
  return coherent_state(nbar, eps_trunc, auto_dim(nbar, eps_trunc));
}

CavityState coherent_state(double nbar, double eps_trunc, int dim) {
  check_nbar(nbar);
  check_eps(eps_trunc);
  if (dim < 1) throw std::domain_error("dim must be positive");
  std::vector<Complex> amps(dim);
  // amplitudes[n] = e^{-nbar/2} nbar^{n/2} / sqrt(n!), built by recurrence.
  double a = std::exp(-0.5 * nbar);
  double norm2 = 0.0;
  for (int n = 0; n < dim; ++n) {
    if (n > 0) a *= std::sqrt(nbar / n);
    amps[n] = a;
    norm2 += a * a;
  }
  if (norm2 <= 0.0)
    throw std::domain_error("coherent amplitudes underflowed; nbar too large");
  const double scale = 1.0 / std::sqrt(norm2);
  for (Complex& c : amps) c *= scale;
  return CavityState::pure(std::move(amps));
}

CavityState fock_state(int n, int dim) {
  if (dim < 1) throw std::domain_error("dim must be positive");
  if (n < 0 || n >= dim)
    throw std::domain_error("Fock level " + std::to_string(n) +
                            " outside truncation dim " + std::to_string(dim));
  std::vector<Complex> amps(dim);
  amps[n] = 1.0;
  return CavityState::pure(std::move(amps));
}

CavityState thermal_state(double nbar, double eps_trunc) {
  check_nbar(nbar);
  check_eps(eps_trunc);
  // Geometric tail: mass on and beyond level k is (nbar/(1+nbar))^k.
  const double ratio = nbar / (1.0 + nbar);
  int dim = kMinDim;
  if (ratio > 0.0) {
    const int k = static_cast<int>(
                      std::ceil(std::log(eps_trunc) / std::log(ratio))) +
                  1;
    dim = std::max(kMinDim, k + 1);
  }
  std::vector<double> pops(dim);
  double p = 1.0 / (1.0 + nbar);
  double total = 0.0;
  for (int n = 0; n < dim; ++n) {
    pops[n] = p;
    total += p;
    p *= ratio;
  }
  for (double& q : pops) q /= total;
  return CavityState::diagonal_mixed(std::move(pops));
}

double mean_photon_number(const CavityState& state) {
  double mean = 0.0;
  for (int n = 0; n < state.dim(); ++n) mean += n * state.population(n);
  return mean;
}

}  // namespace ramsey
