#pragma once

#include <complex>
#include <vector>

namespace ramsey {

using Complex = std::complex<double>;

enum class StateKind { Pure, DiagonalMixed };

// Truncated Fock-space representation of the cavity-mode state.
// Pure states carry an amplitude vector, diagonal mixtures a population
// vector; both live on levels 0..dim-1 and are immutable after construction.
class CavityState {
public:
  static CavityState pure(std::vector<Complex> amplitudes);
  static CavityState diagonal_mixed(std::vector<double> populations);

  StateKind kind() const { return kind_; }
  bool is_pure() const { return kind_ == StateKind::Pure; }
  int dim() const { return dim_; }

  // Pure kind only; throws otherwise.
  const std::vector<Complex>& amplitudes() const;
  // DiagonalMixed kind only; throws otherwise.
  const std::vector<double>& populations() const;

  // Occupation probability of level n (valid for both kinds).
  double population(int n) const;

private:
  CavityState(StateKind kind, std::vector<Complex> amps,
              std::vector<double> pops, int dim)
      : kind_(kind), amplitudes_(std::move(amps)),
        populations_(std::move(pops)), dim_(dim) {}

  StateKind kind_;
  std::vector<Complex> amplitudes_;
  std::vector<double> populations_;
  int dim_;
};

constexpr double kDefaultEpsTrunc = 1e-12;
constexpr double kNormTolerance = 1e-10;

// Smallest dim (>= 8) such that the Poisson distribution with mean nbar has
// weight < eps_trunc on and beyond level dim-1. The top level is therefore
// essentially unoccupied, leaving headroom for the photon-adding branch.
int auto_dim(double nbar, double eps_trunc = kDefaultEpsTrunc);

// Coherent state |alpha> with alpha = sqrt(nbar) (real, nonnegative phase
// convention). Truncated at auto_dim and renormalized.
CavityState coherent_state(double nbar, double eps_trunc = kDefaultEpsTrunc);
// Same, with an explicit truncation dimension (convergence studies).
CavityState coherent_state(double nbar, double eps_trunc, int dim);

// Fock state |n> embedded in a dim-level space.
CavityState fock_state(int n, int dim);

// Thermal (geometric) mixture with mean photon number nbar, truncated at the
// analogous geometric-tail dimension and renormalized.
CavityState thermal_state(double nbar, double eps_trunc = kDefaultEpsTrunc);

// Mean photon number of the state.
double mean_photon_number(const CavityState& state);

}  // namespace ramsey
