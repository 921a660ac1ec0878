#include <cmath>
#include <stdexcept>

#include "doctest.h"
#include "ramsey/cavity_state.hpp"

using namespace ramsey;

namespace {

// Independent closed form: |<n|alpha>|-style amplitude via factorials,
// usable up to n ~ 20 before the factorial loses precision.
double poisson_amplitude(double nbar, int n) {
  double fact = 1.0;
  for (int k = 2; k <= n; ++k) fact *= k;
  return std::exp(-0.5 * nbar) * std::pow(nbar, 0.5 * n) / std::sqrt(fact);
}

double norm_sum(const CavityState& s) {
  double total = 0.0;
  for (int n = 0; n < s.dim(); ++n) total += s.population(n);
  return total;
}

}  // namespace

TEST_CASE("vacuum coherent state") {
  const CavityState s = coherent_state(0.0);
  CHECK(s.is_pure());
  CHECK(s.dim() == 8);
  CHECK(s.amplitudes()[0].real() == doctest::Approx(1.0).epsilon(1e-14));
  for (int n = 1; n < s.dim(); ++n)
    CHECK(std::abs(s.amplitudes()[n]) == 0.0);
}

TEST_CASE("coherent amplitudes match the factorial closed form") {
  for (double nbar : {0.25, 1.0, 4.0, 9.0}) {
    const CavityState s = coherent_state(nbar);
    for (int n = 0; n <= 20 && n < s.dim(); ++n) {
      CHECK(s.amplitudes()[n].imag() == 0.0);
      CHECK(s.amplitudes()[n].real() ==
            doctest::Approx(poisson_amplitude(nbar, n)).epsilon(1e-12));
    }
  }
  // nbar = 1: first two amplitudes are both e^{-1/2}
  const CavityState s1 = coherent_state(1.0);
  CHECK(s1.amplitudes()[0].real() ==
        doctest::Approx(std::exp(-0.5)).epsilon(1e-14));
  CHECK(s1.amplitudes()[1].real() ==
        doctest::Approx(std::exp(-0.5)).epsilon(1e-14));
}

TEST_CASE("coherent normalization and mean") {
  for (double nbar : {0.0, 1.0, 10.0, 100.0, 200.0}) {
    const CavityState s = coherent_state(nbar);
    CHECK(std::abs(norm_sum(s) - 1.0) <= 1e-10);
    const double tol = std::max(1e-8, kDefaultEpsTrunc * nbar * 10.0);
    CHECK(std::abs(mean_photon_number(s) - nbar) <= tol);
  }
  CHECK(coherent_state(100.0).dim() >= 100);
}

TEST_CASE("coherent-state domain errors") {
  CHECK_THROWS_AS((void)coherent_state(-0.5), std::domain_error);
  CHECK_THROWS_AS((void)coherent_state(1.0, 0.0), std::domain_error);
  CHECK_THROWS_AS((void)coherent_state(1.0, 1.5), std::domain_error);
}

TEST_CASE("fock states") {
  const CavityState s0 = fock_state(0, 4);
  CHECK(std::abs(s0.amplitudes()[0] - Complex(1.0, 0.0)) == 0.0);
  const CavityState s1 = fock_state(1, 4);
  CHECK(std::abs(s1.amplitudes()[1] - Complex(1.0, 0.0)) == 0.0);
  CHECK(std::abs(s1.amplitudes()[0]) == 0.0);
  CHECK_THROWS_AS((void)fock_state(4, 4), std::domain_error);
  CHECK_THROWS_AS((void)fock_state(-1, 4), std::domain_error);
}

TEST_CASE("thermal states follow the geometric distribution") {
  const CavityState zero = thermal_state(0.0);
  CHECK(zero.populations()[0] == doctest::Approx(1.0).epsilon(1e-14));

  const CavityState one = thermal_state(1.0);
  CHECK(one.populations()[0] == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(one.populations()[1] == doctest::Approx(0.25).epsilon(1e-12));

  for (double nbar : {0.1, 1.0, 10.0})
    CHECK(std::abs(norm_sum(thermal_state(nbar)) - 1.0) <= 1e-10);
  CHECK_THROWS_AS((void)thermal_state(-1.0), std::domain_error);
}

TEST_CASE("auto_dim floor, tail and monotonicity") {
  CHECK(auto_dim(0.0, 1e-12) == 8);
  CHECK(auto_dim(100.0, 1e-12) >= 140);

  int prev = 0;
  for (double nbar : {0.0, 0.5, 1.0, 2.0, 5.0, 10.0, 25.0, 50.0, 100.0}) {
    const int d = auto_dim(nbar);
    CHECK(d >= prev);
    prev = d;
  }

  // The top level carries less than eps_trunc of the weight.
  for (double nbar : {0.5, 5.0, 50.0}) {
    const CavityState s = coherent_state(nbar);
    CHECK(s.population(s.dim() - 1) < kDefaultEpsTrunc);
  }
}

TEST_CASE("raw-state validation") {
  CHECK_THROWS_AS((void)CavityState::pure({Complex(0.5, 0.0)}),
                  std::invalid_argument);
  CHECK_THROWS_AS((void)CavityState::diagonal_mixed({0.5, 0.4}),
                  std::invalid_argument);
  CHECK_THROWS_AS((void)CavityState::diagonal_mixed({1.5, -0.5}),
                  std::invalid_argument);
  const CavityState s = CavityState::pure({Complex(0.6, 0.0), Complex(0.0, 0.8)});
  CHECK(s.dim() == 2);
  CHECK(s.population(1) == doctest::Approx(0.64));
}
