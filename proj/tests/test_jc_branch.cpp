#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"
#include "ramsey/dense_oracle.hpp"
#include "ramsey/jc_branch.hpp"

using namespace ramsey;

namespace {

constexpr double kPi = std::numbers::pi;

CavityState random_pure(std::mt19937_64& rng, int dim) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::vector<Complex> amps(dim);
  double norm2 = 0.0;
  for (Complex& a : amps) {
    a = Complex(gauss(rng), gauss(rng));
    norm2 += std::norm(a);
  }
  for (Complex& a : amps) a /= std::sqrt(norm2);
  return CavityState::pure(std::move(amps));
}

}  // namespace

TEST_CASE("branch coefficients at canonical points") {
  SUBCASE("lambda=0, theta=pi/2") {
    const BranchData bd = branch_coefficients(JcParams(kPi / 2, 0.0), 4);
    CHECK(bd.s[0] == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(std::abs(bd.c[0]) <= 1e-12);
  }
  SUBCASE("lambda=0, theta=pi/4") {
    const BranchData bd = branch_coefficients(JcParams(kPi / 4, 0.0), 4);
    CHECK(bd.s[0] == doctest::Approx(std::sqrt(0.5)).epsilon(1e-14));
    CHECK(bd.c[0].real() == doctest::Approx(std::sqrt(0.5)).epsilon(1e-14));
    CHECK(bd.c[0].imag() == 0.0);
  }
  SUBCASE("lambda=1, theta=1") {
    const BranchData bd = branch_coefficients(JcParams(1.0, 1.0), 4);
    const double r2 = std::sqrt(2.0);
    CHECK(bd.s[0] == doctest::Approx(std::sin(r2) / r2).epsilon(1e-14));
    CHECK(bd.c[0].real() == doctest::Approx(std::cos(r2)).epsilon(1e-14));
    CHECK(bd.c[0].imag() == doctest::Approx(bd.s[0]).epsilon(1e-14));
    // Pointwise unitarity of the dressed rotation.
    CHECK(std::abs(std::norm(bd.c[0]) + 1.0 * bd.s[0] * bd.s[0] - 1.0) <=
          1e-12);
  }
}

TEST_CASE("pointwise unitarity |c|^2 + (n+1) s^2 = 1") {
  std::mt19937_64 rng(101);
  std::uniform_real_distribution<double> theta(0.0, 2.0 * kPi);
  std::uniform_real_distribution<double> lambda(-2.0, 2.0);
  for (int trial = 0; trial < 100; ++trial) {
    const BranchData bd =
        branch_coefficients(JcParams(theta(rng), lambda(rng)), 64);
    for (int n = 0; n < 64; ++n)
      CHECK(std::abs(std::norm(bd.c[n]) + (n + 1) * bd.s[n] * bd.s[n] - 1.0) <=
            1e-12);
  }
}

TEST_CASE("branch weights") {
  const CavityState vac = coherent_state(0.0);
  SUBCASE("vacuum pi/4 splits evenly") {
    const BranchWeights w = branch_weights(vac, JcParams(kPi / 4, 0.0));
    CHECK(w.w_plus == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(w.w_minus == doctest::Approx(0.5).epsilon(1e-12));
  }
  SUBCASE("vacuum pi/2 is a pi pulse") {
    const BranchWeights w = branch_weights(vac, JcParams(kPi / 2, 0.0));
    CHECK(w.w_plus <= 1e-12);
    CHECK(w.w_minus == doctest::Approx(1.0).epsilon(1e-12));
  }
  SUBCASE("conservation and dense cross-check, coherent nbar=5") {
    const CavityState s = coherent_state(5.0);
    const JcParams params(1.0, 0.0);
    const BranchWeights w = branch_weights(s, params);
    CHECK(std::abs(w.w_plus + w.w_minus - 1.0) <= 1e-10);
    CHECK(w.w_plus == doctest::Approx(oracle::w_plus(s, params)).epsilon(1e-10));
  }
}

TEST_CASE("probability conservation across state kinds and detunings") {
  std::mt19937_64 rng(102);
  std::uniform_real_distribution<double> theta(1e-6, kPi);
  std::uniform_real_distribution<double> lambda(-1.0, 1.0);
  std::vector<CavityState> states;
  states.push_back(coherent_state(3.0));
  states.push_back(fock_state(4, 9));
  states.push_back(thermal_state(1.5));
  states.push_back(random_pure(rng, 24));
  for (const CavityState& s : states)
    for (int trial = 0; trial < 50; ++trial) {
      const BranchWeights w =
          branch_weights(s, JcParams(theta(rng), lambda(rng)));
      CHECK(std::abs(w.w_plus + w.w_minus - 1.0) <= 1e-10);
    }
}

TEST_CASE("coherence term") {
  SUBCASE("Fock and mixed states carry no adjacent-level coherence") {
    CHECK(std::abs(coherence_term(fock_state(3, 8), JcParams(1.0))) == 0.0);
    CHECK(std::abs(coherence_term(thermal_state(1.0), JcParams(1.0))) == 0.0);
  }
  SUBCASE("dense cross-check, coherent nbar=5") {
    const CavityState s = coherent_state(5.0);
    for (const JcParams& params :
         {JcParams(1.0, 0.0), JcParams(0.4, 0.8), JcParams(2.5, -0.3)}) {
      const Complex fast = coherence_term(s, params);
      const Complex dense = oracle::coherence_term(s, params);
      CHECK(std::abs(fast - dense) <= 1e-10);
    }
  }
}

TEST_CASE("branch overlap") {
  SUBCASE("vacuum never overlaps") {
    CHECK(std::abs(branch_overlap(coherent_state(0.0), JcParams(0.9, 0.7))) ==
          0.0);
  }
  SUBCASE("mixed input is rejected") {
    CHECK_THROWS_AS((void)branch_overlap(thermal_state(1.0), JcParams(1.0)),
                    std::invalid_argument);
  }
  SUBCASE("агrees with the coherence term at lambda = 0") {
    const CavityState s = coherent_state(5.0);
    const JcParams params(1.0, 0.0);
    CHECK(std::abs(std::abs(branch_overlap(s, params)) -
                   std::abs(coherence_term(s, params))) <= 1e-12);
  }
  SUBCASE("dense cross-check at nonzero detuning") {
    const CavityState s = coherent_state(2.0);
    const JcParams params(1.0, 0.5);
    CHECK(std::abs(branch_overlap(s, params) -
                   oracle::branch_overlap(s, params)) <= 1e-10);
  }
}

TEST_CASE("conditional states") {
  const CavityState vac = coherent_state(0.0);
  SUBCASE("vacuum pi/4 produces |0> and |1> at equal weight") {
    const ConditionalStates cs = conditional_states(vac, JcParams(kPi / 4));
    REQUIRE(cs.rho_plus.has_value());
    REQUIRE(cs.rho_minus.has_value());
    CHECK(cs.w_plus == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(cs.w_minus == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(std::abs(cs.rho_plus->amplitudes()[0]) ==
          doctest::Approx(1.0).epsilon(1e-12));
    CHECK(std::abs(cs.rho_minus->amplitudes()[1]) ==
          doctest::Approx(1.0).epsilon(1e-12));
  }
  SUBCASE("vacuum pi/2 leaves only the photon-added branch") {
    const ConditionalStates cs = conditional_states(vac, JcParams(kPi / 2));
    CHECK(!cs.rho_plus.has_value());
    REQUIRE(cs.rho_minus.has_value());
    CHECK(cs.w_minus == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(std::abs(cs.rho_minus->amplitudes()[1]) ==
          doctest::Approx(1.0).epsilon(1e-12));
  }
  SUBCASE("thermal conditionals renormalize") {
    const ConditionalStates cs =
        conditional_states(thermal_state(1.0), JcParams(1.0));
    REQUIRE(cs.rho_plus.has_value());
    REQUIRE(cs.rho_minus.has_value());
    double tp = 0.0, tm = 0.0;
    for (double p : cs.rho_plus->populations()) tp += p;
    for (double p : cs.rho_minus->populations()) tm += p;
    CHECK(std::abs(tp - 1.0) <= 1e-10);
    CHECK(std::abs(tm - 1.0) <= 1e-10);
  }
  SUBCASE("theta=0 keeps the input on the upper branch") {
    const CavityState s = coherent_state(2.0);
    const ConditionalStates cs = conditional_states(s, JcParams(0.0, 0.3));
    CHECK(cs.w_plus == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(cs.w_minus == 0.0);
    REQUIRE(cs.rho_plus.has_value());
    CHECK(!cs.rho_minus.has_value());
    for (int n = 0; n < s.dim(); ++n)
      CHECK(std::abs(cs.rho_plus->amplitudes()[n] - s.amplitudes()[n]) <=
            1e-14);
  }
}

TEST_CASE("dense-oracle equivalence battery (dim <= 32)") {
  std::mt19937_64 rng(103);
  std::vector<CavityState> states;
  states.push_back(coherent_state(5.0));
  states.push_back(coherent_state(3.0));
  states.push_back(fock_state(5, 12));
  states.push_back(random_pure(rng, 16));
  states.push_back(random_pure(rng, 31));
  const std::vector<JcParams> grid = {
      JcParams(0.3, 0.0),    JcParams(1.0, 0.0), JcParams(kPi / 2, 0.0),
      JcParams(1.0, 1.0),    JcParams(2.2, -0.7), JcParams(0.37, 0.5)};
  for (const CavityState& s : states) {
    REQUIRE(s.dim() + 1 <= 32);
    for (const JcParams& params : grid) {
      const BranchWeights w = branch_weights(s, params);
      CHECK(std::abs(w.w_plus - oracle::w_plus(s, params)) <= 1e-10);
      CHECK(std::abs(w.w_minus - oracle::w_minus(s, params)) <= 1e-10);
      CHECK(std::abs(coherence_term(s, params) -
                     oracle::coherence_term(s, params)) <= 1e-10);
      CHECK(std::abs(branch_overlap(s, params) -
                     oracle::branch_overlap(s, params)) <= 1e-10);
      const ConditionalStates cs = conditional_states(s, params);
      const oracle::DenseConditionals dc =
          oracle::conditional_states(s, params);
      CHECK(std::abs(cs.w_plus - dc.w_plus) <= 1e-10);
      CHECK(std::abs(cs.w_minus - dc.w_minus) <= 1e-10);
      if (cs.rho_plus && !dc.plus.empty())
        for (size_t k = 0; k < dc.plus.size(); ++k)
          CHECK(std::abs(cs.rho_plus->amplitudes()[k] - dc.plus[k]) <= 1e-10);
      if (cs.rho_minus && !dc.minus.empty())
        for (size_t k = 0; k < dc.minus.size(); ++k)
          CHECK(std::abs(cs.rho_minus->amplitudes()[k] - dc.minus[k]) <=
                1e-10);
    }
  }
}

TEST_CASE("JcParams validation") {
  CHECK_THROWS_AS((void)JcParams(-0.1, 0.0), std::domain_error);
  CHECK_NOTHROW((void)JcParams(0.0, -1.0));
}
