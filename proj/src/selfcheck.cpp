#include "ramsey/selfcheck.hpp"

#include <cmath>
#include <cstring>
#include <numbers>
#include <random>
#include <sstream>

#include "ramsey/calibrate.hpp"
#include "ramsey/dense_oracle.hpp"
#include "ramsey/duality.hpp"
#include "ramsey/fringe.hpp"
#include "ramsey/jc_branch.hpp"

namespace ramsey {

namespace {

constexpr double kPi = std::numbers::pi;

struct Tracker {
  double worst = 0.0;
  std::string note;

  void observe(double err, const std::string& where = "") {
    if (err > worst) {
      worst = err;
      note = where;
    }
  }
  CheckOutcome finish(const std::string& name, double bound) const {
    std::ostringstream os;
    os << "max |err| = " << worst << " (bound " << bound << ")";
    if (!note.empty()) os << " at " << note;
    return {name, worst <= bound, os.str()};
  }
};

std::vector<CavityState> standard_states() {
  std::vector<CavityState> states;
  for (double nbar : {0.0, 0.3, 1.0, 5.0, 20.0, 100.0})
    states.push_back(coherent_state(nbar));
  states.push_back(fock_state(0, 8));
  states.push_back(fock_state(3, 8));
  for (double nbar : {0.0, 0.5, 2.0}) states.push_back(thermal_state(nbar));
  return states;
}

// Random pure state on `dim` levels.
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

CheckOutcome check_state_normalization() {
  Tracker t;
  for (const CavityState& s : standard_states()) {
    double total = 0.0;
    for (int n = 0; n < s.dim(); ++n) total += s.population(n);
    t.observe(std::abs(total - 1.0));
  }
  return t.finish("state normalization", 1e-10);
}

CheckOutcome check_coherent_mean() {
  // Error measured relative to the per-nbar tolerance max(1e-8, eps*nbar*10).
  Tracker t;
  for (double nbar : {0.0, 0.5, 1.0, 5.0, 20.0, 100.0, 200.0}) {
    const CavityState s = coherent_state(nbar);
    const double tol = std::max(1e-8, kDefaultEpsTrunc * nbar * 10.0);
    t.observe(std::abs(mean_photon_number(s) - nbar) / tol);
  }
  return t.finish("coherent-state mean photon number (err/tol)", 1.0);
}

CheckOutcome check_auto_dim() {
  bool ok = auto_dim(0.0) == 8;
  int prev = 0;
  for (double nbar : {0.0, 0.5, 1.0, 2.0, 5.0, 10.0, 50.0, 100.0, 200.0}) {
    const int d = auto_dim(nbar);
    if (d < prev) ok = false;
    prev = d;
  }
  return {"auto_dim floor and monotonicity", ok,
          ok ? "floor 8, nondecreasing in nbar" : "violated"};
}

CheckOutcome check_truncation_convergence() {
  Tracker t;
  const int dim0 = auto_dim(100.0);
  const CavityState a = coherent_state(100.0, kDefaultEpsTrunc, dim0);
  const CavityState b = coherent_state(100.0, kDefaultEpsTrunc, 2 * dim0);
  for (double lambda : {0.0, 0.5}) {
    const JcParams params(0.9, lambda);
    const DualityReport ra = duality_report(a, params);
    const DualityReport rb = duality_report(b, params);
    t.observe(std::abs(ra.w_plus - rb.w_plus), "w_plus");
    t.observe(std::abs(ra.w_minus - rb.w_minus), "w_minus");
    t.observe(std::abs(ra.P - rb.P), "P");
    t.observe(std::abs(ra.V - rb.V), "V");
    t.observe(std::abs(ra.V_internal - rb.V_internal), "V_internal");
    t.observe(std::abs(ra.Q - rb.Q), "Q");
    t.observe(std::abs(ra.D - rb.D), "D");
  }
  return t.finish("truncation convergence at nbar=100", 1e-9);
}

CheckOutcome check_pointwise_unitarity() {
  Tracker t;
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> theta_dist(0.0, 2.0 * kPi);
  std::uniform_real_distribution<double> lambda_dist(-1.5, 1.5);
  for (int trial = 0; trial < 50; ++trial) {
    const JcParams params(theta_dist(rng), lambda_dist(rng));
    const BranchData bd = branch_coefficients(params, 201);
    for (int n = 0; n < 201; ++n)
      t.observe(std::abs(std::norm(bd.c[n]) + (n + 1) * bd.s[n] * bd.s[n] -
                         1.0));
  }
  return t.finish("pointwise unitarity |c|^2 + (n+1) s^2 = 1", 1e-12);
}

CheckOutcome check_probability_conservation() {
  Tracker t;
  std::mt19937_64 rng(12);
  std::uniform_real_distribution<double> theta_dist(1e-6, kPi);
  std::uniform_real_distribution<double> lambda_dist(-1.0, 1.0);
  const auto states = standard_states();
  for (int trial = 0; trial < 200; ++trial) {
    const JcParams params(theta_dist(rng), lambda_dist(rng));
    const CavityState& s = states[trial % states.size()];
    const BranchWeights w = branch_weights(s, params);
    t.observe(std::abs(w.w_plus + w.w_minus - 1.0));
  }
  return t.finish("probability conservation w+ + w- = 1", 1e-10);
}

CheckOutcome check_dense_oracle() {
  Tracker t;
  std::mt19937_64 rng(13);
  std::vector<CavityState> states;
  states.push_back(coherent_state(5.0));
  states.push_back(coherent_state(2.0));
  states.push_back(fock_state(5, 12));
  states.push_back(random_pure(rng, 16));
  {
    std::vector<double> pops(20);
    double total = 0.0;
    for (int n = 0; n < 20; ++n) {
      pops[n] = std::pow(0.5, n + 1);
      total += pops[n];
    }
    for (double& p : pops) p /= total;
    states.push_back(CavityState::diagonal_mixed(std::move(pops)));
  }
  const std::vector<JcParams> grid = {JcParams(0.3, 0.0), JcParams(1.0, 0.0),
                                      JcParams(kPi / 2, 0.0),
                                      JcParams(1.0, 1.0),
                                      JcParams(2.2, -0.7)};
  for (const CavityState& s : states) {
    if (s.dim() + 1 > 32) continue;
    for (const JcParams& params : grid) {
      const BranchWeights w = branch_weights(s, params);
      t.observe(std::abs(w.w_plus - oracle::w_plus(s, params)), "w_plus");
      t.observe(std::abs(w.w_minus - oracle::w_minus(s, params)), "w_minus");
      t.observe(std::abs(coherence_term(s, params) -
                         oracle::coherence_term(s, params)),
                "coherence");
      if (!s.is_pure()) continue;
      t.observe(std::abs(branch_overlap(s, params) -
                         oracle::branch_overlap(s, params)),
                "overlap");
      const ConditionalStates cs = conditional_states(s, params);
      const oracle::DenseConditionals dc =
          oracle::conditional_states(s, params);
      t.observe(std::abs(cs.w_plus - dc.w_plus), "cond w_plus");
      t.observe(std::abs(cs.w_minus - dc.w_minus), "cond w_minus");
      if (cs.rho_plus && !dc.plus.empty()) {
        const auto& amps = cs.rho_plus->amplitudes();
        for (size_t k = 0; k < dc.plus.size(); ++k)
          t.observe(std::abs(amps[k] - dc.plus[k]), "rho_plus");
      }
      if (cs.rho_minus && !dc.minus.empty()) {
        const auto& amps = cs.rho_minus->amplitudes();
        for (size_t k = 0; k < dc.minus.size(); ++k)
          t.observe(std::abs(amps[k] - dc.minus[k]), "rho_minus");
      }
    }
  }
  return t.finish("dense-oracle equivalence (dim <= 32)", 1e-10);
}

CheckOutcome check_theta_zero() {
  Tracker t;
  const CavityState s = coherent_state(3.0);
  const JcParams params(0.0, 0.4);
  const BranchWeights w = branch_weights(s, params);
  t.observe(std::abs(w.w_plus - 1.0), "w_plus");
  t.observe(std::abs(w.w_minus), "w_minus");
  t.observe(visibility(s, params).V, "V");
  const ConditionalStates cs = conditional_states(s, params);
  if (!cs.rho_plus) {
    t.observe(1.0, "rho_plus undefined");
  } else {
    const auto& amps = cs.rho_plus->amplitudes();
    for (int n = 0; n < s.dim(); ++n)
      t.observe(std::abs(amps[n] - s.amplitudes()[n]), "rho_plus vs input");
  }
  return t.finish("theta = 0 degenerate case", 1e-12);
}

CheckOutcome check_pure_identity(bool with_detuning) {
  Tracker t;
  std::mt19937_64 rng(with_detuning ? 15 : 14);
  std::uniform_real_distribution<double> nbar_dist(0.0, 50.0);
  std::uniform_real_distribution<double> theta_dist(1e-6, kPi);
  std::uniform_real_distribution<double> lambda_dist(-1.0, 1.0);
  for (int trial = 0; trial < 300; ++trial) {
    const CavityState s = coherent_state(nbar_dist(rng));
    const JcParams params(theta_dist(rng),
                          with_detuning ? lambda_dist(rng) : 0.0);
    const DualityReport rep = duality_report(s, params);
    t.observe(*rep.residual_eq3, "residual_eq3");
    t.observe(*rep.residual_dqp, "residual_dqp");
  }
  return t.finish(with_detuning
                      ? "pure-state identity, detuned (V_internal)"
                      : "pure-state identity at lambda = 0",
                  1e-8);
}

CheckOutcome check_mixed_inequality() {
  Tracker t;
  std::mt19937_64 rng(16);
  std::uniform_real_distribution<double> theta_dist(1e-6, kPi);
  for (double nbar : {0.1, 1.0, 10.0}) {
    const CavityState s = thermal_state(nbar);
    for (int trial = 0; trial < 20; ++trial) {
      const DualityReport rep = duality_report(s, JcParams(theta_dist(rng)));
      t.observe(std::max(0.0, rep.lhs_eq2 - 1.0), "lhs_eq2 - 1");
      t.observe(rep.V, "V");
    }
  }
  return t.finish("mixed-state inequality lhs <= 1, V = 0", 1e-10);
}

CheckOutcome check_ordering() {
  Tracker t;
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> nbar_dist(0.0, 50.0);
  std::uniform_real_distribution<double> theta_dist(1e-6, kPi);
  std::uniform_real_distribution<double> lambda_dist(-1.0, 1.0);
  for (int trial = 0; trial < 200; ++trial) {
    const CavityState s = coherent_state(nbar_dist(rng));
    const DualityReport rep =
        duality_report(s, JcParams(theta_dist(rng), lambda_dist(rng)));
    t.observe(std::max(0.0, rep.P - rep.D) / 1e-10, "D >= P");
    const double qside = rep.Q * std::sqrt(std::max(0.0, 1.0 - rep.P * rep.P));
    t.observe(std::max(0.0, qside - rep.D) / 1e-8, "D >= Q sqrt(1-P^2)");
  }
  return t.finish("ordering D >= P, D >= Q sqrt(1-P^2) (err/tol)", 1.0);
}

CheckOutcome check_monotone_intensity() {
  bool ok = true;
  std::string detail = "V^2 nondecreasing, Q nonincreasing over nbar";
  double prev_v2 = -1.0, prev_q = 2.0;
  for (double nbar : {0.0, 1.0, 5.0, 10.0, 50.0, 100.0}) {
    const CavityState s = coherent_state(nbar);
    const CalibrationResult cal = calibrate_symmetric(s, 0.0);
    const DualityReport rep = duality_report(s, JcParams(cal.theta_star));
    const double v2 = rep.V_internal * rep.V_internal;
    if (v2 < prev_v2 - 1e-12 || rep.Q > prev_q + 1e-12) {
      ok = false;
      detail = "violated at nbar = " + std::to_string(nbar);
    }
    prev_v2 = v2;
    prev_q = rep.Q;
  }
  return {"monotone high-intensity behavior", ok, detail};
}

CheckOutcome check_fringe_oracle() {
  Tracker t;
  std::mt19937_64 rng(18);
  std::uniform_real_distribution<double> nbar_dist(0.0, 50.0);
  std::uniform_real_distribution<double> theta_dist(1e-6, kPi);
  for (int trial = 0; trial < 100; ++trial) {
    const CavityState s = coherent_state(nbar_dist(rng));
    const JcParams params(theta_dist(rng));
    const FringeScan scan = fringe_scan(s, params, 721);
    const Visibility vis = visibility(s, params);
    t.observe(std::abs(scan.extracted_visibility - vis.V_internal),
              "vs V_internal");
    t.observe(std::abs(scan.extracted_visibility - vis.V), "vs V (eq. 3.3)");
  }
  return t.finish("fringe-scan visibility oracle at lambda = 0", 1e-6);
}

CheckOutcome check_fringe_oracle_detuned() {
  // Generic detuning misaligns the fringe with the grid; the max/min read
  // is then limited by the half-degree sampling, (pi/720)^2/2 ~ 9.5e-6.
  Tracker t;
  std::mt19937_64 rng(19);
  std::uniform_real_distribution<double> nbar_dist(0.0, 20.0);
  std::uniform_real_distribution<double> theta_dist(1e-6, kPi);
  std::uniform_real_distribution<double> lambda_dist(-1.0, 1.0);
  for (int trial = 0; trial < 40; ++trial) {
    const CavityState s = coherent_state(nbar_dist(rng));
    const JcParams params(theta_dist(rng), lambda_dist(rng));
    const FringeScan scan = fringe_scan(s, params, 721);
    const Visibility vis = visibility(s, params);
    t.observe(std::abs(scan.extracted_visibility - vis.V_internal));
  }
  return t.finish("fringe-scan visibility oracle, detuned", 1e-5);
}

CheckOutcome check_fringe_normalization() {
  Tracker t;
  std::mt19937_64 rng(20);
  std::uniform_real_distribution<double> phi_dist(0.0, 2.0 * kPi);
  for (const CavityState& s : standard_states()) {
    const JcParams params(0.8, 0.3);
    for (int k = 0; k < 25; ++k) {
      const FringeProbabilities fp =
          fringe_probabilities(s, params, phi_dist(rng));
      t.observe(std::abs(fp.p_a + fp.p_b - 1.0));
    }
  }
  return t.finish("fringe normalization p_a + p_b = 1", 1e-12);
}

CheckOutcome check_fringe_mean() {
  Tracker t;
  for (const CavityState& s : standard_states()) {
    for (double lambda : {0.0, 0.6}) {
      const FringeScan scan = fringe_scan(s, JcParams(0.9, lambda), 721);
      t.observe(std::abs(scan_mean(scan) - 0.5));
    }
  }
  return t.finish("fringe mean over the grid = 1/2", 1e-10);
}

CheckOutcome check_phase_covariance() {
  Tracker t;
  const CavityState s = coherent_state(5.0);
  const JcParams params(0.7, 0.0);
  const int n = 721;
  const double step = 2.0 * kPi / (n - 1);
  const FringeScan base = fringe_scan(s, params, n);
  for (int shift : {5, 100, 360}) {
    const double delta = shift * step;
    // Scan of p_a(phi + delta) over the same grid.
    double pmax = -1.0;
    int imax = 0;
    double pmin = 2.0;
    for (int i = 0; i < n; ++i) {
      const double p = fringe_probability(s, params, i * step + delta);
      if (p > pmax) {
        pmax = p;
        imax = i;
      }
      pmin = std::min(pmin, p);
    }
    const double vis = (pmax - pmin) / (pmax + pmin);
    t.observe(std::abs(vis - base.extracted_visibility), "visibility");
    double dphi = (imax * step) - (base.extracted_phase - delta);
    dphi = std::remainder(dphi, 2.0 * kPi);
    t.observe(std::abs(dphi), "extracted phase");
  }
  return t.finish("fringe phase covariance", 1e-10);
}

CheckOutcome check_symmetric_root() {
  Tracker t;
  for (double nbar : {0.0, 1.0, 5.0, 100.0}) {
    const CavityState s = coherent_state(nbar);
    const CalibrationResult cal = calibrate_symmetric(s, 0.0);
    t.observe(cal.residual, "residual");
    const auto g = [&](double theta) {
      const BranchWeights w = branch_weights(s, JcParams(theta));
      return w.w_plus - w.w_minus;
    };
    const double h = 1e-6;
    if (g(cal.theta_star - h) * g(cal.theta_star + h) >= 0.0)
      t.observe(1.0, "no sign change across root");
    // Smallest root: no sign change on a fine grid strictly below theta*.
    const int fine = 20000;
    double prev = g(1e-9);
    const double upper = cal.theta_star * (1.0 - 1e-9);
    for (int i = 1; i <= fine; ++i) {
      const double theta = upper * double(i) / fine;
      const double gi = g(theta);
      if ((prev > 0.0) != (gi > 0.0)) t.observe(1.0, "earlier root exists");
      prev = gi;
    }
  }
  return t.finish("symmetric calibration root (lambda = 0)", 1e-10);
}

CheckOutcome check_asymmetric_dominance() {
  Tracker t;
  for (double nbar : {0.0, 5.0}) {
    const CavityState s = coherent_state(nbar);
    const CalibrationResult cal = calibrate_asymmetric(s, 0.0);
    for (int i = 1; i <= 4096; ++i) {
      const double theta = kThetaMax * (double(i) / 4096);
      const BranchWeights w = branch_weights(s, JcParams(theta));
      t.observe(std::max(0.0, std::abs(w.w_plus - w.w_minus) -
                                  cal.achieved_P));
    }
  }
  return t.finish("asymmetric optimum dominates the 4096-point grid", 1e-9);
}

CheckOutcome check_calibration_determinism() {
  bool ok = true;
  for (double nbar : {0.0, 7.0}) {
    const CavityState s = coherent_state(nbar);
    for (int pass = 0; pass < 2; ++pass) {
      const CalibrationResult a = pass == 0 ? calibrate_symmetric(s, 0.0)
                                            : calibrate_asymmetric(s, 0.0);
      const CalibrationResult b = pass == 0 ? calibrate_symmetric(s, 0.0)
                                            : calibrate_asymmetric(s, 0.0);
      if (std::memcmp(&a.theta_star, &b.theta_star, sizeof(double)) != 0 ||
          std::memcmp(&a.achieved_P, &b.achieved_P, sizeof(double)) != 0)
        ok = false;
    }
  }
  return {"calibration determinism (bit-identical reruns)", ok,
          ok ? "theta* and P bit-stable" : "differs between runs"};
}

}  // namespace

std::vector<CheckOutcome> run_selfcheck() {
  std::vector<CheckOutcome> out;
  out.push_back(check_state_normalization());
  out.push_back(check_coherent_mean());
  out.push_back(check_auto_dim());
  out.push_back(check_truncation_convergence());
  out.push_back(check_pointwise_unitarity());
  out.push_back(check_probability_conservation());
  out.push_back(check_dense_oracle());
  out.push_back(check_theta_zero());
  out.push_back(check_pure_identity(false));
  out.push_back(check_pure_identity(true));
  out.push_back(check_mixed_inequality());
  out.push_back(check_ordering());
  out.push_back(check_monotone_intensity());
  out.push_back(check_fringe_oracle());
  out.push_back(check_fringe_oracle_detuned());
  out.push_back(check_fringe_normalization());
  out.push_back(check_fringe_mean());
  out.push_back(check_phase_covariance());
  out.push_back(check_symmetric_root());
  out.push_back(check_asymmetric_dominance());
  out.push_back(check_calibration_determinism());
  return out;
}

int report_selfcheck(std::ostream& os) {
  const auto results = run_selfcheck();
  int failed = 0;
  for (const CheckOutcome& r : results) {
    os << (r.passed ? "[ok]   " : "[FAIL] ") << r.name << " — " << r.detail
       << "\n";
    if (!r.passed) ++failed;
  }
  os << results.size() - failed << "/" << results.size() << " checks passed\n";
  return failed;
}

}  // namespace ramsey
