#include "ramsey/calibrate.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <limits>
#include <thread>

#include "ramsey/errors.hpp"
#include "ramsey/jc_branch.hpp"

namespace ramsey {

namespace {

constexpr double kRootTolerance = 1e-12;
constexpr double kGoldenThetaTol = 1e-10;
constexpr double kInvPhi = 0.6180339887498948482;  // 1/golden ratio

struct Objective {
  const CavityState& state;
  double lambda;
  long evaluations = 0;

  // w+ - w-; positive at theta = 0.
  double g(double theta) {
    ++evaluations;
    const BranchWeights w = branch_weights(state, JcParams(theta, lambda));
    return w.w_plus - w.w_minus;
  }
  double abs_g(double theta) { return std::abs(g(theta)); }
};

// Golden-section minimum of f on [a, b] down to the theta tolerance xtol.
// On exact ties the left subinterval is kept, so the lower theta wins.
double golden_min(const std::function<double(double)>& f, double a, double b,
                  double xtol) {
  double c = b - kInvPhi * (b - a);
  double d = a + kInvPhi * (b - a);
  double fc = f(c), fd = f(d);
  while (b - a > xtol) {
    if (fc <= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - kInvPhi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + kInvPhi * (b - a);
      fd = f(d);
    }
  }
  return fc <= fd ? c : d;
}

// Bisect a bracketed sign change of g down to |g| <= kRootTolerance.
double bisect_root(Objective& obj, double a, double ga, double b, double gb) {
  double best_theta = std::abs(ga) < std::abs(gb) ? a : b;
  double best_abs = std::min(std::abs(ga), std::abs(gb));
  for (int iter = 0; iter < 200; ++iter) {
    const double m = 0.5 * (a + b);
    if (m == a || m == b) break;  // interval exhausted at double precision
    const double gm = obj.g(m);
    if (std::abs(gm) < best_abs) {
      best_abs = std::abs(gm);
      best_theta = m;
    }
    if (std::abs(gm) <= kRootTolerance) return m;
    if ((ga > 0.0) == (gm > 0.0)) {
      a = m;
      ga = gm;
    } else {
      b = m;
      gb = gm;
    }
  }
  return best_theta;
}

int worker_count(size_t rows) {
  unsigned n = std::thread::hardware_concurrency();
  if (const char* env = std::getenv("RAMSEY_WORKERS")) {
    const long v = std::strtol(env, nullptr, 10);
    if (v > 0) n = static_cast<unsigned>(v);
  }
  if (n == 0) n = 1;
  return static_cast<int>(std::min<size_t>(n, rows));
}

}  // namespace

CalibrationResult calibrate_symmetric(const CavityState& state,
                                      double lambda) {
  Objective obj{state, lambda};
  const double step = kThetaMax / kThetaGridPoints;
  double g_prev2 = 0.0;
  double g_prev = obj.g(0.0);  // = 1 for any normalized state
  for (int i = 1; i <= kThetaGridPoints; ++i) {
    const double theta = kThetaMax * (double(i) / kThetaGridPoints);
    const double gi = obj.g(theta);
    // A dip of |g| without sign change can hide a tangential root; refine
    // before looking at the interval to its right so the smallest root wins.
    if (i >= 2 && (g_prev > 0.0) == (g_prev2 > 0.0) &&
        std::abs(g_prev) <= std::abs(g_prev2) &&
        std::abs(g_prev) <= std::abs(gi)) {
      const double lo = theta - 2.0 * step;
      const double t = golden_min([&obj](double x) { return obj.abs_g(x); },
                                  std::max(lo, 0.0), theta, kRootTolerance);
      if (obj.abs_g(t) <= kRootTolerance) {
        const double residual = obj.abs_g(t);
        return {t, residual, CalibrationTarget::Symmetric, residual,
                obj.evaluations};
      }
    }
    if (gi == 0.0 || (g_prev > 0.0) != (gi > 0.0)) {
      const double root = gi == 0.0 ? theta
                                    : bisect_root(obj, theta - step, g_prev,
                                                  theta, gi);
      const double residual = obj.abs_g(root);
      return {root, residual, CalibrationTarget::Symmetric, residual,
              obj.evaluations};
    }
    g_prev2 = g_prev;
    g_prev = gi;
  }
  throw CalibrationError(
      "no symmetric operating point found in (0, 2pi] for this state");
}

CalibrationResult calibrate_asymmetric(const CavityState& state,
                                       double lambda) {
  Objective obj{state, lambda};
  int best_i = 1;
  double best_p = -1.0;
  for (int i = 1; i <= kThetaGridPoints; ++i) {
    const double p = obj.abs_g(kThetaMax * (double(i) / kThetaGridPoints));
    if (p > best_p) {
      best_p = p;
      best_i = i;
    }
  }
  const double lo =
      kThetaMax * (double(std::max(best_i - 1, 0)) / kThetaGridPoints);
  const double hi =
      kThetaMax * (double(std::min(best_i + 1, kThetaGridPoints)) /
                   kThetaGridPoints);
  const double refined =
      golden_min([&obj](double x) { return -obj.abs_g(x); }, lo, hi,
                 kGoldenThetaTol);
  double theta = kThetaMax * (double(best_i) / kThetaGridPoints);
  double achieved = best_p;
  const double p_refined = obj.abs_g(refined);
  if (p_refined > achieved) {
    theta = refined;
    achieved = p_refined;
  }
  return {theta, achieved, CalibrationTarget::MaxAsymmetric, 1.0 - achieved,
          obj.evaluations};
}

std::vector<SweepRow> sweep_figure2(CalibrationTarget regime,
                                    const std::vector<double>& nbar_grid,
                                    double lambda, double eps_trunc) {
  std::vector<SweepRow> rows(nbar_grid.size());
  std::atomic<size_t> next{0};
  auto work = [&]() {
    for (size_t i = next.fetch_add(1); i < nbar_grid.size();
         i = next.fetch_add(1)) {
      SweepRow& row = rows[i];
      row.nbar = nbar_grid[i];
      try {
        const CavityState state = coherent_state(nbar_grid[i], eps_trunc);
        const CalibrationResult cal =
            regime == CalibrationTarget::Symmetric
                ? calibrate_symmetric(state, lambda)
                : calibrate_asymmetric(state, lambda);
        const DualityReport rep =
            duality_report(state, JcParams(cal.theta_star, lambda));
        row.theta = cal.theta_star;
        row.P2 = rep.P * rep.P;
        row.Q2 = rep.Q * rep.Q;
        row.D2 = rep.D * rep.D;
        row.V2 = rep.V * rep.V;
        row.lhs_eq2 = rep.lhs_eq2;
      } catch (const std::exception& e) {
        row.ok = false;
        row.error = e.what();
        row.theta = row.P2 = row.Q2 = row.D2 = row.V2 = row.lhs_eq2 =
            std::numeric_limits<double>::quiet_NaN();
      }
    }
  };
  const int workers = worker_count(nbar_grid.size());
  if (workers <= 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int t = 0; t < workers; ++t) pool.emplace_back(work);
    for (std::thread& t : pool) t.join();
  }
  return rows;
}

}  // namespace ramsey
