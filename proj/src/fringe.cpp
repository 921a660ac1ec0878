#include "ramsey/fringe.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace ramsey {

namespace {

// p_a, p_b for one pure branch pair (u, v): apply e^{+i phi/2} to the |a>
// branch, e^{-i phi/2} to |b>, then the pi/2 merger
// |a> -> (|a> + i|b>)/sqrt2, |b> -> (i|a> + |b>)/sqrt2.
FringeProbabilities merge_branches(const std::vector<Complex>& u,
                                   const std::vector<Complex>& v,
                                   double phi) {
  const Complex ea = std::polar(1.0, 0.5 * phi);
  const Complex eb = std::polar(1.0, -0.5 * phi);
  const Complex i(0.0, 1.0);
  double pa = 0.0, pb = 0.0;
  for (size_t k = 0; k < u.size(); ++k) {
    const Complex au = ea * u[k];
    const Complex bv = eb * v[k];
    pa += std::norm(au + i * bv);
    pb += std::norm(i * au + bv);
  }
  return {0.5 * pa, 0.5 * pb};
}

}  // namespace

FringeProbabilities fringe_probabilities(const CavityState& state,
                                         const JcParams& params, double phi) {
  if (state.is_pure()) {
    const auto bv = detail::branch_vectors(state, params);
    return merge_branches(bv.plus, bv.minus, phi);
  }
  // Diagonal mixture: convex combination over its Fock components.
  const BranchData bd = branch_coefficients(params, state.dim() + 1);
  FringeProbabilities total;
  std::vector<Complex> u(2, Complex(0.0, 0.0));
  std::vector<Complex> v(2, Complex(0.0, 0.0));
  for (int n = 0; n < state.dim(); ++n) {
    const double pn = state.population(n);
    if (pn == 0.0) continue;
    u[0] = std::conj(bd.c[n]);  // component |n>, kept at relative index 0
    u[1] = 0.0;
    v[0] = 0.0;
    v[1] = bd.s[n] * std::sqrt(double(n + 1));  // photon added -> index 1
    const FringeProbabilities fp = merge_branches(u, v, phi);
    total.p_a += pn * fp.p_a;
    total.p_b += pn * fp.p_b;
  }
  return total;
}

double fringe_probability(const CavityState& state, const JcParams& params,
                          double phi) {
  return fringe_probabilities(state, params, phi).p_a;
}

FringeScan fringe_scan(const CavityState& state, const JcParams& params,
                       int n_points) {
  if (n_points < 3) throw std::domain_error("fringe scan needs >= 3 points");
  FringeScan scan;
  scan.phi_values.resize(n_points);
  scan.p_a.resize(n_points);
  const double step = 2.0 * std::numbers::pi / (n_points - 1);
  int imax = 0;
  double pmax = -1.0, pmin = 2.0;
  for (int i = 0; i < n_points; ++i) {
    const double phi = i * step;
    const double pa = fringe_probability(state, params, phi);
    scan.phi_values[i] = phi;
    scan.p_a[i] = pa;
    if (pa > pmax) {
      pmax = pa;
      imax = i;
    }
    pmin = std::min(pmin, pa);
  }
  scan.extracted_visibility = (pmax + pmin) > 0.0
                                  ? (pmax - pmin) / (pmax + pmin)
                                  : 0.0;
  scan.extracted_phase = scan.phi_values[imax];
  return scan;
}

double scan_mean(const FringeScan& scan) {
  const size_t n = scan.p_a.size();
  double acc = 0.5 * (scan.p_a.front() + scan.p_a.back());
  for (size_t i = 1; i + 1 < n; ++i) acc += scan.p_a[i];
  return acc / double(n - 1);
}

}  // namespace ramsey
