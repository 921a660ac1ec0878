#include "ramsey/dense_oracle.hpp"

#include <cmath>
#include <stdexcept>

namespace ramsey::oracle {

DenseMatrix DenseMatrix::operator*(const DenseMatrix& rhs) const {
  DenseMatrix out(n_);
  for (int r = 0; r < n_; ++r)
    for (int k = 0; k < n_; ++k) {
      const Complex lrk = at(r, k);
      if (lrk == Complex(0.0, 0.0)) continue;
      for (int c = 0; c < n_; ++c) out.at(r, c) += lrk * rhs.at(k, c);
    }
  return out;
}

DenseMatrix DenseMatrix::adjoint() const {
  DenseMatrix out(n_);
  for (int r = 0; r < n_; ++r)
    for (int c = 0; c < n_; ++c) out.at(r, c) = std::conj(at(c, r));
  return out;
}

std::vector<Complex> DenseMatrix::apply(const std::vector<Complex>& v) const {
  if (int(v.size()) != n_) throw std::invalid_argument("size mismatch");
  std::vector<Complex> out(n_, Complex(0.0, 0.0));
  for (int r = 0; r < n_; ++r)
    for (int c = 0; c < n_; ++c) out[r] += at(r, c) * v[c];
  return out;
}

DenseMatrix DenseMatrix::annihilation(int n) {
  DenseMatrix a(n);
  for (int k = 1; k < n; ++k) a.at(k - 1, k) = std::sqrt(double(k));
  return a;
}

DenseMatrix DenseMatrix::creation(int n) {
  return annihilation(n).adjoint();
}

DenseBranchOperators build_operators(const JcParams& params, int n) {
  DenseMatrix a = DenseMatrix::annihilation(n);
  DenseMatrix ad = DenseMatrix::creation(n);
  const DenseMatrix aad = a * ad;  // diagonal n+1, formed by the product
  const double lam2 = params.lambda * params.lambda;
  DenseMatrix S(n), C(n);
  for (int k = 0; k < n; ++k) {
    const double rho = std::sqrt(aad.at(k, k).real() + lam2);
    const double s = std::sin(params.theta * rho) / rho;
    S.at(k, k) = s;
    C.at(k, k) = Complex(std::cos(params.theta * rho), params.lambda * s);
  }
  return {std::move(S), std::move(C), std::move(a), std::move(ad)};
}

namespace {

std::vector<Complex> padded_amplitudes(const CavityState& state) {
  std::vector<Complex> psi(state.dim() + 1, Complex(0.0, 0.0));
  const auto& amps = state.amplitudes();
  for (int k = 0; k < state.dim(); ++k) psi[k] = amps[k];
  return psi;
}

// <M> over the initial state: <psi|M|psi> or sum_n p_n <n|M|n>.
Complex expectation(const CavityState& state, const DenseMatrix& m) {
  if (state.is_pure()) {
    const auto psi = padded_amplitudes(state);
    const auto mpsi = m.apply(psi);
    Complex acc(0.0, 0.0);
    for (size_t k = 0; k < psi.size(); ++k) acc += std::conj(psi[k]) * mpsi[k];
    return acc;
  }
  Complex acc(0.0, 0.0);
  for (int n = 0; n < state.dim(); ++n)
    acc += state.population(n) * m.at(n, n);
  return acc;
}

}  // namespace

double w_plus(const CavityState& state, const JcParams& params) {
  const auto ops = build_operators(params, state.dim() + 1);
  return expectation(state, ops.C.adjoint() * ops.C).real();
}

double w_minus(const CavityState& state, const JcParams& params) {
  const auto ops = build_operators(params, state.dim() + 1);
  return expectation(state, ops.S * ops.S * ops.a * ops.a_dagger).real();
}

Complex coherence_term(const CavityState& state, const JcParams& params) {
  const auto ops = build_operators(params, state.dim() + 1);
  return expectation(state, ops.S * ops.a * ops.C);
}

Complex branch_overlap(const CavityState& state, const JcParams& params) {
  const auto ops = build_operators(params, state.dim() + 1);
  return expectation(state, ops.C * ops.a_dagger * ops.S);
}

DenseConditionals conditional_states(const CavityState& state,
                                     const JcParams& params) {
  const auto ops = build_operators(params, state.dim() + 1);
  const auto psi = padded_amplitudes(state);
  DenseConditionals out;
  out.plus = ops.C.adjoint().apply(psi);
  out.minus = (ops.a_dagger * ops.S).apply(psi);
  double np2 = 0.0, nm2 = 0.0;
  for (const Complex& x : out.plus) np2 += std::norm(x);
  for (const Complex& x : out.minus) nm2 += std::norm(x);
  out.w_plus = np2;
  out.w_minus = nm2;
  if (np2 > 0.0)
    for (Complex& x : out.plus) x /= std::sqrt(np2);
  else
    out.plus.clear();
  if (nm2 > 0.0)
    for (Complex& x : out.minus) x /= std::sqrt(nm2);
  else
    out.minus.clear();
  return out;
}

}  // namespace ramsey::oracle
