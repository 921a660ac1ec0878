#pragma once

#include <vector>

#include "ramsey/cavity_state.hpp"
#include "ramsey/jc_branch.hpp"

// Literal dense-matrix evaluation of the branch operators, kept deliberately
// independent of the diagonal/shift fast path. Verification use only
// (self-checks and tests); everything is O(dim^3) and meant for dim <= ~64.

namespace ramsey::oracle {

// Row-major complex matrix with plain O(n^3) products.
class DenseMatrix {
public:
  explicit DenseMatrix(int n) : n_(n), data_(size_t(n) * n, Complex(0, 0)) {}

  int size() const { return n_; }
  Complex& at(int r, int c) { return data_[size_t(r) * n_ + c]; }
  const Complex& at(int r, int c) const { return data_[size_t(r) * n_ + c]; }

  DenseMatrix operator*(const DenseMatrix& rhs) const;
  DenseMatrix adjoint() const;
  std::vector<Complex> apply(const std::vector<Complex>& v) const;

  static DenseMatrix annihilation(int n);  // a
  static DenseMatrix creation(int n);      // a'
};

// S and C built by applying the scalar functions to the spectrum of the
// densely-computed product a a' (which this routine forms literally).
struct DenseBranchOperators {
  DenseMatrix S;
  DenseMatrix C;
  DenseMatrix a;
  DenseMatrix a_dagger;
};
DenseBranchOperators build_operators(const JcParams& params, int n);

// Expectations over the initial state via dense products. All vectors and
// matrices have size state.dim() + 1 so the photon-adding branch never
// truncates.
double w_plus(const CavityState& state, const JcParams& params);
double w_minus(const CavityState& state, const JcParams& params);
Complex coherence_term(const CavityState& state, const JcParams& params);
Complex branch_overlap(const CavityState& state, const JcParams& params);

// Normalized conditional branch vectors (pure input) by dense application of
// C' and a'S; empty when the branch norm vanishes.
struct DenseConditionals {
  std::vector<Complex> plus;
  std::vector<Complex> minus;
  double w_plus = 0.0;
  double w_minus = 0.0;
};
DenseConditionals conditional_states(const CavityState& state,
                                     const JcParams& params);

}  // namespace ramsey::oracle
