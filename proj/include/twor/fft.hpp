#pragma once

#include "twor/types.hpp"

namespace twor {

// Unitary transform pair and the tap-response transform.
//
// F is the N x N matrix with entries sqrt(1/N) e^{+j 2 pi p q / N}; it maps
// a frequency-domain block to time domain and F^H is its exact adjoint.
// D is the (first-L-columns) Fourier matrix with entries e^{-j 2 pi p q / N}
// and no normalization; D*h is the per-subcarrier response of tap vector h.
// All transforms run on a cached radix-2 plan, so N must be a power of two.

struct FftPlan {
  int n = 0;
  int log2n = 0;
  std::vector<int> bitrev;
  std::vector<cxd> twiddle;  // e^{-j 2 pi k / n}, k < n/2
};

/// Cached plan lookup; throws std::invalid_argument unless n is a power of two.
const FftPlan& fft_plan(int n);

/// In-place unnormalized transform: v(p) <- sum_q v(q) e^{sign j 2 pi p q / n}.
void fft_inplace(VecC& v, int sign);

/// F v: frequency -> time (unitary, 1/sqrt(N) normalization).
VecC apply_F(const VecC& v);
/// F^H v: time -> frequency (exact adjoint of apply_F).
VecC apply_FH(const VecC& v);

/// Domain-tagged wrappers.
ComplexBlock apply_F(const ComplexBlock& v);
ComplexBlock apply_FH(const ComplexBlock& v);

/// D h: per-subcarrier response H(k) = sum_l h(l) e^{-j 2 pi k l / N} of an
/// L-tap response (L <= N), returned as a length-N frequency vector.
VecC apply_D(const VecC& taps, int n);

/// D^H v: adjoint of apply_D, returning the first L correlation lags.
VecC apply_DH(const VecC& v, int taps);

/// (1/N) sum_{m=0}^{N-1} e^{j 2 pi m x / N} — the common diagonal value of
/// the interference matrix at offset x (x = epsilon for the self term).
cxd dirichlet_lambda(double x, int n);

}  // namespace twor
