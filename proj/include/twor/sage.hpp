#pragma once

#include "twor/constellation.hpp"
#include "twor/estimate.hpp"
#include "twor/ofdm.hpp"
#include "twor/types.hpp"

namespace twor {

/// Shared description of one estimation problem: block length, allocation,
/// constellation, per-terminal tap priors, and the (known) noise variance.
struct SageContext {
  int n = 0;
  SubcarrierAllocation alloc;
  const Constellation* constellation = nullptr;
  std::array<VecD, 2> prior_var;
  double sigma2 = 0.0;
};

struct SageOptions {
  int iterations = 2;
  bool update_cfo = true;
  bool trace = false;
  int block_index = 0;                   // stamped into trace entries
  const std::array<VecC, 2>* true_h = nullptr;  // enables channel MSE tracing
};

struct SageResult {
  ParamEstimate estimate;
  SageTrace trace;
  int rejected_cfo_steps = 0;
};

struct CfoStep {
  double eps = 0.0;
  bool rejected = false;
};

/// Hidden-space observation for one terminal: the received block minus the
/// complement terminal's reconstructed contribution. All noise is attributed
/// to the requested terminal's space.
VecC hidden_signal(const VecC& y_r, const ParamEstimate& est, int terminal,
                   const SageContext& ctx);

/// Prior-regularized (MMSE) tap estimate from a hidden-space observation,
/// given the terminal's current CFO and symbol decisions:
///   h = (sigma2 R^-1 + D^H X^H X D)^-1 D^H X^H F^H E^H(eps) y.
/// With sigma2 = 0 this is the least-squares fit.
VecC update_channel_mmse(const VecC& y_hidden, double eps, const VecC& x_full,
                         const VecD& prior_var, double sigma2, int taps);

/// F X D h — the reconstructed time-domain signal before the CFO ramp, the
/// reference waveform of the CFO step.
VecC build_omega(const VecC& x_full, const VecC& h);

/// One damped-Newton CFO step from the second-order expansion of the
/// correlation objective Re{y^H E(eps) omega} around eps_prev:
///   eps_new = eps_prev - (N/2pi) * sum_n n Im{z_n} / sum_n n^2 Re{z_n},
///   z_n = conj(y(n)) omega(n) e^{j 2 pi eps_prev n / N}.
/// The step is rejected (eps kept) when the curvature term is degenerate or
/// the step would leave (-1/2, 1/2).
CfoStep update_cfo(const VecC& y_hidden, double eps_prev, const VecC& omega);
CfoStep update_cfo(const VecC& y_hidden, double eps_prev, const VecC& x_full,
                   const VecC& h);

/// Per-subcarrier nearest-point symbol decisions against Y = A^T F^H E^H y
/// and H = D h. Ties resolve to the lowest constellation index, so the
/// decision is defined even on a dead subcarrier (H(k) = 0).
VecC update_symbols(const VecC& y_hidden, double eps, const VecC& h_freq,
                    const SubcarrierAllocation& a, const Constellation& c);

/// Quadratic log-likelihood of a full parameter set (additive constant
/// dropped): -(1/sigma2) || y - E(e1) F X1 D h1 - E(e2) F X2 D h2 ||^2.
double log_likelihood(const VecC& y_r, const ParamEstimate& est,
                      const SageContext& ctx);

/// Alternating estimator: bootstraps symbol decisions from the initial
/// CFO/channel estimates against the raw received block, then runs the
/// requested number of full iterations, each updating terminal 1's group
/// (hidden signal, channel, CFO, symbols) and then terminal 2's.
SageResult run_sage(const VecC& y_r, const ParamEstimate& init,
                    const SageContext& ctx, const SageOptions& opts);

/// Comb-orthogonal training block: terminal 1 transmits known pilots on the
/// even subcarriers, terminal 2 on the odd ones, so a per-terminal
/// least-squares tap fit needs no joint processing.
struct Preamble {
  std::array<SubcarrierAllocation, 2> combs;
  std::array<VecC, 2> pilots;  // unit-modulus, one per comb bin
  std::array<VecC, 2> x_full;  // allocated pilot blocks
};

Preamble make_preamble(int n);

/// Per-terminal least-squares tap fits from the received training block.
/// Throws std::invalid_argument when a comb carries fewer than 2*taps pilots
/// (underdetermined fit).
std::array<VecC, 2> preamble_channel_estimate(const VecC& y_time,
                                              const Preamble& p, int taps1,
                                              int taps2);

}  // namespace twor
