#include "twor/sage.hpp"

#include <cmath>

#include "twor/fft.hpp"
#include "twor/opcount.hpp"
#include "twor/ramp.hpp"
#include "twor/solve.hpp"

namespace twor {

namespace {

double channel_mse(const VecC& est, const VecC& truth) {
  const double ref = truth.squaredNorm();
  if (ref == 0.0) return -1.0;
  return (est - truth).squaredNorm() / ref;
}

int count_changes(const VecC& a, const VecC& b) {
  int changes = 0;
  for (Eigen::Index i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) ++changes;
  return changes;
}

}  // namespace

VecC hidden_signal(const VecC& y_r, const ParamEstimate& est, int terminal,
                   const SageContext& ctx) {
  const int other = 1 - terminal;
  const VecC x_other = allocate(ctx.alloc, est.x[other]);
  VecC y = y_r - terminal_time_signal(est.eps[other], x_other, est.h[other]);
  ops::record(ops::Stage::Vector, static_cast<std::uint64_t>(y.size()), 0);
  return y;
}

VecC update_channel_mmse(const VecC& y_hidden, double eps, const VecC& x_full,
                         const VecD& prior_var, double sigma2, int taps) {
  const int n = static_cast<int>(y_hidden.size());
  require(x_full.size() == n, "symbol block length mismatch");
  require(static_cast<int>(prior_var.size()) == taps, "prior length mismatch");

  // D^H X^H F^H E^H(eps) y
  VecC z = apply_ramp(-eps, y_hidden);
  VecC zf = apply_FH(z);
  zf.array() *= x_full.array().conjugate();
  ops::record(ops::Stage::Diag, 0, n);
  const VecC rhs = apply_DH(zf, taps);

  // Gram of X D restricted to the first L lags: g(d) = sum_k |x(k)|^2
  // e^{j 2 pi k d / N}; the matrix is Hermitian Toeplitz in g.
  VecC g = VecC::Zero(taps);
  std::uint64_t gram_muls = 0;
  for (int k = 0; k < n; ++k) {
    const double w = std::norm(x_full[k]);
    if (w == 0.0) continue;
    for (int d = 0; d < taps; ++d) {
      g[d] += w * std::polar(1.0, kTwoPi * k * d / n);
      ++gram_muls;
    }
  }
  ops::record(ops::Stage::SmallSolve, gram_muls, gram_muls);

  MatC a(taps, taps);
  for (int r = 0; r < taps; ++r)
    for (int c = 0; c < taps; ++c)
      a(r, c) = r >= c ? g[r - c] : std::conj(g[c - r]);
  for (int l = 0; l < taps; ++l) a(l, l) += sigma2 / prior_var[l];

  return solve_hermitian(a, rhs);
}

VecC build_omega(const VecC& x_full, const VecC& h) {
  const int n = static_cast<int>(x_full.size());
  VecC s = apply_D(h, n);
  s.array() *= x_full.array();
  ops::record(ops::Stage::Diag, 0, n);
  return apply_F(s);
}

CfoStep update_cfo(const VecC& y_hidden, double eps_prev, const VecC& omega) {
  const int n = static_cast<int>(y_hidden.size());
  require(omega.size() == n, "omega length mismatch");

  double num = 0.0, den = 0.0, scale = 0.0;
  const double step = kTwoPi * eps_prev / n;
  for (int i = 0; i < n; ++i) {
    const cxd z = std::conj(y_hidden[i]) * omega[i] * std::polar(1.0, step * i);
    num += i * z.imag();
    den += static_cast<double>(i) * i * z.real();
    scale += static_cast<double>(i) * i * std::abs(y_hidden[i]) * std::abs(omega[i]);
  }
  ops::record(ops::Stage::CfoSums, n, 2 * static_cast<std::uint64_t>(n));

  CfoStep out{eps_prev, false};
  if (std::abs(den) < 1e-9 * scale) {
    out.rejected = true;
    return out;
  }
  const double eps_new = eps_prev - (n / kTwoPi) * num / den;
  if (!(std::abs(eps_new) < 0.5)) {
    out.rejected = true;
    return out;
  }
  out.eps = eps_new;
  return out;
}

CfoStep update_cfo(const VecC& y_hidden, double eps_prev, const VecC& x_full,
                   const VecC& h) {
  return update_cfo(y_hidden, eps_prev, build_omega(x_full, h));
}

VecC update_symbols(const VecC& y_hidden, double eps, const VecC& h_freq,
                    const SubcarrierAllocation& a, const Constellation& c) {
  VecC z = apply_ramp(-eps, y_hidden);
  const VecC y_alloc = deallocate(a, apply_FH(z));
  VecC out(a.k());
  for (int i = 0; i < a.k(); ++i) {
    const int idx = nearest_point(c, y_alloc[i], h_freq[a.bins[i]]);
    out[i] = c.points[idx];
  }
  ops::record(ops::Stage::Diag,
              static_cast<std::uint64_t>(a.k()) * c.points.size(),
              static_cast<std::uint64_t>(a.k()) * c.points.size());
  return out;
}

double log_likelihood(const VecC& y_r, const ParamEstimate& est,
                      const SageContext& ctx) {
  require(ctx.sigma2 > 0.0, "log-likelihood needs a positive noise variance");
  VecC r = y_r;
  for (int i = 0; i < 2; ++i)
    r -= terminal_time_signal(est.eps[i], allocate(ctx.alloc, est.x[i]),
                              est.h[i]);
  return -r.squaredNorm() / ctx.sigma2;
}

SageResult run_sage(const VecC& y_r, const ParamEstimate& init,
                    const SageContext& ctx, const SageOptions& opts) {
  const SubcarrierAllocation& a = ctx.alloc;
  const Constellation& constel = *ctx.constellation;
  const double sigma2_ll = std::max(ctx.sigma2, 1e-12);

  SageResult res;
  ParamEstimate& est = res.estimate;
  est = init;

  // Bootstrap symbol decisions from the initial CFO/channel estimates
  // against the raw (uncancelled) received block.
  std::array<VecC, 2> h_freq;
  for (int i = 0; i < 2; ++i) {
    h_freq[i] = apply_D(est.h[i], ctx.n);
    if (est.x[i].size() != a.k())
      est.x[i] = update_symbols(y_r, est.eps[i], h_freq[i], a, constel);
  }

  // Cached per-terminal time-domain reconstructions E F X D h.
  std::array<VecC, 2> t_time;
  for (int i = 0; i < 2; ++i) {
    VecC s = h_freq[i];
    s.array() *= allocate(a, est.x[i]).array();
    t_time[i] = apply_ramp(est.eps[i], apply_F(s));
  }

  auto trace_ll = [&]() {
    ops::DiagnosticsScope diag;
    SageContext c2 = ctx;
    c2.sigma2 = sigma2_ll;
    return log_likelihood(y_r, est, c2);
  };

  if (opts.trace) {
    SageTraceEntry e;
    e.block = opts.block_index;
    e.iteration = 0;
    e.terminal = -1;
    e.loglik = trace_ll();
    res.trace.entries.push_back(e);
  }

  for (int m = 1; m <= opts.iterations; ++m) {
    for (int i = 0; i < 2; ++i) {
      const int other = 1 - i;
      VecC y_i = y_r - t_time[other];
      ops::record(ops::Stage::Vector, static_cast<std::uint64_t>(ctx.n), 0);

      const VecC x_full = allocate(a, est.x[i]);
      est.h[i] = update_channel_mmse(y_i, est.eps[i], x_full,
                                     ctx.prior_var[i], ctx.sigma2,
                                     static_cast<int>(ctx.prior_var[i].size()));
      h_freq[i] = apply_D(est.h[i], ctx.n);

      bool rejected = false;
      if (opts.update_cfo) {
        VecC s = h_freq[i];
        s.array() *= x_full.array();
        ops::record(ops::Stage::Diag, 0, ctx.n);
        const VecC omega = apply_F(s);
        const CfoStep step = update_cfo(y_i, est.eps[i], omega);
        est.eps[i] = step.eps;
        rejected = step.rejected;
        if (rejected) ++res.rejected_cfo_steps;
      }

      VecC x_new = update_symbols(y_i, est.eps[i], h_freq[i], a, constel);
      const int changes = count_changes(x_new, est.x[i]);
      est.x[i] = std::move(x_new);

      // Refresh the cached reconstruction with this group's new estimates.
      VecC s = h_freq[i];
      s.array() *= allocate(a, est.x[i]).array();
      ops::record(ops::Stage::Diag, 0, ctx.n);
      t_time[i] = apply_ramp(est.eps[i], apply_F(s));

      if (opts.trace) {
        SageTraceEntry e;
        e.block = opts.block_index;
        e.iteration = m;
        e.terminal = i;
        e.eps_hat = est.eps[i];
        e.loglik = trace_ll();
        e.symbol_changes = changes;
        e.cfo_step_rejected = rejected;
        if (opts.true_h)
          e.channel_mse = channel_mse(est.h[i], (*opts.true_h)[i]);
        res.trace.entries.push_back(e);
      }
    }
  }
  est.iteration = init.iteration + opts.iterations;
  return res;
}

Preamble make_preamble(int n) {
  require(n >= 4 && n % 2 == 0, "preamble needs an even block length >= 4");
  Preamble p;
  p.combs = {SubcarrierAllocation::comb(n, 0, 2),
             SubcarrierAllocation::comb(n, 1, 2)};
  for (int i = 0; i < 2; ++i) {
    p.pilots[i] = VecC::Constant(p.combs[i].k(), cxd(1.0, 0.0));
    p.x_full[i] = allocate(p.combs[i], p.pilots[i]);
  }
  return p;
}

std::array<VecC, 2> preamble_channel_estimate(const VecC& y_time,
                                              const Preamble& p, int taps1,
                                              int taps2) {
  const int n = static_cast<int>(y_time.size());
  const VecC y_freq = apply_FH(y_time);
  std::array<VecC, 2> h;
  const std::array<int, 2> taps{taps1, taps2};
  for (int i = 0; i < 2; ++i) {
    const SubcarrierAllocation& comb = p.combs[i];
    require(comb.k() >= 2 * taps[i],
            "pilot comb too short for the requested tap count");
    const VecC obs = deallocate(comb, y_freq);
    // least squares against M(r,l) = pilot(r) e^{-j 2 pi k_r l / N}
    MatC m(comb.k(), taps[i]);
    for (int r = 0; r < comb.k(); ++r)
      for (int l = 0; l < taps[i]; ++l)
        m(r, l) = p.pilots[i][r] * std::polar(1.0, -kTwoPi * comb.bins[r] * l / n);
    const MatC gram = m.adjoint() * m;
    const VecC rhs = m.adjoint() * obs;
    h[i] = solve_hermitian(gram, rhs);
  }
  return h;
}

}  // namespace twor
