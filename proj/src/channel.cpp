#include "twor/channel.hpp"

#include <cmath>
#include <limits>

namespace twor {

VecD exp_pdp(int taps) {
  require(taps >= 1, "channel needs at least one tap");
  VecD p(taps);
  for (int l = 0; l < taps; ++l) p[l] = std::exp(-0.5 * l);
  p /= p.sum();
  return p;
}

Cir draw_cir(int taps, Rng& rng) {
  Cir c;
  c.prior_var = exp_pdp(taps);
  c.taps.resize(taps);
  for (int l = 0; l < taps; ++l) c.taps[l] = rng.cgaussian(c.prior_var[l]);
  return c;
}

double awgn_sigma2(double snr_db, double mean_signal_power) {
  if (std::isinf(snr_db) && snr_db > 0) return 0.0;
  return mean_signal_power / std::pow(10.0, snr_db / 10.0);
}

VecC add_awgn(const VecC& v, double sigma2, Rng& rng) {
  if (sigma2 == 0.0) return v;
  VecC out = v;
  for (Eigen::Index i = 0; i < out.size(); ++i) out[i] += rng.cgaussian(sigma2);
  return out;
}

std::array<double, 2> cfo_at_block(const CfoSchedule& s, int block_index) {
  std::array<double, 2> eps{};
  switch (s.mode) {
    case CfoMode::Constant:
      eps = {s.pairing[0] * s.xi, s.pairing[1] * s.xi};
      break;
    case CfoMode::Sinusoidal: {
      const double wobble = 0.05 * std::sin(kTwoPi * block_index / 5.0);
      eps = {s.pairing[0] * s.xi + wobble, s.pairing[1] * s.xi + wobble};
      break;
    }
    case CfoMode::Explicit:
      eps = s.eps_fixed;
      break;
  }
  for (double e : eps) require_cfo_range(e);
  return eps;
}

}  // namespace twor
