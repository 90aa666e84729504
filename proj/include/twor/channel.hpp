#pragma once

#include <array>

#include "twor/rng.hpp"
#include "twor/types.hpp"

namespace twor {

/// Channel impulse response with its prior tap variances (the diagonal of R).
/// Taps follow the exponential power delay profile E|h(l)|^2 ~ e^{-l/2},
/// normalized so the expected total energy is 1.
struct Cir {
  VecC taps;
  VecD prior_var;

  int length() const { return static_cast<int>(taps.size()); }
};

/// Normalized exponential power delay profile of length L.
VecD exp_pdp(int taps);

/// Independent zero-mean circular complex Gaussian taps with the profile's
/// variances.
Cir draw_cir(int taps, Rng& rng);

/// Noise variance per complex sample for the given SNR. SNR is defined as
/// (expected combined two-terminal signal power per received sample) over
/// sigma_w^2; with unit-power constellations and unit-energy channels the
/// expected combined power is 2K/N. snr_db = +inf maps to 0.
double awgn_sigma2(double snr_db, double mean_signal_power);

/// v + w with w i.i.d. circular complex Gaussian of variance sigma2.
VecC add_awgn(const VecC& v, double sigma2, Rng& rng);

enum class CfoMode { Constant, Sinusoidal, Explicit };

/// Per-frame CFO trajectory for both terminals. Block index 0 is the
/// preamble; payload blocks are 1..blocks_per_frame.
///  - Constant:   eps_i = pairing[i] * xi for every block.
///  - Sinusoidal: eps_i(n) = pairing[i] * xi + 0.05 sin(2 pi n / 5).
///  - Explicit:   eps_i = eps_fixed[i] for every block.
struct CfoSchedule {
  CfoMode mode = CfoMode::Constant;
  double xi = 0.0;
  std::array<double, 2> pairing{-1.0, +1.0};
  std::array<double, 2> eps_fixed{0.0, 0.0};
};

/// CFO pair at one block. Throws std::domain_error if the schedule leaves
/// the coarse-compensated range (-1/2, 1/2).
std::array<double, 2> cfo_at_block(const CfoSchedule& s, int block_index);

}  // namespace twor
