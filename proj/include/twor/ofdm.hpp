#pragma once

#include <vector>

#include "twor/constellation.hpp"
#include "twor/types.hpp"

namespace twor {

/// Subcarrier allocation matrix A, stored as the index list of the K active
/// subcarriers (strictly increasing). Each modulated symbol occupies exactly
/// one subcarrier and no subcarrier carries two symbols, which the index-list
/// representation enforces by construction. Both terminals share the same A.
struct SubcarrierAllocation {
  int n = 0;
  std::vector<int> bins;

  int k() const { return static_cast<int>(bins.size()); }

  static SubcarrierAllocation full(int n);
  /// Every step-th subcarrier starting at offset (preamble combs).
  static SubcarrierAllocation comb(int n, int offset, int step);
  static SubcarrierAllocation from_bins(int n, std::vector<int> bins);
};

/// A u: place the K modulated symbols on their subcarriers, zeros elsewhere.
VecC allocate(const SubcarrierAllocation& a, const VecC& u);

/// A^T x: extract the K allocated entries.
VecC deallocate(const SubcarrierAllocation& a, const VecC& x);

/// Noiseless multiple-access-phase reception at the relay for one OFDM block:
/// E(eps1) F X1 D h1 + E(eps2) F X2 D h2 with x_i the full-length allocated
/// frequency blocks. Block-level model; the cyclic prefix is assumed long
/// enough (N_g >= max tap count) that no inter-block interference remains.
VecC mac_signal_model(const VecC& x1, const VecC& x2, const VecC& h1,
                      const VecC& h2, double eps1, double eps2);

/// E(eps) F X D h for a single terminal (the per-terminal reception path,
/// also the hidden-space signal builder of the estimator).
VecC terminal_time_signal(double eps, const VecC& x_full, const VecC& h);

/// Payload framing: how one terminal's coded bits fill a frame of
/// blocks_per_frame OFDM blocks over the K allocated subcarriers. Slots past
/// the last whole codeword are padded with bit 0 (+1) and skipped by the
/// decoder.
struct FrameLayout {
  int n_c = 0;              // codeword length
  int codewords = 0;        // whole codewords per frame
  int symbol_slots = 0;     // K * blocks_per_frame
  int k = 0;                // subcarriers per block
  int blocks = 0;

  static FrameLayout make(int k, int blocks_per_frame, int n_c);
  int coded_bits() const { return codewords * n_c; }
};

}  // namespace twor
