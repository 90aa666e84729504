#pragma once

#include <vector>

#include "twor/types.hpp"

namespace twor {

/// Modulation alphabet plus its bit labeling. The symbol-decision and
/// posterior stages are generic over this, so adding QPSK later only means
/// adding a table here.
struct Constellation {
  std::string name;
  std::vector<cxd> points;
  std::vector<std::vector<int>> bit_map;  // bit_map[symbol][bit position]
  int bits_per_symbol = 1;
};

/// BPSK with the fixed convention bit 0 -> +1, bit 1 -> -1.
const Constellation& bpsk();

/// Nearest-point decision argmin_a |y - a*h|^2; ties resolve to the lowest
/// constellation index (well-defined even for h = 0).
int nearest_point(const Constellation& c, cxd y, cxd h);

/// Map bits to BPSK symbols (0 -> +1, 1 -> -1).
VecC bpsk_map(const std::vector<std::uint8_t>& bits);

/// Per-bit LLRs log(P(bit=0)/P(bit=1)) for BPSK in circular complex noise of
/// total variance sigma2: LLR = 4 Re{y} / sigma2.
VecD bpsk_llr_demap(const VecC& y, double sigma2);

}  // namespace twor
