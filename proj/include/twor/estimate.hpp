#pragma once

#include <array>
#include <vector>

#include "twor/types.hpp"

namespace twor {

/// Joint estimate carried across estimator iterations and across the blocks
/// of a frame: per-terminal CFOs, tap responses, and hard symbol decisions
/// (length K, constellation points in frame order).
struct ParamEstimate {
  std::array<double, 2> eps{0.0, 0.0};
  std::array<VecC, 2> h;
  std::array<VecC, 2> x;
  int iteration = 0;
};

struct SageTraceEntry {
  int block = 0;
  int iteration = 0;  // 0 = state right after initialization
  int terminal = 0;   // 0-based; -1 for the init entry
  double eps_hat = 0.0;
  double loglik = 0.0;       // quadratic log-likelihood of the full estimate
  double channel_mse = -1.0; // vs. truth when available, else -1
  int symbol_changes = 0;
  bool cfo_step_rejected = false;
};

struct SageTrace {
  std::vector<SageTraceEntry> entries;
};

}  // namespace twor
