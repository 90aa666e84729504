#pragma once

#include <cmath>

#include "twor/opcount.hpp"
#include "twor/types.hpp"

namespace twor {

/// Diagonal CFO phase ramp E(eps) with entries e^{j 2 pi n eps / N}, n = 0..N-1.
/// eps is the CFO normalized to the subcarrier spacing; the receiver model
/// assumes coarse compensation already keeps |eps| < 1/2.
struct PhaseRamp {
  double epsilon = 0.0;
  int n = 0;
};

inline PhaseRamp cfo_ramp(double epsilon, int n) {
  require_cfo_range(epsilon);
  return {epsilon, n};
}

/// E(eps) v. The adjoint E^H(eps) equals apply_ramp(cfo_ramp(-eps, n), v).
inline VecC apply_ramp(const PhaseRamp& r, const VecC& v) {
  require(static_cast<int>(v.size()) == r.n, "ramp length mismatch");
  if (r.epsilon == 0.0) return v;
  VecC out(r.n);
  const double step = kTwoPi * r.epsilon / r.n;
  for (int i = 0; i < r.n; ++i) out[i] = v[i] * std::polar(1.0, step * i);
  ops::record(ops::Stage::Ramp, 0, static_cast<std::uint64_t>(r.n));
  return out;
}

inline VecC apply_ramp(double epsilon, const VecC& v) {
  return apply_ramp(cfo_ramp(epsilon, static_cast<int>(v.size())), v);
}

}  // namespace twor
