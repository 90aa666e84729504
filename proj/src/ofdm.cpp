#include "twor/ofdm.hpp"

#include <algorithm>

#include "twor/fft.hpp"
#include "twor/opcount.hpp"
#include "twor/ramp.hpp"

namespace twor {

const Constellation& bpsk() {
  static const Constellation c{"bpsk", {cxd(1.0, 0.0), cxd(-1.0, 0.0)}, {{0}, {1}}, 1};
  return c;
}

int nearest_point(const Constellation& c, cxd y, cxd h) {
  int best = 0;
  double best_d2 = std::norm(y - c.points[0] * h);
  for (int a = 1; a < static_cast<int>(c.points.size()); ++a) {
    const double d2 = std::norm(y - c.points[a] * h);
    if (d2 < best_d2) {  // strict: ties keep the lowest index
      best_d2 = d2;
      best = a;
    }
  }
  return best;
}

VecC bpsk_map(const std::vector<std::uint8_t>& bits) {
  VecC out(bits.size());
  for (size_t i = 0; i < bits.size(); ++i)
    out[static_cast<Eigen::Index>(i)] = bits[i] ? cxd(-1.0, 0.0) : cxd(1.0, 0.0);
  return out;
}

VecD bpsk_llr_demap(const VecC& y, double sigma2) {
  require(sigma2 > 0.0, "noise variance must be positive");
  return 4.0 * y.real() / sigma2;
}

SubcarrierAllocation SubcarrierAllocation::full(int n) {
  SubcarrierAllocation a;
  a.n = n;
  a.bins.resize(n);
  for (int i = 0; i < n; ++i) a.bins[i] = i;
  return a;
}

SubcarrierAllocation SubcarrierAllocation::comb(int n, int offset, int step) {
  require(offset >= 0 && offset < step && step >= 1, "bad comb spec");
  SubcarrierAllocation a;
  a.n = n;
  for (int i = offset; i < n; i += step) a.bins.push_back(i);
  return a;
}

SubcarrierAllocation SubcarrierAllocation::from_bins(int n, std::vector<int> bins) {
  require(std::is_sorted(bins.begin(), bins.end()) &&
              std::adjacent_find(bins.begin(), bins.end()) == bins.end(),
          "allocation bins must be strictly increasing");
  require(bins.empty() || (bins.front() >= 0 && bins.back() < n),
          "allocation bin out of range");
  SubcarrierAllocation a;
  a.n = n;
  a.bins = std::move(bins);
  return a;
}

VecC allocate(const SubcarrierAllocation& a, const VecC& u) {
  require(u.size() == a.k(), "symbol count does not match allocation");
  VecC x = VecC::Zero(a.n);
  for (int i = 0; i < a.k(); ++i) x[a.bins[i]] = u[i];
  return x;
}

VecC deallocate(const SubcarrierAllocation& a, const VecC& x) {
  require(x.size() == a.n, "block length does not match allocation");
  VecC u(a.k());
  for (int i = 0; i < a.k(); ++i) u[i] = x[a.bins[i]];
  return u;
}

VecC terminal_time_signal(double eps, const VecC& x_full, const VecC& h) {
  const int n = static_cast<int>(x_full.size());
  VecC s = apply_D(h, n);
  s.array() *= x_full.array();
  ops::record(ops::Stage::Diag, 0, n);
  VecC t = apply_F(s);
  return apply_ramp(eps, t);
}

VecC mac_signal_model(const VecC& x1, const VecC& x2, const VecC& h1,
                      const VecC& h2, double eps1, double eps2) {
  require(x1.size() == x2.size(), "terminal blocks must share N");
  VecC y = terminal_time_signal(eps1, x1, h1);
  y += terminal_time_signal(eps2, x2, h2);
  ops::record(ops::Stage::Vector, static_cast<std::uint64_t>(x1.size()), 0);
  return y;
}

FrameLayout FrameLayout::make(int k, int blocks_per_frame, int n_c) {
  require(blocks_per_frame >= 1, "frame needs at least one block");
  FrameLayout f;
  f.k = k;
  f.blocks = blocks_per_frame;
  f.n_c = n_c;
  f.symbol_slots = k * blocks_per_frame;
  f.codewords = f.symbol_slots / n_c;
  require(f.codewords >= 1, "frame too short for one codeword");
  return f;
}

}  // namespace twor
