#include "twor/fft.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>

#include "twor/opcount.hpp"

namespace twor {

namespace {

bool is_pow2(int n) { return n > 0 && (n & (n - 1)) == 0; }

std::unique_ptr<FftPlan> make_plan(int n) {
  auto plan = std::make_unique<FftPlan>();
  plan->n = n;
  plan->log2n = 0;
  while ((1 << plan->log2n) < n) ++plan->log2n;

  plan->bitrev.resize(n);
  for (int i = 0; i < n; ++i) {
    int r = 0;
    for (int b = 0; b < plan->log2n; ++b)
      if (i & (1 << b)) r |= 1 << (plan->log2n - 1 - b);
    plan->bitrev[i] = r;
  }

  plan->twiddle.resize(n / 2);
  for (int k = 0; k < n / 2; ++k)
    plan->twiddle[k] = std::polar(1.0, -kTwoPi * k / n);
  return plan;
}

}  // namespace

const FftPlan& fft_plan(int n) {
  if (!is_pow2(n))
    throw std::invalid_argument("transform length must be a power of two, got " +
                                std::to_string(n));
  static std::mutex mu;
  static std::map<int, std::unique_ptr<FftPlan>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[n];
  if (!slot) slot = make_plan(n);
  return *slot;
}

void fft_inplace(VecC& v, int sign) {
  const int n = static_cast<int>(v.size());
  if (n == 1) return;
  const FftPlan& plan = fft_plan(n);

  for (int i = 0; i < n; ++i) {
    int r = plan.bitrev[i];
    if (r > i) std::swap(v[i], v[r]);
  }

  for (int len = 2; len <= n; len <<= 1) {
    const int half = len >> 1;
    const int step = n / len;
    for (int base = 0; base < n; base += len) {
      for (int k = 0; k < half; ++k) {
        cxd w = plan.twiddle[k * step];
        if (sign > 0) w = std::conj(w);
        const cxd t = w * v[base + k + half];
        v[base + k + half] = v[base + k] - t;
        v[base + k] += t;
      }
    }
  }
  // One complex mul + two complex adds per butterfly, (n/2) log2 n butterflies.
  ops::record(ops::Stage::Fft,
              static_cast<std::uint64_t>(n) * plan.log2n,
              static_cast<std::uint64_t>(n / 2) * plan.log2n);
}

VecC apply_F(const VecC& v) {
  VecC out = v;
  fft_inplace(out, +1);
  out *= 1.0 / std::sqrt(static_cast<double>(v.size()));
  return out;
}

VecC apply_FH(const VecC& v) {
  VecC out = v;
  fft_inplace(out, -1);
  out *= 1.0 / std::sqrt(static_cast<double>(v.size()));
  return out;
}

ComplexBlock apply_F(const ComplexBlock& v) {
  require(v.domain == Domain::Frequency, "apply_F expects a frequency-domain block");
  return {apply_F(v.samples), Domain::Time};
}

ComplexBlock apply_FH(const ComplexBlock& v) {
  require(v.domain == Domain::Time, "apply_FH expects a time-domain block");
  return {apply_FH(v.samples), Domain::Frequency};
}

VecC apply_D(const VecC& taps, int n) {
  require(taps.size() <= n, "tap count exceeds block length");
  VecC out = VecC::Zero(n);
  out.head(taps.size()) = taps;
  fft_inplace(out, -1);
  return out;
}

VecC apply_DH(const VecC& v, int taps) {
  require(taps <= v.size(), "tap count exceeds block length");
  VecC full = v;
  fft_inplace(full, +1);
  return full.head(taps);
}

cxd dirichlet_lambda(double x, int n) {
  if (std::abs(x) < 1e-12) return cxd(1.0, 0.0);
  const double num = std::sin(kPi * x);
  const double den = std::sin(kPi * x / n);
  const double phase = kPi * x * (n - 1) / n;
  return std::polar(num / (n * den), phase);
}

}  // namespace twor
