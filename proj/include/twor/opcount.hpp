#pragma once

#include <array>
#include <cstdint>
#include <string>

namespace twor::ops {

// Complex-arithmetic counters for the complexity report. Counting is off
// unless a Collector is installed on the current thread, so the hot path
// costs one thread_local load per kernel call.

enum class Stage : int {
  Fft = 0,      // radix-2 butterflies inside F / F^H / D / D^H products
  Ramp,         // diagonal CFO phase-ramp products
  Diag,         // symbol-diagonal (X) and other per-bin products
  Vector,       // elementwise vector add/sub
  CfoSums,      // weighted correlation sums of the CFO step
  SmallSolve,   // L x L Gram build + Cholesky solve
  Posterior,    // pair-posterior / LLR arithmetic
  Diagnostics,  // trace-only evaluations, excluded from totals
  kCount
};

constexpr int kStageCount = static_cast<int>(Stage::kCount);

const char* stage_name(Stage s);

struct OpCount {
  std::uint64_t cadd = 0;
  std::uint64_t cmul = 0;
  OpCount& operator+=(const OpCount& o) {
    cadd += o.cadd;
    cmul += o.cmul;
    return *this;
  }
};

struct Collector {
  std::array<OpCount, kStageCount> by_stage{};

  Collector& operator+=(const Collector& o) {
    for (int i = 0; i < kStageCount; ++i) by_stage[i] += o.by_stage[i];
    return *this;
  }
  /// Sum over all stages except Diagnostics.
  OpCount total() const {
    OpCount t;
    for (int i = 0; i < kStageCount; ++i)
      if (i != static_cast<int>(Stage::Diagnostics)) t += by_stage[i];
    return t;
  }
  void reset() { by_stage.fill(OpCount{}); }
};

Collector* active();

/// Installs a collector on this thread for the scope's lifetime.
class CountScope {
 public:
  explicit CountScope(Collector& c);
  ~CountScope();
  CountScope(const CountScope&) = delete;
  CountScope& operator=(const CountScope&) = delete;

 private:
  Collector* prev_;
};

/// Redirects all counts to the Diagnostics stage (trace/log-likelihood
/// evaluations that must not pollute the measured totals).
class DiagnosticsScope {
 public:
  DiagnosticsScope();
  ~DiagnosticsScope();
  DiagnosticsScope(const DiagnosticsScope&) = delete;
  DiagnosticsScope& operator=(const DiagnosticsScope&) = delete;

 private:
  bool prev_;
};

void record(Stage s, std::uint64_t cadd, std::uint64_t cmul);

}  // namespace twor::ops
