#include "twor/opcount.hpp"

namespace twor::ops {

namespace {
thread_local Collector* g_active = nullptr;
thread_local bool g_diagnostics = false;
}  // namespace

const char* stage_name(Stage s) {
  switch (s) {
    case Stage::Fft: return "fft";
    case Stage::Ramp: return "ramp";
    case Stage::Diag: return "diag";
    case Stage::Vector: return "vector";
    case Stage::CfoSums: return "cfo-sums";
    case Stage::SmallSolve: return "small-solve";
    case Stage::Posterior: return "posterior";
    case Stage::Diagnostics: return "diagnostics";
    default: return "?";
  }
}

Collector* active() { return g_active; }

CountScope::CountScope(Collector& c) : prev_(g_active) { g_active = &c; }
CountScope::~CountScope() { g_active = prev_; }

DiagnosticsScope::DiagnosticsScope() : prev_(g_diagnostics) {
  g_diagnostics = true;
}
DiagnosticsScope::~DiagnosticsScope() { g_diagnostics = prev_; }

void record(Stage s, std::uint64_t cadd, std::uint64_t cmul) {
  Collector* c = g_active;
  if (!c) return;
  if (g_diagnostics) s = Stage::Diagnostics;
  OpCount& oc = c->by_stage[static_cast<int>(s)];
  oc.cadd += cadd;
  oc.cmul += cmul;
}

}  // namespace twor::ops
