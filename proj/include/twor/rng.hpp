#pragma once

#include <cstdint>
#include <cmath>
#include <random>

#include "twor/types.hpp"

namespace twor {

/// Deterministic per-trial random stream. Gaussian variates come from
/// Box-Muller over the mt19937_64 bit stream rather than
/// std::normal_distribution, so draws are identical across standard-library
/// implementations given the same seed.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  double uniform() {  // [0, 1)
    return (gen_() >> 11) * 0x1.0p-53;
  }

  int bit() { return static_cast<int>(gen_() & 1u); }

  double gaussian() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    double u1 = uniform();
    while (u1 <= 0.0) u1 = uniform();
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    spare_ = r * std::sin(kTwoPi * u2);
    have_spare_ = true;
    return r * std::cos(kTwoPi * u2);
  }

  /// Circular complex Gaussian with total variance var (var/2 per component).
  cxd cgaussian(double var) {
    const double s = std::sqrt(var / 2.0);
    const double re = s * gaussian();
    return {re, s * gaussian()};
  }

  /// Hierarchical seed split: one splitmix64 pass per key component. Used to
  /// derive independent per-(sweep point, frame) streams from the master
  /// seed, so results do not depend on worker count or execution order.
  static std::uint64_t derive(std::uint64_t master, std::uint64_t a,
                              std::uint64_t b) {
    return splitmix(splitmix(splitmix(master) ^ a) ^ b);
  }

  static std::uint64_t splitmix(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
  }

 private:
  std::mt19937_64 gen_;
  double spare_ = 0.0;
  bool have_spare_ = false;
};

}  // namespace twor
