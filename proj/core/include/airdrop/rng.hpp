#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>

namespace airdrop {

/// splitmix64 finalizer; used to decorrelate derived seeds.
inline std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Deterministic per-stream seed from a master seed and a stream index.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
  return mix64(master ^ mix64(index + 0x9e3779b97f4a7c15ULL));
}

/// Seeded random stream. Gaussian draws use Box-Muller directly so the
/// number of engine calls per draw is fixed, which keeps output independent
/// of the standard library's distribution internals.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [0, 1).
  double uniform() {
    return (engine_() >> 11) * 0x1.0p-53;
  }

  /// Uniform integer in [0, n); n must be positive.
  int uniform_int(int n) {
    return static_cast<int>(uniform() * n);
  }

  /// Standard normal draw.
  double normal() {
    double u1 = uniform();
    // Guard the log: shift u1 into (0, 1].
    u1 = 1.0 - u1;
    const double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) *
           std::cos(2.0 * std::numbers::pi * u2);
  }

private:
  std::mt19937_64 engine_;
};

}  // namespace airdrop
