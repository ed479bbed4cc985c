#pragma once

#include <cmath>
#include <cstdint>

namespace weaklab {

namespace detail {

// Philox 2x64-10 block function. Counter-based: the n-th output block of a
// stream depends only on (seed, stream, n), never on generator state history.
inline void philox_block(uint64_t ctr, uint64_t stream, uint64_t key, uint64_t out[2]) {
  constexpr uint64_t kMul = 0xD2B74407B1CE6E93ULL;
  constexpr uint64_t kWeyl = 0x9E3779B97F4A7C15ULL;
  uint64_t x0 = ctr, x1 = stream, k = key;
  for (int round = 0; round < 10; ++round) {
    __uint128_t prod = static_cast<__uint128_t>(x0) * kMul;
    const uint64_t hi = static_cast<uint64_t>(prod >> 64);
    const uint64_t lo = static_cast<uint64_t>(prod);
    x0 = hi ^ k ^ x1;
    x1 = lo;
    k += kWeyl;
  }
  out[0] = x0;
  out[1] = x1;
}

}  // namespace detail

/// One independent substream of the global (seed, stream)-indexed family.
/// Distinct stream ids never share output blocks, so chunks of Monte Carlo
/// work can run on any thread in any order with identical results.
class RngStream {
 public:
  RngStream(uint64_t seed, uint64_t stream) : key_(seed), stream_(stream) {}

  uint64_t bits() {
    if (avail_ == 0) {
      detail::philox_block(block_++, stream_, key_, out_);
      avail_ = 2;
    }
    return out_[--avail_];
  }

  /// Uniform on [0, 1).
  double uniform() { return static_cast<double>(bits() >> 11) * 0x1.0p-53; }
  /// Uniform on (0, 1), safe as a log/CDF argument.
  double open01() { return (static_cast<double>(bits() >> 12) + 0.5) * 0x1.0p-52; }
  double uniform(double a, double b) { return a + (b - a) * uniform(); }

  double exponential() { return -std::log(open01()); }

  double normal() {
    const double u1 = open01();
    const double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.28318530717958647692529 * u2);
  }

  // Marsaglia-Tsang, boosted below shape 1. Stateless across calls.
  double gamma(double shape) {
    if (shape < 1.0) {
      return gamma(shape + 1.0) * std::pow(open01(), 1.0 / shape);
    }
    const double d = shape - 1.0 / 3.0;
    const double c = 1.0 / std::sqrt(9.0 * d);
    for (;;) {
      const double x = normal();
      double v = 1.0 + c * x;
      if (v <= 0.0) continue;
      v = v * v * v;
      const double u = open01();
      if (u < 1.0 - 0.0331 * x * x * x * x) return d * v;
      if (std::log(u) < 0.5 * x * x + d * (1.0 - v + std::log(v))) return d * v;
    }
  }

 private:
  uint64_t key_, stream_;
  uint64_t block_ = 0;
  uint64_t out_[2]{};
  int avail_ = 0;
};

/// SplitMix64 finalizer; derives per-task sub-seeds from (seed, index).
inline uint64_t mix64(uint64_t a, uint64_t b) {
  uint64_t z = a + 0x9E3779B97F4A7C15ULL * (b + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

}  // namespace weaklab
