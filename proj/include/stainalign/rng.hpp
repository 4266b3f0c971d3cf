#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <vector>

namespace stainalign {

// SplitMix64 finalizer. Every seeded stream in this project is built from it,
// so outputs are reproducible across toolchains and platforms.
constexpr std::uint64_t mix64(std::uint64_t z) {
  z += 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

// Derives an independent stream key from a parent seed and a stream index.
constexpr std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
  return mix64(seed ^ mix64(stream + 0x632BE59BD9B4E019ULL));
}

// Counter-based generator: draw i of stream k is mix64(k + i). Splittable via
// derive_seed and replayable from any point, which keeps per-slide and
// per-resample randomness independent of evaluation order.
class CounterRng {
 public:
  explicit CounterRng(std::uint64_t seed) : key_(seed) {}

  std::uint64_t next_u64() { return mix64(key_ + counter_++); }

  // uniform in [0, 1), 53 bits
  double next_unit() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  // uniform integer in [0, n); rejection keeps the draw exactly uniform
  std::uint64_t next_below(std::uint64_t n) {
    const std::uint64_t cutoff = (0 - n) % n;  // 2^64 mod n
    std::uint64_t x = next_u64();
    while (x < cutoff) x = next_u64();
    return x % n;
  }

  // standard normal via Box-Muller; the second value of each pair is cached
  double next_normal() {
    if (has_cached_) {
      has_cached_ = false;
      return cached_;
    }
    const double u1 = 1.0 - next_unit();  // (0, 1], keeps log finite
    const double u2 = next_unit();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double theta = 2.0 * std::numbers::pi * u2;
    cached_ = r * std::sin(theta);
    has_cached_ = true;
    return r * std::cos(theta);
  }

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
  double cached_ = 0.0;
  bool has_cached_ = false;
};

// Fisher-Yates shuffle driven by a CounterRng.
template <typename T>
void seeded_shuffle(std::vector<T>& values, CounterRng& rng) {
  for (std::size_t i = values.size(); i > 1; --i) {
    const std::size_t j = static_cast<std::size_t>(rng.next_below(i));
    std::swap(values[i - 1], values[j]);
  }
}

}  // namespace stainalign
