#pragma once

#include <array>
#include <cmath>
#include <cstdint>

namespace pgrn {

/// xoshiro256++ with SplitMix64 seeding. Small state, fast, and fully
/// deterministic across platforms, which the replay contract requires
/// (std::mt19937 distributions are implementation-defined).
/// Reference code: https://prng.di.unimi.it/
struct Xoshiro256pp {
  std::array<std::uint64_t, 4> s{};

  static constexpr std::uint64_t splitmix64(std::uint64_t& x) {
    x += 0x9E3779B97F4A7C15ULL;
    auto z = x;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  constexpr explicit Xoshiro256pp(std::uint64_t seed = 1) {
    auto x = seed;
    for (auto& v : s) v = splitmix64(x);
  }

  static constexpr std::uint64_t rotl(std::uint64_t x, int k) {
    return (x << k) | (x >> (64 - k));
  }

  constexpr std::uint64_t next_u64() {
    const auto result = rotl(s[0] + s[3], 23) + s[0];
    const auto t = s[1] << 17;
    s[2] ^= s[0];
    s[3] ^= s[1];
    s[1] ^= s[2];
    s[0] ^= s[3];
    s[2] ^= t;
    s[3] = rotl(s[3], 45);
    return result;
  }

  /// Uniform double in [0,1), 53-bit resolution. One draw.
  constexpr double uniform01() {
    return static_cast<double>(next_u64() >> 11) * 0x1p-53;
  }

  /// Uniform double strictly inside (0,1); safe as a log() argument.
  constexpr double uniform01_open() {
    return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1p-53;
  }

  /// Exponential variate with the given rate; strictly positive.
  double exponential(double rate) { return -std::log(uniform01_open()) / rate; }

  /// Standard normal variate (Box-Muller). Two draws.
  double normal01() {
    const double r = std::sqrt(-2.0 * std::log(uniform01_open()));
    return r * std::cos(6.2831853071795864769 * uniform01());
  }

  /// Uniform index in [0, n) via 128-bit multiply-shift. The modulo bias is
  /// below n / 2^64 and irrelevant next to determinism.
  constexpr std::uint64_t bounded(std::uint64_t n) {
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(next_u64()) * n) >> 64);
  }
};

/// Per-chain seed for chain `index` of a run seeded with `master`. Walks the
/// SplitMix64 stream, so distinct indices give independent chains by
/// construction.
constexpr std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
  std::uint64_t x = master + index * 0x9E3779B97F4A7C15ULL;
  std::uint64_t z = x + 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

}  // namespace pgrn
