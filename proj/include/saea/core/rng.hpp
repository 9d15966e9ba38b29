#pragma once

#include <cstdint>
#include <cmath>
#include <random>
#include <string>
#include <string_view>

namespace saea {

// 64-bit mixer used for seed derivation (Steele et al., "Fast splittable
// pseudorandom number generators").
inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Stable FNV-1a over a text tag, mixed with a numeric seed. Used to derive
// run seeds and per-component substreams; must never change between versions
// or archived results stop being reproducible.
inline std::uint64_t stable_hash(std::string_view tag, std::uint64_t seed = 0) {
  std::uint64_t h = 0xcbf29ce484222325ULL ^ splitmix64(seed);
  for (unsigned char c : tag) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return splitmix64(h);
}

// Deterministic random stream: a given seed plus a given call sequence
// always yields the same outputs. Distribution helpers are implemented
// here rather than with <random> distributions because the standard leaves
// their algorithms implementation-defined.
class SeededRng {
 public:
  explicit SeededRng(std::uint64_t seed) : seed_(seed), engine_(splitmix64(seed)) {}

  std::uint64_t seed() const { return seed_; }

  std::uint64_t next_u64() { return engine_(); }

  // Uniform in [0, 1), 53-bit resolution.
  double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  // Unbiased integer in [0, n); n >= 1.
  std::size_t uniform_index(std::size_t n) {
    if (n <= 1) return 0;
    const std::uint64_t un = static_cast<std::uint64_t>(n);
    const std::uint64_t threshold = (0 - un) % un;  // 2^64 mod n
    for (;;) {
      const std::uint64_t r = engine_();
      if (r >= threshold) return static_cast<std::size_t>(r % un);
    }
  }

  // Standard normal via Box-Muller. No spare caching so the stream state is
  // exactly the engine state.
  double normal() {
    const double u1 = 1.0 - uniform01();  // (0, 1]
    const double u2 = uniform01();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
  }

  // Independent substream keyed by (original seed, tag). Derivation depends
  // only on the construction seed, not on how much of this stream has been
  // consumed.
  SeededRng derive(std::string_view tag) const { return SeededRng(stable_hash(tag, seed_)); }

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
};

}  // namespace saea
