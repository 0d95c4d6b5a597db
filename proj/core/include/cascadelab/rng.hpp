#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace cascadelab {

/// SplitMix64 finalizer (Steele, Lea & Flood 2014). A bijection on 64-bit words.
constexpr std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

/// 64-bit FNV-1a.
constexpr std::uint64_t fnv1a64(std::string_view s) {
  std::uint64_t h = 0xCBF29CE484222325ULL;
  for (char c : s) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001B3ULL;
  }
  return h;
}

/// Seed of sub-stream `stream` of `master`.
constexpr std::uint64_t derive_stream_seed(std::uint64_t master, std::uint64_t stream) {
  return splitmix64(splitmix64(master) ^ stream);
}

/// Seed for one trial of one experiment cell. Every input is folded through
/// splitmix64, so for a fixed prefix distinct trial indices never collide.
std::uint64_t derive_trial_seed(std::uint64_t master_seed, std::string_view experiment_tag,
                                std::string_view model, std::uint64_t n, std::uint64_t trial_index);

/// mt19937_64 with portable bounded-integer and unit-interval draws
/// (std:: distributions are implementation-defined).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform on [0, bound); bound must be > 0.
  std::uint64_t below(std::uint64_t bound);

  /// Uniform on [0, 1) with 53 bits of resolution.
  double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  bool bernoulli(double p) { return p >= 1.0 || unit() < p; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace cascadelab
