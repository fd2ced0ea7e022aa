#pragma once

#include <cstdint>

namespace repvar {

/// splitmix64 finalizer. Used both as the generator step and to derive
/// independent child streams from (seed, salt) pairs.
inline std::uint64_t mix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

/// Deterministic 64-bit generator (splitmix64). The standard library
/// engines are portable but its distributions are not; sampling goes
/// through uniform_below() so identical seeds give identical streams on
/// every platform, which golden-file tests rely on.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() { return mix64(state_ += kGamma); }

  /// Uniform draw from {0, 1, ..., n-1} by rejection; n >= 1.
  std::uint64_t uniform_below(std::uint64_t n) {
    if (n <= 1) return 0;
    const std::uint64_t q = ~0ULL / n;
    const std::uint64_t limit = q * n;  // multiple of n
    std::uint64_t r = next();
    while (r >= limit) r = next();
    return r % n;
  }

  /// Independent stream for a tagged subtask; replayable from (seed, salt).
  Rng child(std::uint64_t salt) const { return Rng(mix64(state_ ^ mix64(salt))); }

 private:
  static constexpr std::uint64_t kGamma = 0x9e3779b97f4a7c15ULL;
  std::uint64_t state_;
};

/// Stable stream seed for worker/trial substreams.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t a, std::uint64_t b = 0) {
  return mix64(seed ^ mix64(a + 0x51ed270b) ^ (mix64(b + 0x2545f491) << 1));
}

}  // namespace repvar
