#pragma once

#include <cstdint>

namespace cohiggs {

// Deterministic 64-bit linear congruential generator. All randomized
// constructions in the library (bundle generators, Nahm initial data,
// fixture files) draw from this generator so runs reproduce bit-for-bit
// across platforms and standard-library versions.
//
// Scheme: state' = state * 6364136223846793005 + 1442695040888963407
// (mod 2^64); each draw advances once and returns the top 32 bits of the
// new state. Wider draws are composed from 32-bit outputs, high word first.
class Lcg {
 public:
  explicit Lcg(std::uint64_t seed) : state_(seed) {}

  std::uint32_t next_u32() {
    state_ = state_ * 6364136223846793005ULL + 1442695040888963407ULL;
    return static_cast<std::uint32_t>(state_ >> 32);
  }

  std::uint64_t next_u64() {
    std::uint64_t hi = next_u32();
    return (hi << 32) | next_u32();
  }

  // Uniform integer in [lo, hi]. Modulo bias is irrelevant for the small
  // ranges used here.
  long long next_int(long long lo, long long hi) {
    std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<long long>(next_u64() % span);
  }

  // Uniform double in [0, 1) with 32 bits of resolution.
  double next_unit() { return next_u32() / 4294967296.0; }

  // Uniform double in [-1, 1).
  double next_symmetric() { return 2.0 * next_unit() - 1.0; }

 private:
  std::uint64_t state_;
};

}  // namespace cohiggs
