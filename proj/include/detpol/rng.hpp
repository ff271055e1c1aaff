#pragma once

#include <cstddef>
#include <cstdint>
#include <string>

namespace detpol {

// splitmix64. Tiny deterministic generator with a published update rule, so
// seeded runs reproduce bit for bit across platforms and compilers.
struct SplitMix64 {
  uint64_t state;

  explicit SplitMix64(uint64_t seed) : state(seed) {}

  uint64_t next() {
    uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform value in [lo, hi], both ends included.
  long long range(long long lo, long long hi) {
    return lo + (long long)(next() % (uint64_t)(hi - lo + 1));
  }

  // Nonzero value in [-bound, bound].
  long long nonzero(long long bound) {
    for (;;) {
      long long v = range(-bound, bound);
      if (v != 0) return v;
    }
  }
};

uint64_t fnv1a64(const void* data, size_t n);
uint64_t fnv1a64(const std::string& s);
std::string hex64(uint64_t v);

// Seed pair threaded through every randomized computation. Each genericity
// choice is re-drawn from `second` and the two results must agree, otherwise
// the computation reports GenericitySuspect.
struct Seed {
  uint64_t primary;
  uint64_t second;

  explicit Seed(uint64_t p) : primary(p), second(derive_second(p)) {}
  Seed(uint64_t p, uint64_t s) : primary(p), second(s) {}

  static uint64_t derive_second(uint64_t p);

  // Independent stream for one named purpose under one seed trail.
  static SplitMix64 stream(uint64_t trail_seed, const std::string& purpose);
};

constexpr uint64_t DEFAULT_SEED = 42;

}  // namespace detpol
