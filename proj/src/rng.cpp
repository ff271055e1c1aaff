#include "detpol/rng.hpp"

namespace detpol {

uint64_t fnv1a64(const void* data, size_t n) {
  const unsigned char* p = (const unsigned char*)data;
  uint64_t h = 0xcbf29ce484222325ULL;
  for (size_t i = 0; i < n; ++i) {
    h ^= p[i];
    h *= 0x100000001b3ULL;
  }
  return h;
}

uint64_t fnv1a64(const std::string& s) { return fnv1a64(s.data(), s.size()); }

std::string hex64(uint64_t v) {
  static const char* digits = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[(size_t)i] = digits[v & 0xf];
    v >>= 4;
  }
  return out;
}

uint64_t Seed::derive_second(uint64_t p) {
  SplitMix64 g(p ^ 0xa5a5a5a5deadbeefULL);
  return g.next();
}

SplitMix64 Seed::stream(uint64_t trail_seed, const std::string& purpose) {
  return SplitMix64(trail_seed ^ fnv1a64(purpose));
}

}  // namespace detpol
