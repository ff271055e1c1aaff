#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

#include "detpol/error.hpp"

namespace detpol {

// Exact rational coefficient field. Elements are GMP rationals, kept in
// lowest terms with positive denominator by canonicalization.
struct RationalField {
  using Elem = mpq_class;
  static constexpr bool prime_field = false;

  std::string name() const { return "Q"; }

  Elem zero() const { return Elem(0); }
  Elem one() const { return Elem(1); }
  Elem from_long(long long v) const {
    Elem e;
    e = (long)v;
    return e;
  }
  Elem from_ratio(long long num, long long den) const;

  bool is_zero(const Elem& a) const { return sgn(a) == 0; }
  bool eq(const Elem& a, const Elem& b) const { return a == b; }

  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem sub(const Elem& a, const Elem& b) const { return a - b; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  Elem neg(const Elem& a) const { return -a; }
  Elem div(const Elem& a, const Elem& b) const {
    require(!is_zero(b), ErrCode::ZeroDivisorRequest, "division by zero");
    return a / b;
  }
  Elem inv(const Elem& a) const { return div(one(), a); }

  // Scale factor that maps a coefficient sequence (lead first) to its
  // canonical internal form: coprime integers with positive lead.
  Elem canonical_scale(const std::vector<const Elem*>& coeffs) const;

  // Multipliers with sa * a == sb * b and sa != 0, chosen to keep growth
  // small (integer gcd cancellation when both inputs are integers).
  void reduce_multipliers(const Elem& a, const Elem& b, Elem& sa,
                          Elem& sb) const;

  std::string str(const Elem& a) const { return a.get_str(); }
};

// Coefficients modulo a fixed word-size prime, used as the fast cross-check
// field. Products go through 128-bit intermediates, exact for any modulus
// below 2^63.
struct PrimeField {
  using Elem = uint64_t;
  static constexpr bool prime_field = true;

  uint64_t p;

  explicit PrimeField(uint64_t prime);

  std::string name() const { return "Fp:" + std::to_string(p); }

  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  Elem from_long(long long v) const {
    long long r = v % (long long)p;
    if (r < 0) r += (long long)p;
    return (Elem)r;
  }
  Elem from_ratio(long long num, long long den) const {
    return div(from_long(num), from_long(den));
  }

  bool is_zero(const Elem& a) const { return a == 0; }
  bool eq(const Elem& a, const Elem& b) const { return a == b; }

  Elem add(Elem a, Elem b) const {
    Elem s = a + b;
    if (s >= p || s < a) s -= p;
    return s;
  }
  Elem sub(Elem a, Elem b) const { return a >= b ? a - b : a + (p - b); }
  Elem mul(Elem a, Elem b) const {
    return (Elem)((unsigned __int128)a * b % p);
  }
  Elem neg(Elem a) const { return a == 0 ? 0 : p - a; }
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }

  Elem canonical_scale(const std::vector<const Elem*>& coeffs) const;

  void reduce_multipliers(Elem a, Elem b, Elem& sa, Elem& sb) const {
    sa = 1;
    sb = div(a, b);
  }

  std::string str(const Elem& a) const { return std::to_string(a); }
};

// Deterministic Miller-Rabin, valid for all 64-bit inputs.
bool is_prime_u64(uint64_t n);

// Default modulus for cross-check runs; a unit test re-verifies primality.
constexpr uint64_t DEFAULT_CHECK_PRIME = 4611686018427387847ULL;  // 2^62 - 57

}  // namespace detpol
