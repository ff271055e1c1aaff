#include "detpol/scalar.hpp"

namespace detpol {

RationalField::Elem RationalField::from_ratio(long long num,
                                              long long den) const {
  require(den != 0, ErrCode::ZeroDivisorRequest, "zero denominator");
  Elem e(mpz_class((long)num), mpz_class((long)den));
  e.canonicalize();
  return e;
}

RationalField::Elem RationalField::canonical_scale(
    const std::vector<const Elem*>& coeffs) const {
  if (coeffs.empty()) return one();
  mpz_class den_lcm = 1;
  for (const Elem* c : coeffs)
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(),
            c->get_den().get_mpz_t());
  mpz_class num_gcd = 0;
  for (const Elem* c : coeffs) {
    mpz_class scaled = c->get_num() * (den_lcm / c->get_den());
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), scaled.get_mpz_t());
  }
  if (num_gcd == 0) return one();
  if (sgn(*coeffs.front()) < 0) num_gcd = -num_gcd;
  Elem s(den_lcm, num_gcd);
  s.canonicalize();
  return s;
}

void RationalField::reduce_multipliers(const Elem& a, const Elem& b, Elem& sa,
                                       Elem& sb) const {
  if (a.get_den() == 1 && b.get_den() == 1) {
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), a.get_num().get_mpz_t(), b.get_num().get_mpz_t());
    sa = Elem(b.get_num() / g);
    sb = Elem(a.get_num() / g);
    if (sgn(sa) < 0) {
      sa = -sa;
      sb = -sb;
    }
    return;
  }
  sa = one();
  sb = div(a, b);
}

PrimeField::PrimeField(uint64_t prime) : p(prime) {
  require(prime >= 2 && prime < (1ULL << 63), ErrCode::RangeError,
          "modulus must be a prime below 2^63");
  require(is_prime_u64(prime), ErrCode::RangeError,
          "modulus " + std::to_string(prime) + " is not prime");
}

PrimeField::Elem PrimeField::inv(Elem a) const {
  require(a != 0, ErrCode::ZeroDivisorRequest, "inverse of zero");
  // Extended Euclid on signed 128-bit locals; p fits in 63 bits.
  __int128 t = 0, newt = 1;
  __int128 r = (__int128)p, newr = (__int128)a;
  while (newr != 0) {
    __int128 q = r / newr;
    __int128 tmp = t - q * newt;
    t = newt;
    newt = tmp;
    tmp = r - q * newr;
    r = newr;
    newr = tmp;
  }
  if (t < 0) t += (__int128)p;
  return (Elem)t;
}

PrimeField::Elem PrimeField::canonical_scale(
    const std::vector<const Elem*>& coeffs) const {
  if (coeffs.empty()) return one();
  return inv(*coeffs.front());
}

static uint64_t mulmod_u64(uint64_t a, uint64_t b, uint64_t m) {
  return (uint64_t)((unsigned __int128)a * b % m);
}

static uint64_t powmod_u64(uint64_t a, uint64_t e, uint64_t m) {
  uint64_t r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod_u64(r, a, m);
    a = mulmod_u64(a, a, m);
    e >>= 1;
  }
  return r;
}

bool is_prime_u64(uint64_t n) {
  if (n < 2) return false;
  for (uint64_t q : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL,
                     23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % q == 0) return n == q;
  }
  uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // This base set decides primality for every n below 3.3 * 10^24.
  for (uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL,
                     23ULL, 29ULL, 31ULL, 37ULL}) {
    uint64_t x = powmod_u64(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod_u64(x, x, n);
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

}  // namespace detpol
