#pragma once

#include <vector>

#include "detpol/poly.hpp"

namespace detpol {

// Valuation of the zero element.
constexpr long UNIVAL_INF = 1L << 60;

// Dense univariate polynomial in t over the coefficient field; c[i] is the
// coefficient of t^i, trailing zeros stripped.
template <class K>
struct UniPoly {
  std::vector<typename K::Elem> c;

  bool is_zero() const { return c.empty(); }
  long deg() const { return (long)c.size() - 1; }
};

template <class K>
UniPoly<K> uni_zero();
template <class K>
UniPoly<K> uni_const(const K& k, typename K::Elem a);
template <class K>
UniPoly<K> uni_monomial(const K& k, typename K::Elem a, long e);
template <class K>
void uni_trim(const K& k, UniPoly<K>& a);

template <class K>
long uni_val(const K& k, const UniPoly<K>& a);  // UNIVAL_INF for 0

template <class K>
bool uni_eq(const K& k, const UniPoly<K>& a, const UniPoly<K>& b);
template <class K>
UniPoly<K> uni_add(const K& k, const UniPoly<K>& a, const UniPoly<K>& b);
template <class K>
UniPoly<K> uni_sub(const K& k, const UniPoly<K>& a, const UniPoly<K>& b);
template <class K>
UniPoly<K> uni_neg(const K& k, const UniPoly<K>& a);
template <class K>
UniPoly<K> uni_mul(const K& k, const UniPoly<K>& a, const UniPoly<K>& b);
template <class K>
UniPoly<K> uni_scale(const K& k, const UniPoly<K>& a,
                     const typename K::Elem& s);
template <class K>
UniPoly<K> uni_shift(const K& k, const UniPoly<K>& a, long e);  // * t^e

// Division with remainder by a nonzero divisor.
template <class K>
void uni_divmod(const K& k, const UniPoly<K>& a, const UniPoly<K>& b,
                UniPoly<K>& q, UniPoly<K>& r);
template <class K>
UniPoly<K> uni_exact_div(const K& k, const UniPoly<K>& a, const UniPoly<K>& b);
template <class K>
UniPoly<K> uni_gcd(const K& k, UniPoly<K> a, UniPoly<K> b);  // monic

// Pull a multivariate polynomial back along the monomial curve
// x_i = t^(exps[i]); every exponent must be positive.
template <class K>
UniPoly<K> uni_pullback(const K& k, const Poly<K>& f,
                        const std::vector<long>& exps);

// Fraction num/den in the local ring at t = 0: canonical form has den(0) = 1.
// Building one with val(num) < val(den) fails as a non-local element.
template <class K>
struct UniRat {
  UniPoly<K> num, den;

  bool is_zero() const { return num.is_zero(); }
};

template <class K>
UniRat<K> urat_make(const K& k, UniPoly<K> num, UniPoly<K> den);
template <class K>
UniRat<K> urat_from(const K& k, UniPoly<K> num);
template <class K>
UniRat<K> urat_zero();
template <class K>
long urat_val(const K& k, const UniRat<K>& a);  // t-adic order; UNIVAL_INF for 0

template <class K>
UniRat<K> urat_add(const K& k, const UniRat<K>& a, const UniRat<K>& b);
template <class K>
UniRat<K> urat_sub(const K& k, const UniRat<K>& a, const UniRat<K>& b);
template <class K>
UniRat<K> urat_mul(const K& k, const UniRat<K>& a, const UniRat<K>& b);
// Division in the local ring; requires val(a) >= val(b).
template <class K>
UniRat<K> urat_div(const K& k, const UniRat<K>& a, const UniRat<K>& b);
template <class K>
UniRat<K> urat_neg(const K& k, const UniRat<K>& a);

}  // namespace detpol
