#include "detpol/unipoly.hpp"

namespace detpol {

template <class K>
UniPoly<K> uni_zero() {
  return UniPoly<K>{};
}

template <class K>
UniPoly<K> uni_const(const K& k, typename K::Elem a) {
  UniPoly<K> p;
  if (!k.is_zero(a)) p.c.push_back(std::move(a));
  return p;
}

template <class K>
UniPoly<K> uni_monomial(const K& k, typename K::Elem a, long e) {
  require(e >= 0, ErrCode::NegativeExponent, "negative t power");
  UniPoly<K> p;
  if (!k.is_zero(a)) {
    p.c.assign((size_t)e + 1, k.zero());
    p.c.back() = std::move(a);
  }
  return p;
}

template <class K>
void uni_trim(const K& k, UniPoly<K>& a) {
  while (!a.c.empty() && k.is_zero(a.c.back())) a.c.pop_back();
}

template <class K>
long uni_val(const K& k, const UniPoly<K>& a) {
  for (size_t i = 0; i < a.c.size(); ++i)
    if (!k.is_zero(a.c[i])) return (long)i;
  return UNIVAL_INF;
}

template <class K>
bool uni_eq(const K& k, const UniPoly<K>& a, const UniPoly<K>& b) {
  if (a.c.size() != b.c.size()) return false;
  for (size_t i = 0; i < a.c.size(); ++i)
    if (!k.eq(a.c[i], b.c[i])) return false;
  return true;
}

template <class K>
UniPoly<K> uni_add(const K& k, const UniPoly<K>& a, const UniPoly<K>& b) {
  UniPoly<K> out;
  out.c.resize(std::max(a.c.size(), b.c.size()), k.zero());
  for (size_t i = 0; i < a.c.size(); ++i) out.c[i] = a.c[i];
  for (size_t i = 0; i < b.c.size(); ++i) out.c[i] = k.add(out.c[i], b.c[i]);
  uni_trim(k, out);
  return out;
}

template <class K>
UniPoly<K> uni_sub(const K& k, const UniPoly<K>& a, const UniPoly<K>& b) {
  return uni_add(k, a, uni_neg(k, b));
}

template <class K>
UniPoly<K> uni_neg(const K& k, const UniPoly<K>& a) {
  UniPoly<K> out = a;
  for (auto& c : out.c) c = k.neg(c);
  return out;
}

template <class K>
UniPoly<K> uni_mul(const K& k, const UniPoly<K>& a, const UniPoly<K>& b) {
  if (a.is_zero() || b.is_zero()) return uni_zero<K>();
  UniPoly<K> out;
  out.c.assign(a.c.size() + b.c.size() - 1, k.zero());
  for (size_t i = 0; i < a.c.size(); ++i) {
    if (k.is_zero(a.c[i])) continue;
    for (size_t j = 0; j < b.c.size(); ++j)
      out.c[i + j] = k.add(out.c[i + j], k.mul(a.c[i], b.c[j]));
  }
  uni_trim(k, out);
  return out;
}

template <class K>
UniPoly<K> uni_scale(const K& k, const UniPoly<K>& a,
                     const typename K::Elem& s) {
  if (k.is_zero(s)) return uni_zero<K>();
  UniPoly<K> out = a;
  for (auto& c : out.c) c = k.mul(c, s);
  return out;
}

template <class K>
UniPoly<K> uni_shift(const K& k, const UniPoly<K>& a, long e) {
  require(e >= 0, ErrCode::NegativeExponent, "negative t power");
  if (a.is_zero()) return a;
  UniPoly<K> out;
  out.c.assign(a.c.size() + (size_t)e, k.zero());
  for (size_t i = 0; i < a.c.size(); ++i) out.c[i + (size_t)e] = a.c[i];
  return out;
}

template <class K>
void uni_divmod(const K& k, const UniPoly<K>& a, const UniPoly<K>& b,
                UniPoly<K>& q, UniPoly<K>& r) {
  require(!b.is_zero(), ErrCode::ZeroDivisorRequest,
          "univariate division by zero");
  q = uni_zero<K>();
  r = a;
  if (a.c.size() >= b.c.size())
    q.c.assign(a.c.size() - b.c.size() + 1, k.zero());
  auto binv = k.inv(b.c.back());
  while (!r.is_zero() && r.c.size() >= b.c.size()) {
    size_t shift = r.c.size() - b.c.size();
    auto coef = k.mul(r.c.back(), binv);
    q.c[shift] = coef;
    for (size_t i = 0; i < b.c.size(); ++i)
      r.c[shift + i] = k.sub(r.c[shift + i], k.mul(coef, b.c[i]));
    uni_trim(k, r);
  }
  uni_trim(k, q);
}

template <class K>
UniPoly<K> uni_exact_div(const K& k, const UniPoly<K>& a,
                         const UniPoly<K>& b) {
  UniPoly<K> q, r;
  uni_divmod(k, a, b, q, r);
  require(r.is_zero(), ErrCode::InvariantViolation,
          "univariate division is not exact");
  return q;
}

template <class K>
UniPoly<K> uni_gcd(const K& k, UniPoly<K> a, UniPoly<K> b) {
  while (!b.is_zero()) {
    UniPoly<K> q, r;
    uni_divmod(k, a, b, q, r);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.is_zero()) a = uni_scale(k, a, k.inv(a.c.back()));
  return a;
}

template <class K>
UniPoly<K> uni_pullback(const K& k, const Poly<K>& f,
                        const std::vector<long>& exps) {
  require((int)exps.size() == f.ring->nvars(), ErrCode::LengthMismatch,
          "one exponent per ring variable is required");
  for (long e : exps)
    require(e >= 1, ErrCode::RangeError,
            "curve exponents must be positive integers");
  UniPoly<K> out;
  for (const auto& t : f.terms) {
    long e = 0;
    for (int i = 0; i < f.ring->nvars(); ++i)
      e += exps[(size_t)i] * (long)t.first.e[(size_t)i];
    out = uni_add(k, out, uni_monomial(k, t.second, e));
  }
  return out;
}

template <class K>
UniRat<K> urat_zero() {
  UniRat<K> r;
  r.den.c.push_back(typename K::Elem{1});
  return r;
}

template <class K>
UniRat<K> urat_make(const K& k, UniPoly<K> num, UniPoly<K> den) {
  require(!den.is_zero(), ErrCode::ZeroDivisorRequest,
          "fraction with zero denominator");
  if (num.is_zero()) {
    UniRat<K> r;
    r.den = uni_const(k, k.one());
    return r;
  }
  long vd = uni_val(k, den);
  if (vd > 0) {
    long vn = uni_val(k, num);
    require(vn >= vd, ErrCode::InvariantViolation,
            "element is not in the local ring at t = 0");
    num.c.erase(num.c.begin(), num.c.begin() + vd);
    den.c.erase(den.c.begin(), den.c.begin() + vd);
  }
  UniPoly<K> g = uni_gcd(k, num, den);
  if (g.deg() > 0) {
    num = uni_exact_div(k, num, g);
    den = uni_exact_div(k, den, g);
  }
  auto unit = k.inv(den.c.front());
  UniRat<K> r;
  r.num = uni_scale(k, num, unit);
  r.den = uni_scale(k, den, unit);
  return r;
}

template <class K>
UniRat<K> urat_from(const K& k, UniPoly<K> num) {
  return urat_make(k, std::move(num), uni_const(k, k.one()));
}

template <class K>
long urat_val(const K& k, const UniRat<K>& a) {
  if (a.is_zero()) return UNIVAL_INF;
  return uni_val(k, a.num);
}

template <class K>
UniRat<K> urat_add(const K& k, const UniRat<K>& a, const UniRat<K>& b) {
  return urat_make(k,
                   uni_add(k, uni_mul(k, a.num, b.den),
                           uni_mul(k, b.num, a.den)),
                   uni_mul(k, a.den, b.den));
}

template <class K>
UniRat<K> urat_sub(const K& k, const UniRat<K>& a, const UniRat<K>& b) {
  return urat_add(k, a, urat_neg(k, b));
}

template <class K>
UniRat<K> urat_mul(const K& k, const UniRat<K>& a, const UniRat<K>& b) {
  return urat_make(k, uni_mul(k, a.num, b.num), uni_mul(k, a.den, b.den));
}

template <class K>
UniRat<K> urat_div(const K& k, const UniRat<K>& a, const UniRat<K>& b) {
  require(!b.is_zero(), ErrCode::ZeroDivisorRequest,
          "local division by zero");
  return urat_make(k, uni_mul(k, a.num, b.den), uni_mul(k, a.den, b.num));
}

template <class K>
UniRat<K> urat_neg(const K& k, const UniRat<K>& a) {
  UniRat<K> r = a;
  r.num = uni_neg(k, a.num);
  return r;
}

#define DETPOL_INSTANTIATE_UNI(K)                                            \
  template UniPoly<K> uni_zero<K>();                                         \
  template UniPoly<K> uni_const<K>(const K&, K::Elem);                       \
  template UniPoly<K> uni_monomial<K>(const K&, K::Elem, long);              \
  template void uni_trim<K>(const K&, UniPoly<K>&);                          \
  template long uni_val<K>(const K&, const UniPoly<K>&);                               \
  template bool uni_eq<K>(const K&, const UniPoly<K>&, const UniPoly<K>&);   \
  template UniPoly<K> uni_add<K>(const K&, const UniPoly<K>&,                \
                                 const UniPoly<K>&);                         \
  template UniPoly<K> uni_sub<K>(const K&, const UniPoly<K>&,                \
                                 const UniPoly<K>&);                         \
  template UniPoly<K> uni_neg<K>(const K&, const UniPoly<K>&);               \
  template UniPoly<K> uni_mul<K>(const K&, const UniPoly<K>&,                \
                                 const UniPoly<K>&);                         \
  template UniPoly<K> uni_scale<K>(const K&, const UniPoly<K>&,              \
                                   const K::Elem&);                          \
  template UniPoly<K> uni_shift<K>(const K&, const UniPoly<K>&, long);       \
  template void uni_divmod<K>(const K&, const UniPoly<K>&,                   \
                              const UniPoly<K>&, UniPoly<K>&, UniPoly<K>&);  \
  template UniPoly<K> uni_exact_div<K>(const K&, const UniPoly<K>&,          \
                                       const UniPoly<K>&);                   \
  template UniPoly<K> uni_gcd<K>(const K&, UniPoly<K>, UniPoly<K>);          \
  template UniPoly<K> uni_pullback<K>(const K&, const Poly<K>&,              \
                                      const std::vector<long>&);             \
  template UniRat<K> urat_zero<K>();                                         \
  template UniRat<K> urat_make<K>(const K&, UniPoly<K>, UniPoly<K>);         \
  template UniRat<K> urat_from<K>(const K&, UniPoly<K>);                     \
  template long urat_val<K>(const K&, const UniRat<K>&);                               \
  template UniRat<K> urat_add<K>(const K&, const UniRat<K>&,                 \
                                 const UniRat<K>&);                          \
  template UniRat<K> urat_sub<K>(const K&, const UniRat<K>&,                 \
                                 const UniRat<K>&);                          \
  template UniRat<K> urat_mul<K>(const K&, const UniRat<K>&,                 \
                                 const UniRat<K>&);                          \
  template UniRat<K> urat_div<K>(const K&, const UniRat<K>&,                 \
                                 const UniRat<K>&);                          \
  template UniRat<K> urat_neg<K>(const K&, const UniRat<K>&);

DETPOL_INSTANTIATE_UNI(RationalField)
DETPOL_INSTANTIATE_UNI(PrimeField)

}  // namespace detpol
