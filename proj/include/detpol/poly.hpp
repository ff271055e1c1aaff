#pragma once

#include <string>
#include <utility>
#include <vector>

#include "detpol/ring.hpp"
#include "detpol/scalar.hpp"

namespace detpol {

// Sparse polynomial: term list sorted strictly descending under the ring
// order, no zero coefficients. The ring pointer identifies the context; it
// must outlive the polynomial (ideals and matrices own rings shared_ptr).
template <class K>
struct Poly {
  using Elem = typename K::Elem;
  using Term = std::pair<Monomial, Elem>;

  const RingCtx* ring = nullptr;
  std::vector<Term> terms;

  bool is_zero() const { return terms.empty(); }
  const Monomial& lm() const { return terms.front().first; }
  const Elem& lc() const { return terms.front().second; }
  long total_degree() const {
    long d = -1;
    for (const auto& t : terms) d = std::max(d, (long)t.first.deg);
    return d;
  }
};

template <class K>
void check_same_ring(const Poly<K>& a, const Poly<K>& b) {
  require(a.ring == b.ring, ErrCode::RingMismatch,
          "operands live in different rings");
}

template <class K>
Poly<K> poly_zero(const RingCtx* ring);
template <class K>
Poly<K> poly_const(const K& k, const RingCtx* ring, typename K::Elem c);
template <class K>
Poly<K> poly_var(const K& k, const RingCtx* ring, int var);
template <class K>
Poly<K> poly_term(const K& k, const RingCtx* ring, const Monomial& m,
                  typename K::Elem c);

// Sort + merge an arbitrary term list into canonical form.
template <class K>
Poly<K> poly_normalize(const K& k, const RingCtx* ring,
                       std::vector<typename Poly<K>::Term> terms);

template <class K>
bool poly_eq(const K& k, const Poly<K>& a, const Poly<K>& b);

template <class K>
Poly<K> poly_add(const K& k, const Poly<K>& a, const Poly<K>& b);
template <class K>
Poly<K> poly_sub(const K& k, const Poly<K>& a, const Poly<K>& b);
template <class K>
Poly<K> poly_neg(const K& k, const Poly<K>& a);
template <class K>
Poly<K> poly_mul(const K& k, const Poly<K>& a, const Poly<K>& b);
template <class K>
Poly<K> poly_scale(const K& k, const Poly<K>& a, const typename K::Elem& c);

// a - c * x^m * b with no term dropped; the reduction kernel.
template <class K>
Poly<K> poly_axpy(const K& k, const Poly<K>& a, const typename K::Elem& c,
                  const Monomial& m, const Poly<K>& b);

template <class K>
Poly<K> poly_derivative(const K& k, const Poly<K>& a, int var);

// Evaluate one variable at a scalar; result lives in the same ring.
template <class K>
Poly<K> poly_eval_var(const K& k, const Poly<K>& a, int var,
                      const typename K::Elem& value);

// Scale so the coefficient sequence is canonical for the field (coprime
// integers with positive lead over Q, monic over a prime field).
template <class K>
Poly<K> poly_canonical(const K& k, const Poly<K>& a);

template <class K>
Poly<K> poly_monic(const K& k, const Poly<K>& a);

// Move a polynomial into a ring with the same variable names (order may
// differ); re-sorts terms.
template <class K>
Poly<K> poly_to_ring(const K& k, const Poly<K>& a, const RingCtx* ring);

// Map terms through a variable-index permutation: image[i] is the index in
// the target ring of source variable i, or -1 when the variable must be
// absent from every term.
template <class K>
Poly<K> poly_map_vars(const K& k, const Poly<K>& a, const RingCtx* ring,
                      const std::vector<int>& image);

// Exact quotient f / g; InvariantViolation when division leaves a remainder.
template <class K>
Poly<K> poly_exact_div(const K& k, const Poly<K>& f, const Poly<K>& g);

// Parse "3/2*x^2*y - 7" style input. Grammar: sums of products of factors,
// a factor is a rational literal, a declared variable, a parenthesized
// expression, or a unary minus; '^' takes a nonnegative integer literal.
template <class K>
Poly<K> parse_poly(const K& k, const RingCtx* ring, const std::string& text);

template <class K>
std::string poly_str(const K& k, const Poly<K>& a);

}  // namespace detpol
