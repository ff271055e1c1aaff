#include "detpol/ideals.hpp"

#include <algorithm>

namespace detpol {

namespace {

// Ring extended by one auxiliary variable (appended last), with a name not
// colliding with the existing ones.
Rc extend_by_aux(const Rc& ring, std::string base, int* aux_index) {
  while (ring->find_var(base) >= 0) base += "_";
  std::vector<std::string> vars = ring->vars;
  vars.push_back(base);
  *aux_index = (int)vars.size() - 1;
  MonomialOrder ord = ring->order;
  if (ord.kind == OrderKind::Weighted) ord = MonomialOrder::degrevlex();
  if (ord.kind == OrderKind::Block) ord = MonomialOrder::degrevlex();
  return make_ring(std::move(vars), ord, 0);
}

template <class K>
std::vector<int> identity_image(int n) {
  std::vector<int> image((size_t)n);
  for (int i = 0; i < n; ++i) image[(size_t)i] = i;
  return image;
}

}  // namespace

template <class K>
Ideal<K> ideal_sum(const Ideal<K>& a, const Ideal<K>& b) {
  require(a.ring.get() == b.ring.get(), ErrCode::RingMismatch,
          "ideal sum across rings");
  Ideal<K> out(a.ring, a.gens);
  out.gens.insert(out.gens.end(), b.gens.begin(), b.gens.end());
  return out;
}

template <class K>
Ideal<K> ideal_intersect(const K& k, const Ideal<K>& a, const Ideal<K>& b,
                         const GBOptions& opts) {
  require(a.ring.get() == b.ring.get(), ErrCode::RingMismatch,
          "ideal intersection across rings");
  int aux = -1;
  Rc ext = extend_by_aux(a.ring, "_w", &aux);
  std::vector<int> image = identity_image<K>(a.ring->nvars());
  Poly<K> w = poly_var<K>(k, ext.get(), aux);
  Poly<K> one_minus_w =
      poly_sub(k, poly_const<K>(k, ext.get(), k.one()), w);
  Ideal<K> mix(ext);
  for (const auto& f : a.gens)
    mix.gens.push_back(poly_mul(k, w, poly_map_vars(k, f, ext.get(), image)));
  for (const auto& g : b.gens)
    mix.gens.push_back(
        poly_mul(k, one_minus_w, poly_map_vars(k, g, ext.get(), image)));
  Ideal<K> elim = eliminate(k, mix, {aux}, opts);
  // Map from the aux-free subring back into the original ring.
  std::vector<int> back = identity_image<K>(elim.ring->nvars());
  Ideal<K> out(a.ring);
  for (const auto& g : elim.gens)
    out.gens.push_back(poly_map_vars(k, g, a.ring.get(), back));
  return out;
}

template <class K>
Ideal<K> ideal_quotient(const K& k, const Ideal<K>& ideal, const Ideal<K>& j,
                        const GBOptions& opts) {
  require(ideal.ring.get() == j.ring.get(), ErrCode::RingMismatch,
          "ideal quotient across rings");
  bool any_nonzero = false;
  for (const auto& g : j.gens)
    if (!g.is_zero()) any_nonzero = true;
  require(any_nonzero, ErrCode::ZeroDivisorRequest,
          "quotient by the zero ideal");

  bool have = false;
  Ideal<K> acc(ideal.ring);
  for (const auto& g : j.gens) {
    if (g.is_zero()) continue;
    Ideal<K> part(ideal.ring);
    if (g.lm().is_one()) {
      // Quotient by a unit multiple: (I : c) = I.
      part = ideal;
    } else {
      Ideal<K> principal(ideal.ring, {g});
      Ideal<K> inter = ideal_intersect(k, ideal, principal, opts);
      for (const auto& h : inter.gens)
        part.gens.push_back(poly_exact_div(k, h, g));
    }
    if (!have) {
      acc = std::move(part);
      have = true;
    } else {
      acc = ideal_intersect(k, acc, part, opts);
    }
  }
  ReducedGB<K> gb = buchberger(k, acc, opts);
  return Ideal<K>(ideal.ring, gb.g);
}

template <class K>
Ideal<K> saturate(const K& k, const Ideal<K>& ideal, const Ideal<K>& j,
                  const GBOptions& opts) {
  ReducedGB<K> cur = buchberger(k, ideal, opts);
  for (;;) {
    Ideal<K> next = ideal_quotient(k, Ideal<K>(ideal.ring, cur.g), j, opts);
    ReducedGB<K> ngb = buchberger(k, next, opts);
    if (gb_equal(k, ngb, cur)) return Ideal<K>(ideal.ring, cur.g);
    cur = std::move(ngb);
  }
}

template <class K>
Ideal<K> substitute(const K& k, const Ideal<K>& ideal, int var,
                    const typename K::Elem& value) {
  require(var >= 0 && var < ideal.ring->nvars(), ErrCode::RangeError,
          "substituted variable index out of range");
  Rc sub = drop_vars(ideal.ring, {var});
  std::vector<int> image((size_t)ideal.ring->nvars());
  for (int i = 0, at = 0; i < ideal.ring->nvars(); ++i)
    image[(size_t)i] = (i == var) ? -1 : at++;
  Ideal<K> out(sub);
  out.gens.reserve(ideal.gens.size());
  for (const auto& g : ideal.gens) {
    Poly<K> eval = poly_eval_var(k, g, var, value);
    out.gens.push_back(poly_map_vars(k, eval, sub.get(), image));
  }
  return out;
}

template <class K>
Ideal<K> minors_ideal(const K& k, const PolyMatrix<K>& m, int size) {
  Ideal<K> out(m.ring);
  if (size <= 0) {
    out.gens.push_back(poly_const<K>(k, m.ring.get(), k.one()));
    return out;
  }
  if (size > m.rows || size > m.cols) return out;  // zero ideal
  auto row_sets = subsets_lex(m.rows, size);
  auto col_sets = subsets_lex(m.cols, size);
  for (const auto& rs : row_sets)
    for (const auto& cs : col_sets)
      out.gens.push_back(matrix_minor(k, m, rs, cs));
  return out;
}

template <class K>
Ideal<K> fitting_ideal(const K& k, const PolyMatrix<K>& m, int j) {
  require(j >= 0, ErrCode::RangeError, "Fitting index must be nonnegative");
  return minors_ideal(k, m, m.rows - j);
}

template <class K>
Ideal<K> origin_ideal(const K& k, const Rc& ring) {
  Ideal<K> out(ring);
  for (int i = 0; i < ring->nfiber(); ++i)
    out.gens.push_back(poly_var<K>(k, ring.get(), i));
  return out;
}

template <class K>
long long colength_at_origin(const K& k, const Ideal<K>& ideal,
                             const GBOptions& opts) {
  require(ideal.ring->nparams == 0, ErrCode::InputError,
          "colength needs a parameter-free ring");
  ReducedGB<K> gb = buchberger(k, ideal, opts);
  auto total = quotient_dim(gb);
  require(total.has_value(), ErrCode::NotZeroDimensional,
          "ideal is not zero-dimensional");
  if (*total == 0) return 0;
  Ideal<K> away =
      saturate(k, Ideal<K>(ideal.ring, gb.g), origin_ideal(k, ideal.ring),
               opts);
  auto off = quotient_dim(buchberger(k, away, opts));
  require(off.has_value(), ErrCode::InvariantViolation,
          "saturation of a zero-dimensional ideal must stay zero-dimensional");
  require(*off <= *total, ErrCode::InvariantViolation,
          "off-origin part exceeds the total");
  return *total - *off;
}

template <class K>
std::vector<Poly<K>> random_linear_forms(const K& k, const Rc& ring,
                                         int count, SplitMix64& rng) {
  require(count >= 0, ErrCode::RangeError, "negative form count");
  std::vector<Poly<K>> out;
  out.reserve((size_t)count);
  const int n = ring->nfiber();
  require(n > 0, ErrCode::RangeError, "ring has no fiber variables");
  for (int fi = 0; fi < count; ++fi) {
    for (;;) {
      std::vector<typename Poly<K>::Term> terms;
      bool nonzero = false;
      for (int v = 0; v < n; ++v) {
        long long c = rng.range(-999, 999);
        if (c == 0) continue;
        nonzero = true;
        terms.push_back({Monomial::var(v), k.from_long(c)});
      }
      if (!nonzero) continue;
      out.push_back(poly_normalize<K>(k, ring.get(), std::move(terms)));
      break;
    }
  }
  return out;
}

template <class K>
PolyMatrix<K> generic_combinations(const K& k, const PolyMatrix<K>& m, int c,
                                   SplitMix64& rng) {
  require(c >= 0 && c <= m.cols, ErrCode::RangeError,
          "combination count must lie between 0 and the generator count");
  PolyMatrix<K> r(m.ring, m.cols, c);
  if (c > 0) {
    for (;;) {
      for (int i = 0; i < m.cols; ++i)
        for (int j = 0; j < c; ++j)
          r.at(i, j) =
              poly_const<K>(k, m.ring.get(), k.from_long(rng.range(-20, 20)));
      if (matrix_rank(k, r) == std::min(m.cols, c)) break;
    }
  }
  return matrix_mul(k, m, r);
}

template <class K>
Ideal<K> rees_relations(const K& k, const PolyMatrix<K>& m,
                        const Ideal<K>& ambient, const GBOptions& opts) {
  require(m.ring.get() == ambient.ring.get(), ErrCode::RingMismatch,
          "module and ambient ideal live in different rings");
  const int p = m.rows, g = m.cols, nx = m.ring->nvars();
  require(nx + p + g <= MAX_VARS, ErrCode::ResourceLimit,
          "relation computation needs " + std::to_string(nx + p + g) +
              " variables, above the cap of " + std::to_string(MAX_VARS));

  std::vector<std::string> vars = m.ring->vars;
  auto fresh = [&](std::string base) {
    for (;;) {
      bool taken = false;
      for (const auto& v : vars)
        if (v == base) taken = true;
      if (!taken) return base;
      base += "_";
    }
  };
  std::vector<int> tvar((size_t)p), zvar((size_t)g);
  for (int i = 0; i < p; ++i) {
    vars.push_back(fresh("T" + std::to_string(i + 1)));
    tvar[(size_t)i] = (int)vars.size() - 1;
  }
  for (int i = 0; i < g; ++i) {
    vars.push_back(fresh("z" + std::to_string(i + 1)));
    zvar[(size_t)i] = (int)vars.size() - 1;
  }
  Rc work = make_ring(vars, MonomialOrder::degrevlex(), 0);

  std::vector<int> image = identity_image<K>(nx);
  Ideal<K> sys(work);
  for (const auto& f : ambient.gens)
    sys.gens.push_back(poly_map_vars(k, f, work.get(), image));
  for (int i = 0; i < g; ++i) {
    Poly<K> rel = poly_var<K>(k, work.get(), zvar[(size_t)i]);
    for (int j = 0; j < p; ++j) {
      Poly<K> coeff = poly_map_vars(k, m.at(j, i), work.get(), image);
      rel = poly_sub(k, rel,
                     poly_mul(k, coeff,
                              poly_var<K>(k, work.get(), tvar[(size_t)j])));
    }
    sys.gens.push_back(std::move(rel));
  }
  return eliminate(k, sys, tvar, opts);
}

template <class K>
bool ideal_equal(const K& k, const Ideal<K>& a, const Ideal<K>& b,
                 const GBOptions& opts) {
  require(a.ring->vars == b.ring->vars, ErrCode::RingMismatch,
          "ideal comparison across rings");
  ReducedGB<K> ga = buchberger(k, a, opts);
  Ideal<K> moved(a.ring);
  for (const auto& g : b.gens)
    moved.gens.push_back(poly_to_ring(k, g, a.ring.get()));
  ReducedGB<K> gb = buchberger(k, moved, opts);
  return gb_equal(k, ga, gb);
}

#define DETPOL_INSTANTIATE_IDEALS(K)                                          \
  template Ideal<K> ideal_sum<K>(const Ideal<K>&, const Ideal<K>&);           \
  template Ideal<K> ideal_intersect<K>(const K&, const Ideal<K>&,             \
                                       const Ideal<K>&, const GBOptions&);    \
  template Ideal<K> ideal_quotient<K>(const K&, const Ideal<K>&,              \
                                      const Ideal<K>&, const GBOptions&);     \
  template Ideal<K> saturate<K>(const K&, const Ideal<K>&, const Ideal<K>&,   \
                                const GBOptions&);                            \
  template Ideal<K> substitute<K>(const K&, const Ideal<K>&, int,             \
                                  const K::Elem&);                            \
  template Ideal<K> minors_ideal<K>(const K&, const PolyMatrix<K>&, int);     \
  template Ideal<K> fitting_ideal<K>(const K&, const PolyMatrix<K>&, int);    \
  template Ideal<K> origin_ideal<K>(const K&, const Rc&);                     \
  template long long colength_at_origin<K>(const K&, const Ideal<K>&,         \
                                           const GBOptions&);                 \
  template std::vector<Poly<K>> random_linear_forms<K>(const K&, const Rc&,   \
                                                       int, SplitMix64&);     \
  template PolyMatrix<K> generic_combinations<K>(const K&,                    \
                                                 const PolyMatrix<K>&, int,   \
                                                 SplitMix64&);                \
  template Ideal<K> rees_relations<K>(const K&, const PolyMatrix<K>&,         \
                                      const Ideal<K>&, const GBOptions&);     \
  template bool ideal_equal<K>(const K&, const Ideal<K>&, const Ideal<K>&,    \
                               const GBOptions&);

DETPOL_INSTANTIATE_IDEALS(RationalField)
DETPOL_INSTANTIATE_IDEALS(PrimeField)

}  // namespace detpol
