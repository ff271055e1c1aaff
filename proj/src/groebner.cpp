#include "detpol/groebner.hpp"

#include <algorithm>

namespace detpol {

namespace {

// ca * a (from term index `start`) + cb * (x^shift * b). The workhorse merge
// behind every reduction step.
template <class K>
Poly<K> merge2(const K& k, const Poly<K>& a, size_t start,
               const typename K::Elem& ca, const typename K::Elem& cb,
               const Monomial& shift, const Poly<K>& b, size_t bstart) {
  const MonomialOrder& ord = a.ring->order;
  Poly<K> out;
  out.ring = a.ring;
  out.terms.reserve(a.terms.size() - start + b.terms.size() - bstart);
  size_t i = start, j = bstart;
  bool ca_is_one = k.eq(ca, k.one());
  while (i < a.terms.size() || j < b.terms.size()) {
    if (j >= b.terms.size()) {
      auto cv = ca_is_one ? a.terms[i].second : k.mul(ca, a.terms[i].second);
      if (!k.is_zero(cv)) out.terms.push_back({a.terms[i].first, std::move(cv)});
      ++i;
      continue;
    }
    Monomial bm = mono_mul(b.terms[j].first, shift);
    if (i >= a.terms.size()) {
      auto cv = k.mul(cb, b.terms[j].second);
      if (!k.is_zero(cv)) out.terms.push_back({bm, std::move(cv)});
      ++j;
      continue;
    }
    int cmp = mono_cmp(a.terms[i].first, bm, ord);
    if (cmp > 0) {
      auto cv = ca_is_one ? a.terms[i].second : k.mul(ca, a.terms[i].second);
      if (!k.is_zero(cv)) out.terms.push_back({a.terms[i].first, std::move(cv)});
      ++i;
    } else if (cmp < 0) {
      auto cv = k.mul(cb, b.terms[j].second);
      if (!k.is_zero(cv)) out.terms.push_back({bm, std::move(cv)});
      ++j;
    } else {
      auto cv = k.add(ca_is_one ? a.terms[i].second
                                : k.mul(ca, a.terms[i].second),
                      k.mul(cb, b.terms[j].second));
      if (!k.is_zero(cv)) out.terms.push_back({a.terms[i].first, std::move(cv)});
      ++i;
      ++j;
    }
  }
  return out;
}

// Full reduction against a basis, with unit rescaling allowed (used inside
// the completion loop; keeps rational coefficients integral).
template <class K>
Poly<K> reduce_modulo(const K& k, Poly<K> cur,
                      const std::vector<Poly<K>>& basis) {
  std::vector<typename Poly<K>::Term> done;
  size_t start = 0;
  while (start < cur.terms.size()) {
    const Monomial& lead = cur.terms[start].first;
    const Poly<K>* red = nullptr;
    for (const auto& g : basis) {
      if (mono_divides(g.lm(), lead)) {
        red = &g;
        break;
      }
    }
    if (!red) {
      done.push_back(cur.terms[start]);
      ++start;
      continue;
    }
    typename K::Elem sa, sb;
    k.reduce_multipliers(cur.terms[start].second, red->lc(), sa, sb);
    // Rescale the already-emitted terms along with the remainder.
    if (!k.eq(sa, k.one()))
      for (auto& t : done) t.second = k.mul(t.second, sa);
    Monomial m = mono_div(lead, red->lm());
    cur = merge2(k, cur, start + 1, sa, k.neg(sb), m, *red, 1);
    start = 0;
  }
  Poly<K> out;
  out.ring = cur.ring;
  out.terms = std::move(done);
  return poly_canonical(k, out);
}

template <class K>
struct SPair {
  int i, j;
  Monomial lcm;
};

template <class K>
struct GBRun {
  const K& k;
  const RingCtx* ring;
  GBOptions opts;
  std::vector<Poly<K>> basis;
  std::vector<SPair<K>> pairs;
  long steps = 0;
  bool unit = false;

  GBRun(const K& kk, const RingCtx* r, const GBOptions& o)
      : k(kk), ring(r), opts(o) {}

  // Gebauer-Moller update: prune the pair set, then add the pairs of the
  // new element that survive the lcm and coprime criteria.
  void add_element(Poly<K> h) {
    h = poly_canonical(k, h);
    int t = (int)basis.size();
    const Monomial& lh = h.lm();
    if (lh.is_one()) unit = true;

    std::vector<SPair<K>> kept;
    kept.reserve(pairs.size());
    for (auto& pr : pairs) {
      bool drop = mono_divides(lh, pr.lcm) &&
                  !(mono_lcm(basis[(size_t)pr.i].lm(), lh) == pr.lcm) &&
                  !(mono_lcm(basis[(size_t)pr.j].lm(), lh) == pr.lcm);
      if (!drop) kept.push_back(std::move(pr));
    }
    pairs = std::move(kept);

    std::vector<SPair<K>> cand;
    cand.reserve((size_t)t);
    for (int i = 0; i < t; ++i)
      cand.push_back({i, t, mono_lcm(basis[(size_t)i].lm(), lh)});

    std::vector<bool> dead(cand.size(), false);
    // Keep one representative of each lcm, preferring a strict divisor.
    for (size_t a = 0; a < cand.size(); ++a) {
      if (dead[a]) continue;
      for (size_t b = 0; b < cand.size(); ++b) {
        if (a == b || dead[a] || dead[b]) continue;
        if (mono_divides(cand[b].lcm, cand[a].lcm)) {
          if (cand[a].lcm == cand[b].lcm && a < b) continue;
          dead[a] = true;
        }
      }
    }
    for (size_t a = 0; a < cand.size(); ++a) {
      if (dead[a]) continue;
      if (mono_coprime(basis[(size_t)cand[a].i].lm(), lh)) dead[a] = true;
    }
    for (size_t a = 0; a < cand.size(); ++a)
      if (!dead[a]) pairs.push_back(std::move(cand[a]));

    basis.push_back(std::move(h));
  }

  size_t select_pair() const {
    size_t best = 0;
    for (size_t a = 1; a < pairs.size(); ++a) {
      const auto& pa = pairs[a];
      const auto& pb = pairs[best];
      if (pa.lcm.deg != pb.lcm.deg) {
        if (pa.lcm.deg < pb.lcm.deg) best = a;
        continue;
      }
      int c = mono_cmp(pa.lcm, pb.lcm, ring->order);
      if (c < 0 || (c == 0 && (pa.j < pb.j || (pa.j == pb.j && pa.i < pb.i))))
        best = a;
    }
    return best;
  }

  Poly<K> spoly(const SPair<K>& pr) const {
    const Poly<K>& f = basis[(size_t)pr.i];
    const Poly<K>& g = basis[(size_t)pr.j];
    Monomial mf = mono_div(pr.lcm, f.lm());
    Monomial mg = mono_div(pr.lcm, g.lm());
    // lc(g) * x^mf * f - lc(f) * x^mg * g; the leads cancel.
    Poly<K> left = poly_zero<K>(f.ring);
    left = merge2(k, left, 0, k.one(), g.lc(), mf, f, 0);
    return merge2(k, left, 0, k.one(), k.neg(f.lc()), mg, g, 0);
  }

  void run() {
    while (!pairs.empty() && !unit) {
      if (++steps > opts.step_cap)
        fail(ErrCode::CapExceeded,
             "basis completion exceeded the step cap of " +
                 std::to_string(opts.step_cap));
      size_t at = select_pair();
      SPair<K> pr = pairs[at];
      pairs.erase(pairs.begin() + (long)at);
      Poly<K> r = reduce_modulo(k, spoly(pr), basis);
      if (!r.is_zero()) add_element(std::move(r));
    }
  }
};

// Minimize and tail-reduce a basis whose ideal it already generates as a
// Groebner basis; output is monic and sorted ascending by lead.
template <class K>
std::vector<Poly<K>> autoreduce(const K& k, std::vector<Poly<K>> in,
                                const RingCtx* ring) {
  std::sort(in.begin(), in.end(), [&](const Poly<K>& a, const Poly<K>& b) {
    return mono_cmp(a.lm(), b.lm(), ring->order) < 0;
  });
  std::vector<Poly<K>> min;
  for (auto& g : in) {
    bool covered = false;
    for (const auto& h : min)
      if (mono_divides(h.lm(), g.lm())) {
        covered = true;
        break;
      }
    if (!covered) min.push_back(std::move(g));
  }
  for (bool changed = true; changed;) {
    changed = false;
    for (size_t i = 0; i < min.size(); ++i) {
      std::vector<Poly<K>> others;
      others.reserve(min.size() - 1);
      for (size_t j = 0; j < min.size(); ++j)
        if (j != i) others.push_back(min[j]);
      Poly<K> r = reduce_modulo(k, min[i], others);
      if (!poly_eq(k, r, min[i])) {
        require(!r.is_zero(), ErrCode::InvariantViolation,
                "minimal basis element reduced to zero");
        min[(size_t)i] = std::move(r);
        changed = true;
      }
    }
  }
  for (auto& g : min) g = poly_monic(k, g);
  std::sort(min.begin(), min.end(), [&](const Poly<K>& a, const Poly<K>& b) {
    return mono_cmp(a.lm(), b.lm(), ring->order) < 0;
  });
  return min;
}

}  // namespace

template <class K>
ReducedGB<K> buchberger(const K& k, const Ideal<K>& ideal,
                        const GBOptions& opts) {
  GBRun<K> run(k, ideal.ring.get(), opts);
  for (const auto& g : ideal.gens) {
    if (g.is_zero()) continue;
    require(g.ring == ideal.ring.get(), ErrCode::RingMismatch,
            "generator does not live in the ideal's ring");
    if (run.unit) break;
    Poly<K> r = reduce_modulo(k, g, run.basis);
    if (!r.is_zero()) run.add_element(std::move(r));
  }
  run.run();
  ReducedGB<K> gb;
  gb.ring = ideal.ring;
  if (run.unit) {
    gb.g.push_back(poly_const<K>(k, ideal.ring.get(), k.one()));
    return gb;
  }
  gb.g = autoreduce(k, std::move(run.basis), ideal.ring.get());
  return gb;
}

template <class K>
ReducedGB<K> buchberger(const K& k, const Ideal<K>& ideal,
                        const MonomialOrder& order, const GBOptions& opts) {
  if (order == ideal.ring->order) return buchberger(k, ideal, opts);
  Rc ring2 = with_order(ideal.ring, order);
  Ideal<K> moved(ring2);
  moved.gens.reserve(ideal.gens.size());
  for (const auto& g : ideal.gens)
    moved.gens.push_back(poly_to_ring(k, g, ring2.get()));
  return buchberger(k, moved, opts);
}

template <class K>
Poly<K> normal_form(const K& k, const Poly<K>& f, const ReducedGB<K>& gb) {
  require(f.ring == gb.ring.get(), ErrCode::RingMismatch,
          "polynomial does not live in the basis ring");
  // Plain field-division reduction: canonical against a reduced basis.
  Poly<K> cur = f;
  std::vector<typename Poly<K>::Term> done;
  size_t start = 0;
  while (start < cur.terms.size()) {
    const Monomial& lead = cur.terms[start].first;
    const Poly<K>* red = nullptr;
    for (const auto& g : gb.g)
      if (mono_divides(g.lm(), lead)) {
        red = &g;
        break;
      }
    if (!red) {
      done.push_back(cur.terms[start]);
      ++start;
      continue;
    }
    auto c = k.div(cur.terms[start].second, red->lc());
    Monomial m = mono_div(lead, red->lm());
    cur = merge2(k, cur, start + 1, k.one(), k.neg(c), m, *red, 1);
    start = 0;
  }
  Poly<K> out;
  out.ring = f.ring;
  out.terms = std::move(done);
  return out;
}

template <class K>
Ideal<K> eliminate(const K& k, const Ideal<K>& ideal,
                   const std::vector<int>& drop, const GBOptions& opts) {
  const int n = ideal.ring->nvars();
  std::vector<bool> dropped((size_t)n, false);
  for (int i : drop) {
    require(i >= 0 && i < n, ErrCode::RangeError,
            "eliminated variable index out of range");
    require(!dropped[(size_t)i], ErrCode::RangeError,
            "duplicate variable in elimination list");
    dropped[(size_t)i] = true;
  }
  Rc sub = drop_vars(ideal.ring, drop);
  if (drop.empty()) {
    ReducedGB<K> gb = buchberger(k, ideal, opts);
    return Ideal<K>(ideal.ring, gb.g);
  }

  // Permuted working ring: eliminated block first, kept variables after.
  std::vector<std::string> pvars;
  std::vector<int> image((size_t)n, -1);
  for (int i = 0; i < n; ++i)
    if (dropped[(size_t)i]) {
      image[(size_t)i] = (int)pvars.size();
      pvars.push_back(ideal.ring->vars[(size_t)i]);
    }
  int nblock = (int)pvars.size();
  for (int i = 0; i < n; ++i)
    if (!dropped[(size_t)i]) {
      image[(size_t)i] = (int)pvars.size();
      pvars.push_back(ideal.ring->vars[(size_t)i]);
    }
  Rc work = make_ring(pvars, MonomialOrder::elim_block(nblock), 0);

  Ideal<K> moved(work);
  moved.gens.reserve(ideal.gens.size());
  for (const auto& g : ideal.gens)
    moved.gens.push_back(poly_map_vars(k, g, work.get(), image));
  ReducedGB<K> gb = buchberger(k, moved, opts);

  // In the block order a lead free of the first block forces every term of
  // that element to be free of it.
  std::vector<int> back((size_t)work->nvars(), -1);
  for (int i = 0, at = 0; i < n; ++i)
    if (!dropped[(size_t)i]) back[(size_t)(nblock + at++)] = sub->var_index(
        ideal.ring->vars[(size_t)i]);
  Ideal<K> kept(sub);
  for (const auto& g : gb.g) {
    bool free_of_block = true;
    for (int i = 0; i < nblock && free_of_block; ++i)
      if (g.lm().e[(size_t)i] > 0) free_of_block = false;
    if (free_of_block)
      kept.gens.push_back(poly_map_vars(k, g, sub.get(), back));
  }
  ReducedGB<K> out = buchberger(k, kept, opts);
  return Ideal<K>(sub, out.g);
}

template <class K>
std::vector<Monomial> lead_monomials(const ReducedGB<K>& gb) {
  std::vector<Monomial> leads;
  leads.reserve(gb.g.size());
  for (const auto& g : gb.g) leads.push_back(g.lm());
  return leads;
}

namespace {

// Depth-first walk of the complement of the staircase. Each lead is checked
// once, at the level of its largest-index variable; once an exponent at a
// level is blocked, every larger exponent there is blocked too.
struct StaircaseWalker {
  int n;
  const std::vector<std::vector<const Monomial*>>* by_level;
  const std::vector<long>* bound;
  std::vector<Monomial>* collect;
  long long limit;
  long long count = 0;
  Monomial cur;

  void rec(int level, uint32_t deg_so_far) {
    if (level == n) {
      ++count;
      require(count <= limit, ErrCode::ResourceLimit,
              "staircase complement larger than the enumeration limit");
      if (collect) collect->push_back(cur);
      return;
    }
    for (long e = 0; e < (*bound)[(size_t)level]; ++e) {
      cur.e[(size_t)level] = (uint16_t)e;
      cur.deg = deg_so_far + (uint32_t)e;
      bool blocked = false;
      for (const Monomial* m : (*by_level)[(size_t)level])
        if (mono_divides(*m, cur)) {
          blocked = true;
          break;
        }
      if (blocked) break;
      rec(level + 1, cur.deg);
    }
    cur.e[(size_t)level] = 0;
    cur.deg = deg_so_far;
  }
};

}  // namespace

template <class K>
static bool staircase_walk(const ReducedGB<K>& gb,
                           std::vector<Monomial>* collect, long long limit,
                           long long& count) {
  count = 0;
  const int n = gb.ring->nvars();
  std::vector<Monomial> leads = lead_monomials(gb);
  std::vector<long> bound((size_t)n, -1);
  for (const auto& m : leads) {
    int maxv = -1;
    int support = 0;
    for (int i = 0; i < n; ++i)
      if (m.e[(size_t)i] > 0) {
        maxv = i;
        ++support;
      }
    if (maxv < 0) return true;  // unit ideal: empty staircase complement
    if (support == 1) {
      long b = (long)m.e[(size_t)maxv];
      if (bound[(size_t)maxv] < 0 || b < bound[(size_t)maxv])
        bound[(size_t)maxv] = b;
    }
  }
  for (int i = 0; i < n; ++i)
    if (bound[(size_t)i] < 0) return false;  // infinite staircase

  std::vector<std::vector<const Monomial*>> by_level((size_t)n);
  for (const auto& m : leads) {
    int maxv = 0;
    for (int i = 0; i < n; ++i)
      if (m.e[(size_t)i] > 0) maxv = i;
    by_level[(size_t)maxv].push_back(&m);
  }

  StaircaseWalker w;
  w.n = n;
  w.by_level = &by_level;
  w.bound = &bound;
  w.collect = collect;
  w.limit = limit;
  w.rec(0, 0);
  count = w.count;
  return true;
}

template <class K>
std::optional<long long> quotient_dim(const ReducedGB<K>& gb) {
  long long count = 0;
  if (!staircase_walk(gb, nullptr, 100000000LL, count)) return std::nullopt;
  return count;
}

template <class K>
std::vector<Monomial> standard_monomials(const ReducedGB<K>& gb) {
  std::vector<Monomial> out;
  long long count = 0;
  require(staircase_walk(gb, &out, 2000000LL, count),
          ErrCode::NotZeroDimensional,
          "staircase complement is infinite");
  std::sort(out.begin(), out.end(), [&](const Monomial& a, const Monomial& b) {
    return mono_cmp(a, b, gb.ring->order) < 0;
  });
  return out;
}

template <class K>
int krull_dim(const ReducedGB<K>& gb) {
  if (gb.is_unit()) return -1;
  const int n = gb.ring->nvars();
  std::vector<uint32_t> supports;
  for (const auto& g : gb.g) supports.push_back(mono_support(g.lm()));
  int best = 0;
  for (uint32_t s = 0; s < (1u << n); ++s) {
    int pc = __builtin_popcount(s);
    if (pc <= best) continue;
    bool independent = true;
    for (uint32_t sup : supports)
      if ((sup & ~s) == 0) {
        independent = false;
        break;
      }
    if (independent) best = pc;
  }
  return best;
}

template <class K>
bool gb_equal(const K& k, const ReducedGB<K>& a, const ReducedGB<K>& b) {
  require(a.ring->vars == b.ring->vars && a.ring->order == b.ring->order,
          ErrCode::RingMismatch, "bases live in different rings");
  if (a.g.size() != b.g.size()) return false;
  for (size_t i = 0; i < a.g.size(); ++i) {
    if (a.g[i].terms.size() != b.g[i].terms.size()) return false;
    for (size_t t = 0; t < a.g[i].terms.size(); ++t) {
      if (!(a.g[i].terms[t].first == b.g[i].terms[t].first)) return false;
      if (!k.eq(a.g[i].terms[t].second, b.g[i].terms[t].second)) return false;
    }
  }
  return true;
}

template <class K>
bool in_ideal(const K& k, const Poly<K>& f, const ReducedGB<K>& gb) {
  return normal_form(k, f, gb).is_zero();
}

#define DETPOL_INSTANTIATE_GB(K)                                             \
  template ReducedGB<K> buchberger<K>(const K&, const Ideal<K>&,             \
                                      const GBOptions&);                     \
  template ReducedGB<K> buchberger<K>(const K&, const Ideal<K>&,             \
                                      const MonomialOrder&,                  \
                                      const GBOptions&);                     \
  template Poly<K> normal_form<K>(const K&, const Poly<K>&,                  \
                                  const ReducedGB<K>&);                      \
  template Ideal<K> eliminate<K>(const K&, const Ideal<K>&,                  \
                                 const std::vector<int>&, const GBOptions&); \
  template std::optional<long long> quotient_dim<K>(const ReducedGB<K>&);    \
  template std::vector<Monomial> standard_monomials<K>(const ReducedGB<K>&); \
  template int krull_dim<K>(const ReducedGB<K>&);                            \
  template bool gb_equal<K>(const K&, const ReducedGB<K>&,                   \
                            const ReducedGB<K>&);                            \
  template bool in_ideal<K>(const K&, const Poly<K>&, const ReducedGB<K>&);

DETPOL_INSTANTIATE_GB(RationalField)
DETPOL_INSTANTIATE_GB(PrimeField)

}  // namespace detpol
