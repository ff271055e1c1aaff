#include "detpol/detsing.hpp"

#include <algorithm>

namespace detpol {

long long binom(long long n, long long r) {
  if (r < 0 || r > n) return 0;
  r = std::min(r, n - r);
  long long out = 1;
  for (long long i = 1; i <= r; ++i) {
    out = out * (n - r + i) / i;
    require(out >= 0, ErrCode::ResourceLimit, "binomial overflow");
  }
  return out;
}

bool gamma_empty_bound(int n, int k, int r, long long u) {
  require(1 <= r && r <= n, ErrCode::RangeError,
          "rank bound must lie between 1 and the column count");
  return u <= (long long)(n - r) * (n + k - r) - 1;
}

long long euler_from_polar(long long polar, long long chi_slice, int d) {
  require(d >= 1, ErrCode::RangeError, "dimension must be at least 1");
  return (d % 2 ? -polar : polar) + chi_slice;
}

long long kt_formula(long long e_pair,
                     const std::vector<std::pair<int, long long>>& polar_mults,
                     int ambient_dim_minus_1) {
  int dmax = 0;
  for (const auto& pm : polar_mults) {
    require(pm.first >= 1, ErrCode::RangeError,
            "polar indices start at 1");
    dmax = std::max(dmax, pm.first);
  }
  long long out = e_pair;
  for (const auto& pm : polar_mults)
    out += binom(ambient_dim_minus_1, dmax + 1 - pm.first) * pm.second;
  return out;
}

template <class K>
PresMat<K> make_presmat(const K& k, PolyMatrix<K> m) {
  require(m.rows > 0 && m.cols > 0, ErrCode::InputError,
          "presentation matrix must be nonempty");
  require(m.rows >= m.cols, ErrCode::InputError,
          "presentation matrix needs at least as many rows as columns");
  for (const auto& f : m.a)
    for (const auto& t : f.terms)
      require(!t.first.is_one(), ErrCode::InputError,
              "presentation entries must vanish at the origin");
  PresMat<K> p;
  p.n = m.cols;
  p.k = m.rows - m.cols;
  p.q = m.ring->nfiber();
  p.d = p.q - (p.k + 1);
  require(p.d >= 0, ErrCode::InputError,
          "expected dimension q - (k+1) is negative");
  p.m = std::move(m);
  (void)k;
  return p;
}

template <class K>
Ideal<K> defining_ideal(const K& k, const PresMat<K>& p) {
  return minors_ideal(k, p.m, p.n);
}

template <class K>
PolyMatrix<K> jacobian_module(const K& k, const PresMat<K>& p,
                              bool relative) {
  auto minors = minors_ideal(k, p.m, p.n);
  const int nv =
      relative ? p.m.ring->nfiber() : p.m.ring->nvars();
  PolyMatrix<K> out(p.m.ring, (int)minors.gens.size(), nv);
  for (int r = 0; r < out.rows; ++r)
    for (int v = 0; v < nv; ++v)
      out.at(r, v) = poly_derivative(k, minors.gens[(size_t)r], v);
  return out;
}

template <class K>
PolyMatrix<K> nd_generators(const K& k, const PresMat<K>& p) {
  const int rows = p.n + p.k;
  auto kept = subsets_lex(rows, p.n);
  PolyMatrix<K> out(p.m.ring, (int)kept.size(), p.n * rows);
  std::vector<int> all_cols;
  for (int j = 0; j < p.n; ++j) all_cols.push_back(j);
  for (int r = 0; r < out.rows; ++r) {
    const auto& keep = kept[(size_t)r];
    for (int j = 0; j < p.n; ++j) {
      std::vector<int> cols;
      for (int c : all_cols)
        if (c != j) cols.push_back(c);
      for (int i = 0; i < rows; ++i) {
        auto pos = std::find(keep.begin(), keep.end(), i);
        if (pos == keep.end()) continue;
        std::vector<int> rws;
        for (int rr : keep)
          if (rr != i) rws.push_back(rr);
        auto cof = matrix_minor(k, p.m, rws, cols);
        if (((pos - keep.begin()) + j) % 2) cof = poly_neg(k, cof);
        out.at(r, j * rows + i) = std::move(cof);
      }
    }
  }
  return out;
}

template <class K>
PolyMatrix<K> sub_rows(const K& k, const PresMat<K>& p, int l) {
  (void)k;
  const int nrows = p.n - p.d - l;
  require(nrows >= 0 && nrows <= p.n + p.k, ErrCode::RangeError,
          "selected row count is out of range");
  PolyMatrix<K> out(p.m.ring, nrows, p.n);
  for (int i = 0; i < nrows; ++i)
    for (int j = 0; j < p.n; ++j) out.at(i, j) = p.m.at(i, j);
  return out;
}

template <class K>
PolyMatrix<K> sub_complement(const K& k, const PresMat<K>& p, int i, int j) {
  (void)k;
  require(i >= 0 && i <= std::min(p.d, p.n - 1), ErrCode::RangeError,
          "codimension index is out of range");
  require(j >= 0, ErrCode::RangeError, "term index must be nonnegative");
  if (p.n + p.k - j - 1 <= 0) return PolyMatrix<K>(p.m.ring, 0, 0);
  const int lead = p.n - p.d + i - j - 1;
  const int tail = p.d + p.k - i;
  require(lead >= 0, ErrCode::RangeError,
          "term index too large for the row split");
  const int ncols = p.n - i;
  PolyMatrix<K> out(p.m.ring, lead + tail, ncols);
  for (int r = 0; r < lead; ++r)
    for (int c = 0; c < ncols; ++c)
      out.at(r, c) = p.m.at(r, p.n - ncols + c);
  for (int r = 0; r < tail; ++r)
    for (int c = 0; c < ncols; ++c)
      out.at(lead + r, c) = p.m.at(p.n + p.k - tail + r, p.n - ncols + c);
  return out;
}

template <class K>
long long intersection_number(const K& k, const PolyMatrix<K>& a,
                              const PolyMatrix<K>& b, const Ideal<K>* ambient,
                              GenericityLog* log, const GBOptions& opts) {
  Rc ring;
  if (!a.empty())
    ring = a.ring;
  else if (!b.empty())
    ring = b.ring;
  else if (ambient)
    ring = ambient->ring;
  require(ring != nullptr, ErrCode::InputError,
          "intersection number needs at least one nonempty input");
  if (!a.empty() && !b.empty())
    require(a.ring == b.ring, ErrCode::RingMismatch,
            "matrices live in different rings");
  if (ambient)
    require(ambient->ring == ring, ErrCode::RingMismatch,
            "ambient ideal lives in a different ring");
  require(ring->nparams == 0, ErrCode::InvariantViolation,
          "intersection numbers need parameter-free input; substitute "
          "parameters first");

  Ideal<K> sum(ring);
  auto add_minors = [&](const PolyMatrix<K>& m) {
    if (m.empty()) return;
    auto mi = minors_ideal(k, m, std::min(m.rows, m.cols));
    for (auto& g : mi.gens)
      if (!g.is_zero()) sum.gens.push_back(std::move(g));
  };
  add_minors(a);
  add_minors(b);
  if (ambient)
    for (const auto& g : ambient->gens)
      if (!g.is_zero()) sum.gens.push_back(g);

  auto gb = buchberger(k, sum, opts);
  GenericityCheck chk;
  chk.stage = "intersection";
  chk.expected_codim = ring->nfiber();
  if (!quotient_dim(gb).has_value()) {
    chk.ok = false;
    chk.actual_dim = krull_dim(gb);
    if (log) log->push_back(chk);
    fail(ErrCode::GenericityFail,
         "intersection locus has dimension " + std::to_string(chk.actual_dim) +
             " instead of 0 (expected codimension " +
             std::to_string(chk.expected_codim) + ")");
  }
  long long val = colength_at_origin(k, sum, opts);
  chk.actual_dim = 0;
  chk.value = val;
  if (log) log->push_back(chk);
  return val;
}

template <class K>
PolyMatrix<K> unimodular_perturb(const K& k, const PolyMatrix<K>& m,
                                 SplitMix64& rng) {
  PolyMatrix<K> out = m;
  if (m.rows > 1)
    for (int it = 0; it < 2 * m.rows; ++it) {
      int a = (int)rng.range(0, m.rows - 1);
      int b = (int)rng.range(0, m.rows - 2);
      if (b >= a) ++b;
      auto c = k.from_long(rng.nonzero(3));
      for (int j = 0; j < m.cols; ++j)
        out.at(a, j) =
            poly_add(k, out.at(a, j), poly_scale(k, out.at(b, j), c));
    }
  if (m.cols > 1)
    for (int it = 0; it < 2 * m.cols; ++it) {
      int a = (int)rng.range(0, m.cols - 1);
      int b = (int)rng.range(0, m.cols - 2);
      if (b >= a) ++b;
      auto c = k.from_long(rng.nonzero(3));
      for (int i = 0; i < m.rows; ++i)
        out.at(i, a) =
            poly_add(k, out.at(i, a), poly_scale(k, out.at(i, b), c));
    }
  return out;
}

template <class K>
long long mixed_polar_degree(const K& k, const PresMat<K>& p, int i,
                             const Seed& seed, GenericityLog* log,
                             const GBOptions& opts) {
  require(i >= 0, ErrCode::RangeError, "codimension index must be nonnegative");
  if (i > std::min(p.d, p.n - 1)) return 0;
  const int jmax = std::min(p.n - p.d + i - 1, i + p.k);
  if (jmax < 0) return 0;
  const int jalt = std::min(p.n - p.d + i - 1, i + p.k - 1);

  auto eval_terms = [&](const PresMat<K>& pm, GenericityLog* lg) {
    std::vector<long long> terms;
    for (int j = 0; j <= jmax; ++j) {
      auto a = sub_rows(k, pm, j - i);
      auto b = sub_complement(k, pm, i, j);
      long long v;
      try {
        v = intersection_number(k, a, b, (const Ideal<K>*)nullptr, lg, opts);
      } catch (const Error& e) {
        if (e.code() != ErrCode::GenericityFail) throw;
        if (lg && !lg->empty()) {
          lg->back().i = i;
          lg->back().j = j;
        }
        fail(ErrCode::GenericityFail,
             "term (i=" + std::to_string(i) + ", j=" + std::to_string(j) +
                 "): " + e.what());
      }
      if (lg && !lg->empty()) {
        lg->back().i = i;
        lg->back().j = j;
      }
      terms.push_back(v);
    }
    return terms;
  };

  std::vector<long long> terms;
  try {
    terms = eval_terms(p, log);
  } catch (const Error& e) {
    if (e.code() != ErrCode::GenericityFail) throw;
    auto rng = Seed::stream(seed.primary, "matrix-genericity-retry");
    PresMat<K> pp = p;
    pp.m = unimodular_perturb(k, p.m, rng);
    GenericityLog retry_log;
    auto merge_retry = [&] {
      for (auto& c : retry_log) c.retried = true;
      if (log) log->insert(log->end(), retry_log.begin(), retry_log.end());
    };
    try {
      terms = eval_terms(pp, &retry_log);
    } catch (...) {
      merge_retry();
      throw;
    }
    merge_retry();
  }

  long long sum = 0, alt = 0;
  for (int j = 0; j <= jmax; ++j) {
    long long s = (j % 2) ? -terms[(size_t)j] : terms[(size_t)j];
    sum += s;
    if (j <= jalt) alt += s;
  }
  if (alt != sum && log) {
    GenericityCheck chk;
    chk.stage = "index-bound";
    chk.i = i;
    chk.j = jmax;
    chk.ok = false;
    chk.value = alt;
    log->push_back(chk);
  }
  return sum;
}

template <class K>
bool polar_nonempty_predicate(const PresMat<K>& p) {
  return p.q <= 2 * p.n + p.k - 1;
}

template <class K>
long long nd_polar_mult(const K& k, const PresMat<K>& p, const Seed& seed,
                        GenericityLog* log, const GBOptions& opts) {
  if (!polar_nonempty_predicate(p)) {
    if (log) {
      GenericityCheck chk;
      chk.stage = "polar-empty-predicate";
      chk.value = 0;
      log->push_back(chk);
    }
    return 0;
  }
  long long out = 0;
  for (int i = 0; i <= std::min(p.d, p.n - 1); ++i)
    out += binom(p.d + p.k, i) * mixed_polar_degree(k, p, i, seed, log, opts);
  return out;
}

template <class K>
int generic_rank(const K& k, const PolyMatrix<K>& gens,
                 const ReducedGB<K>& ambient_gb) {
  if (ambient_gb.ring)
    require(ambient_gb.ring == gens.ring, ErrCode::RingMismatch,
            "ambient basis lives in a different ring");
  for (int s = std::min(gens.rows, gens.cols); s >= 1; --s)
    for (const auto& rs : subsets_lex(gens.rows, s))
      for (const auto& cs : subsets_lex(gens.cols, s)) {
        auto mr = matrix_minor(k, gens, rs, cs);
        if (mr.is_zero()) continue;
        if (!normal_form(k, mr, ambient_gb).is_zero()) return s;
      }
  return 0;
}

template <class K>
Ideal<K> polar_ideal(const K& k, const PolyMatrix<K>& gens,
                     const Ideal<K>& ambient, int i, SplitMix64& rng,
                     int* g_out, const GBOptions& opts) {
  require(gens.ring == ambient.ring, ErrCode::RingMismatch,
          "module and ambient ideal live in different rings");
  require(i >= 0, ErrCode::RangeError,
          "polar codimension must be nonnegative");
  auto agb = buchberger(k, ambient, opts);
  const int g = generic_rank(k, gens, agb);
  if (g_out) *g_out = g;
  require(g >= 1, ErrCode::InvariantViolation,
          "module is zero on the ambient space");
  Ideal<K> out(gens.ring);
  // Codimension 0 keeps the whole space: with fewer combinations than the
  // generic rank there are no minors and the polar locus is all of X.
  if (g + i - 1 >= 1) {
    auto combos = generic_combinations(k, gens, g + i - 1, rng);
    auto mi = minors_ideal(k, combos, g);
    for (auto& f : mi.gens)
      if (!f.is_zero()) out.gens.push_back(std::move(f));
  }
  for (const auto& f : ambient.gens)
    if (!f.is_zero()) out.gens.push_back(f);
  return out;
}

template <class K>
long long polar_multiplicity(const K& k, const PolyMatrix<K>& gens,
                             const Ideal<K>& ambient, int i, const Seed& seed,
                             GenericityLog* log, const GBOptions& opts) {
  require(gens.ring->nparams == 0, ErrCode::InvariantViolation,
          "polar multiplicities need parameter-free input");
  auto run = [&](uint64_t sd) {
    auto rng = Seed::stream(sd, "polar-multiplicity");
    auto j = polar_ideal(k, gens, ambient, i, rng, nullptr, opts);
    int added = 0;
    for (;;) {
      auto gb = buchberger(k, j, opts);
      if (quotient_dim(gb).has_value()) break;
      require(added < gens.ring->nfiber(), ErrCode::NotZeroDimensional,
              "polar locus stayed positive dimensional after slicing by "
              "every admissible hyperplane");
      j.gens.push_back(random_linear_forms(k, gens.ring, 1, rng).front());
      ++added;
    }
    long long v = colength_at_origin(k, j, opts);
    if (log) {
      GenericityCheck chk;
      chk.stage = "polar-slice";
      chk.i = i;
      chk.j = added;
      chk.value = v;
      log->push_back(chk);
    }
    return v;
  };
  long long v1 = run(seed.primary);
  long long v2 = run(seed.second);
  require(v1 == v2, ErrCode::GenericitySuspect,
          "seeded polar multiplicities disagree: " + std::to_string(v1) +
              " vs " + std::to_string(v2));
  return v1;
}

template <class K>
UniMat<K> uni_pullback_matrix(const K& k, const PolyMatrix<K>& m,
                              const std::vector<long>& exps) {
  UniMat<K> out(m.rows, m.cols);
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j)
      out.at(i, j) = uni_pullback(k, m.at(i, j), exps);
  return out;
}

namespace {

// Determinant of the square submatrix of column vectors picked by `pick`,
// by Laplace expansion along the remaining rows.
template <class K>
UniRat<K> urat_det(const K& k,
                   const std::vector<std::vector<UniRat<K>>>& cols,
                   const std::vector<int>& pick, int row, uint32_t mask) {
  if (mask == 0) return urat_from(k, uni_const(k, k.one()));
  UniRat<K> acc = urat_zero<K>();
  int sign = 1;
  for (size_t c = 0; c < pick.size(); ++c) {
    if (!(mask & (1u << c))) continue;
    const UniRat<K>& entry = cols[(size_t)pick[c]][(size_t)row];
    if (!entry.is_zero()) {
      auto sub = urat_det(k, cols, pick, row + 1, mask & ~(1u << c));
      auto term = urat_mul(k, entry, sub);
      acc = sign > 0 ? urat_add(k, acc, term) : urat_sub(k, acc, term);
    }
    sign = -sign;
  }
  return acc;
}

}  // namespace

template <class K>
long long pair_multiplicity_dvr(const K& k, const UniMat<K>& big,
                                const UniMat<K>& small) {
  require(big.rows == small.rows, ErrCode::LengthMismatch,
          "modules live in free modules of different ranks");
  const int p = big.rows;

  std::vector<std::vector<UniRat<K>>> cols;
  for (int j = 0; j < big.cols; ++j) {
    std::vector<UniRat<K>> col;
    for (int i = 0; i < p; ++i) col.push_back(urat_from(k, big.at(i, j)));
    cols.push_back(std::move(col));
  }

  // Column reduction over the local ring: lock the globally least-valuation
  // entry as a pivot, clear its row in every other column, repeat.
  std::vector<std::vector<UniRat<K>>> basis;
  std::vector<int> pivot_rows;
  std::vector<bool> locked(cols.size(), false);
  for (;;) {
    long best = UNIVAL_INF;
    int bc = -1, br = -1;
    for (size_t c = 0; c < cols.size(); ++c) {
      if (locked[c]) continue;
      for (int r = 0; r < p; ++r) {
        long v = urat_val(k, cols[c][(size_t)r]);
        if (v < best) {
          best = v;
          bc = (int)c;
          br = r;
        }
      }
    }
    if (bc < 0) break;
    const auto& pivot = cols[(size_t)bc];
    for (size_t c = 0; c < cols.size(); ++c) {
      if (locked[c] || (int)c == bc) continue;
      if (cols[c][(size_t)br].is_zero()) continue;
      auto f = urat_div(k, cols[c][(size_t)br], pivot[(size_t)br]);
      for (int r = 0; r < p; ++r)
        cols[c][(size_t)r] =
            urat_sub(k, cols[c][(size_t)r], urat_mul(k, f, pivot[(size_t)r]));
    }
    locked[(size_t)bc] = true;
    basis.push_back(cols[(size_t)bc]);
    pivot_rows.push_back(br);
  }

  const int g = (int)basis.size();
  bool small_zero = true;
  for (const auto& f : small.a)
    if (!f.is_zero()) small_zero = false;
  if (g == 0) {
    require(small_zero, ErrCode::RankDefect,
            "nonzero module measured against the zero module");
    return 0;
  }
  require(g <= 8, ErrCode::ResourceLimit, "module rank too large");

  // Express each column of `small` in the pivot basis by forward
  // substitution down the pivot rows.
  std::vector<std::vector<UniRat<K>>> coord;
  for (int j = 0; j < small.cols; ++j) {
    std::vector<UniRat<K>> v;
    for (int i = 0; i < p; ++i) v.push_back(urat_from(k, small.at(i, j)));
    std::vector<UniRat<K>> y;
    for (int idx = 0; idx < g; ++idx) {
      const int r = pivot_rows[(size_t)idx];
      UniRat<K> c;
      if (v[(size_t)r].is_zero()) {
        c = urat_zero<K>();
      } else {
        try {
          c = urat_div(k, v[(size_t)r], basis[(size_t)idx][(size_t)r]);
        } catch (const Error& e) {
          if (e.code() != ErrCode::InvariantViolation) throw;
          fail(ErrCode::InvariantViolation,
               "a column of the smaller module does not lie in the larger "
               "one");
        }
      }
      if (!c.is_zero())
        for (int r2 = 0; r2 < p; ++r2)
          v[(size_t)r2] = urat_sub(k, v[(size_t)r2],
                                   urat_mul(k, c, basis[(size_t)idx][(size_t)r2]));
      y.push_back(std::move(c));
    }
    for (int r = 0; r < p; ++r)
      require(v[(size_t)r].is_zero(), ErrCode::InvariantViolation,
              "a column of the smaller module does not lie in the larger one");
    coord.push_back(std::move(y));
  }

  long bestv = UNIVAL_INF;
  for (const auto& pick : subsets_lex((int)coord.size(), g)) {
    auto det = urat_det(k, coord, pick, 0, (1u << g) - 1);
    bestv = std::min(bestv, urat_val(k, det));
  }
  require(bestv < UNIVAL_INF, ErrCode::RankDefect,
          "the modules have different generic ranks");
  return bestv;
}

template <class K>
long long curve_pair_multiplicity(const K& k, const PresMat<K>& p,
                                  const std::vector<long>& weights,
                                  std::vector<long> exps) {
  if (exps.empty()) exps = weights;
  require(p.m.ring->nparams == 0, ErrCode::InvariantViolation,
          "curve multiplicities need a parameter-free germ");
  require(p.d == 1, ErrCode::InputError, "the germ is not a curve");
  require((int)exps.size() == p.q, ErrCode::LengthMismatch,
          "parameterization must cover every fiber variable");
  for (long e : exps)
    require(e >= 1, ErrCode::RangeError,
            "parameterization exponents must be positive");
  auto ideal = defining_ideal(k, p);
  for (const auto& f : ideal.gens)
    require(uni_pullback(k, f, exps).is_zero(), ErrCode::NotUnibranchSupported,
            "parameterization does not lie on the germ; only unibranch "
            "monomial curves are supported");
  auto nd = uni_pullback_matrix(k, nd_generators(k, p), exps);
  auto jm = uni_pullback_matrix(k, jacobian_module(k, p, true), exps);
  return pair_multiplicity_dvr(k, nd, jm);
}

template <class K>
long long e_gamma(const K& k, const PresMat<K>& p, long long pair_value,
                  const Seed& seed, GenericityLog* log,
                  const GBOptions& opts) {
  return pair_value + nd_polar_mult(k, p, seed, log, opts);
}

template <class K>
bool module_contains(const K& k, const PolyMatrix<K>& gens,
                     const std::vector<Poly<K>>& column,
                     const Ideal<K>& ambient, const GBOptions& opts) {
  require((int)column.size() == gens.rows, ErrCode::LengthMismatch,
          "vector length must match the module's free rank");
  require(gens.ring == ambient.ring, ErrCode::RingMismatch,
          "module and ambient ideal live in different rings");
  const Rc& ring = gens.ring;
  const int p = gens.rows;
  require(ring->nvars() + p <= MAX_VARS, ErrCode::ResourceLimit,
          "membership test needs too many auxiliary variables");

  std::vector<std::string> vars = ring->vars;
  for (int i = 0; i < p; ++i) {
    std::string name = "e" + std::to_string(i + 1);
    while (std::find(vars.begin(), vars.end(), name) != vars.end())
      name = "_" + name;
    vars.push_back(name);
  }
  auto ext = make_ring(vars, MonomialOrder::degrevlex());
  std::vector<int> image;
  for (int i = 0; i < ring->nvars(); ++i) image.push_back(i);
  auto lift = [&](const Poly<K>& f) {
    return poly_map_vars(k, f, ext.get(), image);
  };
  auto evar = [&](int i) {
    return poly_var<K>(k, ext.get(), ring->nvars() + i);
  };

  Ideal<K> j(ext);
  for (int c = 0; c < gens.cols; ++c) {
    auto acc = poly_zero<K>(ext.get());
    for (int i = 0; i < p; ++i)
      if (!gens.at(i, c).is_zero())
        acc = poly_add(k, acc, poly_mul(k, lift(gens.at(i, c)), evar(i)));
    if (!acc.is_zero()) j.gens.push_back(std::move(acc));
  }
  for (const auto& f : ambient.gens) {
    if (f.is_zero()) continue;
    for (int i = 0; i < p; ++i)
      j.gens.push_back(poly_mul(k, lift(f), evar(i)));
  }
  for (int a = 0; a < p; ++a)
    for (int b = a; b < p; ++b)
      j.gens.push_back(poly_mul(k, evar(a), evar(b)));

  auto target = poly_zero<K>(ext.get());
  for (int i = 0; i < p; ++i)
    if (!column[(size_t)i].is_zero())
      target = poly_add(k, target,
                        poly_mul(k, lift(column[(size_t)i]), evar(i)));
  if (target.is_zero()) return true;
  return in_ideal(k, target, buchberger(k, j, opts));
}

#define DETPOL_INSTANTIATE_DETSING(K)                                          \
  template PresMat<K> make_presmat<K>(const K&, PolyMatrix<K>);               \
  template Ideal<K> defining_ideal<K>(const K&, const PresMat<K>&);           \
  template PolyMatrix<K> jacobian_module<K>(const K&, const PresMat<K>&,      \
                                            bool);                            \
  template PolyMatrix<K> nd_generators<K>(const K&, const PresMat<K>&);       \
  template PolyMatrix<K> sub_rows<K>(const K&, const PresMat<K>&, int);       \
  template PolyMatrix<K> sub_complement<K>(const K&, const PresMat<K>&, int,  \
                                           int);                              \
  template long long intersection_number<K>(const K&, const PolyMatrix<K>&,   \
                                            const PolyMatrix<K>&,             \
                                            const Ideal<K>*, GenericityLog*,  \
                                            const GBOptions&);                \
  template PolyMatrix<K> unimodular_perturb<K>(const K&,                      \
                                               const PolyMatrix<K>&,          \
                                               SplitMix64&);                  \
  template long long mixed_polar_degree<K>(const K&, const PresMat<K>&, int,  \
                                           const Seed&, GenericityLog*,       \
                                           const GBOptions&);                 \
  template bool polar_nonempty_predicate<K>(const PresMat<K>&);               \
  template long long nd_polar_mult<K>(const K&, const PresMat<K>&,            \
                                      const Seed&, GenericityLog*,            \
                                      const GBOptions&);                      \
  template int generic_rank<K>(const K&, const PolyMatrix<K>&,                \
                               const ReducedGB<K>&);                          \
  template Ideal<K> polar_ideal<K>(const K&, const PolyMatrix<K>&,            \
                                   const Ideal<K>&, int, SplitMix64&, int*,   \
                                   const GBOptions&);                         \
  template long long polar_multiplicity<K>(const K&, const PolyMatrix<K>&,    \
                                           const Ideal<K>&, int, const Seed&, \
                                           GenericityLog*, const GBOptions&); \
  template UniMat<K> uni_pullback_matrix<K>(const K&, const PolyMatrix<K>&,   \
                                            const std::vector<long>&);        \
  template long long pair_multiplicity_dvr<K>(const K&, const UniMat<K>&,     \
                                              const UniMat<K>&);              \
  template long long curve_pair_multiplicity<K>(const K&, const PresMat<K>&,  \
                                                const std::vector<long>&,     \
                                                std::vector<long>);           \
  template long long e_gamma<K>(const K&, const PresMat<K>&, long long,       \
                                const Seed&, GenericityLog*,                  \
                                const GBOptions&);                            \
  template bool module_contains<K>(const K&, const PolyMatrix<K>&,            \
                                   const std::vector<Poly<K>>&,               \
                                   const Ideal<K>&, const GBOptions&);

DETPOL_INSTANTIATE_DETSING(RationalField)
DETPOL_INSTANTIATE_DETSING(PrimeField)

}  // namespace detpol
