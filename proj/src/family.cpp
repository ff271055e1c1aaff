#include "detpol/family.hpp"

#include <algorithm>
#include <set>
#include <string>
#include <utility>

namespace detpol {

namespace {

int param_index(const Rc& ring) { return ring->nvars() - 1; }

Rc fiber_ring_of(const Rc& ring) {
  return drop_vars(ring, {ring->nvars() - 1});
}

// Move a family polynomial whose parameter has been evaluated away into the
// fiber ring (same variables minus the parameter).
template <class K>
Poly<K> to_fiber(const K& k, const Poly<K>& a, const Rc& fring) {
  std::vector<int> image((size_t)a.ring->nvars());
  for (int i = 0; i + 1 < a.ring->nvars(); ++i) image[(size_t)i] = i;
  image[(size_t)(a.ring->nvars() - 1)] = -1;
  return poly_map_vars(k, a, fring.get(), image);
}

// Entries at one parameter value, as a matrix over the fiber ring.
template <class K>
PolyMatrix<K> matrix_at_param(const K& k, const PolyMatrix<K>& m,
                              const Rc& fring,
                              const typename K::Elem& value) {
  PolyMatrix<K> out(fring, m.rows, m.cols);
  int pv = param_index(m.ring);
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j)
      out.at(i, j) = to_fiber(k, poly_eval_var(k, m.at(i, j), pv, value), fring);
  return out;
}

// Columns of partial derivatives of the ideal's generators with respect to
// the first `nfiber` variables, with an optional extra gradient row for a
// function germ.
template <class K>
PolyMatrix<K> partials_module(const K& k, const Ideal<K>& ideal, int nfiber,
                              const Poly<K>* fun) {
  int base_rows = (int)ideal.gens.size();
  PolyMatrix<K> out(ideal.ring, base_rows + (fun ? 1 : 0), nfiber);
  for (int r = 0; r < base_rows; ++r)
    for (int c = 0; c < nfiber; ++c)
      out.at(r, c) = poly_derivative(k, ideal.gens[(size_t)r], c);
  if (fun)
    for (int c = 0; c < nfiber; ++c)
      out.at(base_rows, c) = poly_derivative(k, *fun, c);
  return out;
}

// All nonzero matrix entries as one ideal.
template <class K>
Ideal<K> entries_ideal(const PolyMatrix<K>& m) {
  Ideal<K> out(m.ring);
  for (const auto& e : m.a)
    if (!e.is_zero()) out.gens.push_back(e);
  return out;
}

// Ideal of the singular points of the member cut out by `ifib` (dimension
// d in a q-dimensional ambient): the member's ideal plus the rank-drop
// minors of its Jacobian matrix.  Duplicate generators are dropped, since
// structured matrices produce many repeated minors.
template <class K>
Ideal<K> singular_locus_ideal(const K& k, const Ideal<K>& ifib, int q, int d) {
  PolyMatrix<K> jac = partials_module(k, ifib, q, (const Poly<K>*)nullptr);
  Ideal<K> sing(ifib.ring);
  std::set<std::string> seen;
  auto push_unique = [&](Poly<K>&& g) {
    if (g.is_zero()) return;
    Poly<K> c = poly_canonical(k, g);
    if (seen.insert(poly_str(k, c)).second) sing.gens.push_back(std::move(g));
  };
  for (const auto& g : ifib.gens) push_unique(Poly<K>(g));
  Ideal<K> drop = minors_ideal(k, jac, q - d);
  for (auto& g : drop.gens) push_unique(std::move(g));
  return sing;
}

// A generic parameter value from one named stream.
long long draw_param_value(uint64_t trail, const std::string& purpose) {
  SplitMix64 rng = Seed::stream(trail, purpose);
  return (long long)rng.range(10, 1000000);
}

}  // namespace

const char* outcome_name(Outcome o) {
  switch (o) {
    case Outcome::Equisingular:
      return "EQUISINGULAR";
    case Outcome::NotEquisingular:
      return "NOT_EQUISINGULAR";
    case Outcome::Undetermined:
      return "UNDETERMINED";
    case Outcome::Split:
      return "SPLIT";
    case Outcome::NoSplit:
      return "NO_SPLIT";
  }
  return "UNDETERMINED";
}

const char* mode_condition_name(FamilyMode m) {
  switch (m) {
    case FamilyMode::WhitneyB:
      return "WhitneyB";
    case FamilyMode::AF:
      return "A_F";
    case FamilyMode::WF:
      return "W_F";
  }
  return "WhitneyB";
}

long long mpt_combine(long long e_pair_special, long long polar_n) {
  return e_pair_special + polar_n;
}

long long covering_check(long long mult_z0, long long mult_zy) {
  require(mult_zy >= 0 && mult_z0 >= mult_zy, ErrCode::InvariantViolation,
          "cover degrees must satisfy special >= generic >= 0; an upstream "
          "genericity choice failed");
  return mult_z0 - mult_zy;
}

template <class K>
FamilySpec<K> make_family(const K& k, const PolyMatrix<K>& m, int minor_size,
                          FamilyRole role, std::optional<Poly<K>> fun,
                          int fiber_dim, const GBOptions& opts) {
  require(!m.empty(), ErrCode::InputError, "family matrix is empty");
  const Rc& ring = m.ring;
  require(ring->nparams == 1, ErrCode::InputError,
          "a family ring needs exactly one base parameter");
  require(minor_size >= 1 && minor_size <= std::min(m.rows, m.cols),
          ErrCode::RangeError, "minor size must fit inside the matrix");
  int nf = ring->nfiber();
  for (const auto& e : m.a) {
    for (const auto& t : e.terms) {
      if (role == FamilyRole::TestFamily) {
        bool has_fiber_var = false;
        for (int v = 0; v < nf && !has_fiber_var; ++v)
          has_fiber_var = t.first.e[(size_t)v] > 0;
        require(has_fiber_var, ErrCode::InputError,
                "test-family entries must vanish on the whole parameter axis");
      } else {
        require(!t.first.is_one(), ErrCode::InputError,
                "family entries must vanish at the central-member origin");
      }
    }
  }
  if (fun.has_value()) {
    require(fun->ring == ring.get(), ErrCode::RingMismatch,
            "function germ lives in a different ring");
    require(!fun->is_zero(), ErrCode::InputError,
            "function germ must not be zero");
    for (const auto& t : fun->terms)
      require(!t.first.is_one(), ErrCode::InputError,
              "function germ must vanish at the origin");
  }
  FamilySpec<K> fam;
  fam.m = m;
  fam.minor_size = minor_size;
  fam.role = role;
  fam.fun = std::move(fun);
  if (fiber_dim < 0) {
    Rc fring = fiber_ring_of(ring);
    PolyMatrix<K> m0 = matrix_at_param(k, m, fring, k.from_long(0));
    auto gb = buchberger(k, minors_ideal(k, m0, minor_size), opts);
    fam.fiber_dim = krull_dim(gb);
  } else {
    fam.fiber_dim = fiber_dim;
  }
  require(fam.fiber_dim >= 1, ErrCode::RangeError,
          "family members must have dimension at least one");
  require(fam.fiber_dim < nf, ErrCode::RangeError,
          "family members must be proper subvarieties of the fiber ambient");
  return fam;
}

template <class K>
PolyMatrix<K> family_fiber_matrix(const K& k, const FamilySpec<K>& fam) {
  return matrix_at_param(k, fam.m, fiber_ring_of(fam.m.ring), k.from_long(0));
}

template <class K>
MultOverBase mult_over_base(const K& k, const Ideal<K>& j, const Seed& seed,
                            GenericityLog* log, const GBOptions& opts) {
  require(j.ring != nullptr, ErrCode::InputError, "ideal carries no ring");
  require(j.ring->nparams == 1, ErrCode::InputError,
          "cover counting needs a ring with exactly one base parameter");
  int pv = param_index(j.ring);

  auto total_at = [&](long long eps) -> long long {
    Ideal<K> slice = substitute(k, j, pv, k.from_long(eps));
    auto gb = buchberger(k, slice, opts);
    auto total = quotient_dim(gb);
    if (!total) {
      if (log)
        log->push_back({"base-cover", (int)eps, -1, 0, krull_dim(gb), false,
                        false, 0});
      fail(ErrCode::NotZeroDimensional,
           "the cover is not finite over the base value " +
               std::to_string(eps));
    }
    if (log)
      log->push_back({"base-cover", (int)eps, -1, 0, 0, true, false, *total});
    return *total;
  };

  long long e1 = draw_param_value(seed.primary, "base-parameter-value");
  long long e2 = draw_param_value(seed.second, "base-parameter-value");
  if (e2 == e1) ++e2;
  MultOverBase out;
  out.total = total_at(e1);
  long long check = total_at(e2);
  if (check != out.total) {
    if (log)
      log->push_back({"base-agreement", (int)e1, (int)e2, 0, 0, false, false,
                      out.total - check});
    fail(ErrCode::GenericitySuspect,
         "cover degrees at two seeded base values disagree: " +
             std::to_string(out.total) + " vs " + std::to_string(check));
  }

  Ideal<K> central = substitute(k, j, pv, k.from_long(0));
  Ideal<K> away = saturate(k, central, origin_ideal(k, central.ring), opts);
  auto gb_away = buchberger(k, away, opts);
  auto off = quotient_dim(gb_away);
  if (!off) {
    if (log)
      log->push_back({"base-origin", -1, -1, 0, krull_dim(gb_away), false,
                      false, 0});
    fail(ErrCode::NotZeroDimensional,
         "the central slice keeps a positive-dimensional part away from the "
         "origin");
  }
  out.off_origin = *off;
  if (log)
    log->push_back({"base-origin", -1, -1, 0, 0, true, false, out.off_origin});
  require(out.off_origin <= out.total, ErrCode::GenericityFail,
          "more branches avoid the origin than the cover holds in total");
  out.at_origin = out.total - out.off_origin;
  return out;
}

template <class K>
Ideal<K> family_polar_ideal(const K& k, const FamilySpec<K>& fam,
                            FamilyMode mode, SplitMix64& rng, int* g_out,
                            const GBOptions& opts) {
  const Rc& ring = fam.m.ring;
  if (mode != FamilyMode::WhitneyB)
    require(fam.fun.has_value(), ErrCode::InputError,
            "relative conditions need a function germ");
  Ideal<K> itot = minors_ideal(k, fam.m, fam.minor_size);
  const Poly<K>* fp =
      (mode == FamilyMode::WhitneyB) ? nullptr : &fam.fun.value();
  PolyMatrix<K> jm = partials_module(k, itot, ring->nfiber(), fp);
  auto gb_tot = buchberger(k, itot, opts);
  int g = generic_rank(k, jm, gb_tot);
  require(g >= 1, ErrCode::InvariantViolation,
          "the module of fiber partials vanishes on the family");
  int c = g + fam.fiber_dim - 1;
  PolyMatrix<K> mr = generic_combinations(k, jm, c, rng);
  Ideal<K> drop = minors_ideal(k, mr, g);
  std::vector<Poly<K>> gens;
  for (auto& p : drop.gens)
    if (!p.is_zero()) gens.push_back(std::move(p));
  for (const auto& p : itot.gens)
    if (!p.is_zero()) gens.push_back(p);
  if (g_out) *g_out = g;
  return Ideal<K>(ring, std::move(gens));
}

template <class K>
FiberInvariant smoothing_invariant(const K& k, const FamilySpec<K>& fam,
                                   FamilyMode mode, const Seed& seed,
                                   GenericityLog* log, const GBOptions& opts) {
  const Rc& ring = fam.m.ring;
  if (mode != FamilyMode::WhitneyB)
    require(fam.fun.has_value(), ErrCode::InputError,
            "relative conditions need a function germ");
  int q = ring->nfiber();
  int d = fam.fiber_dim;
  Rc fring = fiber_ring_of(ring);
  int pv = param_index(ring);

  PolyMatrix<K> m0 = matrix_at_param(k, fam.m, fring, k.from_long(0));
  Ideal<K> ifib = minors_ideal(k, m0, fam.minor_size);

  Poly<K> fun0 = poly_zero<K>(fring.get());
  const Poly<K>* fp0 = nullptr;
  if (mode != FamilyMode::WhitneyB) {
    fun0 = to_fiber(k, poly_eval_var(k, fam.fun.value(), pv, k.from_long(0)),
                    fring);
    require(!fun0.is_zero(), ErrCode::InputError,
            "function germ vanishes identically on the central member");
    fp0 = &fun0;
  }

  // The central member must have at most an isolated singular point at the
  // origin; otherwise the cover counts below lose their meaning.
  {
    auto gb = buchberger(k, singular_locus_ideal(k, ifib, q, d), opts);
    auto qd = quotient_dim(gb);
    if (!qd) {
      if (log)
        log->push_back({"member-singular-locus", 0, -1, 0, krull_dim(gb),
                        false, false, 0});
      fail(ErrCode::NotZeroDimensional,
           "the central member's singular locus has positive dimension");
    }
    if (log)
      log->push_back({"member-singular-locus", 0, -1, 0, 0, true, false, *qd});
  }

  // Nearby members must be smooth near the origin: the closure of the
  // relative singular locus taken outside the central member has to miss
  // the origin of the total space.  Singular points of nearby members far
  // from the origin do not matter for a family of germs.
  {
    Ideal<K> itot = minors_ideal(k, fam.m, fam.minor_size);
    Ideal<K> z = singular_locus_ideal(k, itot, q, d);
    Ideal<K> param(ring);
    param.gens.push_back(poly_var(k, ring.get(), pv));
    Ideal<K> away = saturate(k, z, param, opts);
    Ideal<K> at_center(ring);
    for (int v = 0; v < ring->nvars(); ++v)
      at_center.gens.push_back(poly_var(k, ring.get(), v));
    auto gb = buchberger(k, ideal_sum(away, at_center), opts);
    auto qd = quotient_dim(gb);
    bool smooth_nearby = qd.has_value() && *qd == 0;
    if (log)
      log->push_back({"member-smoothness", -1, -1, 0, 0, smooth_nearby, false,
                      qd ? *qd : -1});
    require(smooth_nearby, ErrCode::InputError,
            "nearby members stay singular near the origin, so the family is "
            "not a smoothing");
  }

  FiberInvariant out;

  // Polar multiplicities of the central member feed the twist expansion;
  // the untwisted AF mode skips them.
  if (mode != FamilyMode::AF) {
    PolyMatrix<K> mod0 = partials_module(k, ifib, q, fp0);
    std::vector<std::pair<int, long long>> pairs;
    for (int jdim = 1; jdim <= d; ++jdim) {
      long long mj =
          polar_multiplicity(k, mod0, ifib, d - jdim, seed, log, opts);
      out.polar_mults.push_back(mj);
      pairs.push_back({jdim, mj});
    }
    out.e_pair = kt_formula(0, pairs, q - 1);
  }

  // Polar cover over the base, drawn and counted on two disjoint seed
  // trails; the trails must agree on every count.
  MultOverBase mob[2];
  int gseen[2] = {0, 0};
  uint64_t trails[2] = {seed.primary, seed.second};
  for (int t = 0; t < 2; ++t) {
    SplitMix64 rng = Seed::stream(trails[t], "family-polar-combinations");
    Ideal<K> jp = family_polar_ideal(k, fam, mode, rng, &gseen[t], opts);
    mob[t] = mult_over_base(k, jp, Seed(trails[t]), log, opts);
  }
  if (mob[0].total != mob[1].total ||
      mob[0].off_origin != mob[1].off_origin) {
    if (log)
      log->push_back({"cover-agreement", -1, -1, 0, 0, false, false,
                      mob[0].at_origin - mob[1].at_origin});
    fail(ErrCode::GenericitySuspect,
         "seeded polar covers disagree: (" + std::to_string(mob[0].total) +
             "," + std::to_string(mob[0].off_origin) + ") vs (" +
             std::to_string(mob[1].total) + "," +
             std::to_string(mob[1].off_origin) + ")");
  }
  out.mob = mob[0];
  out.generic_rank = gseen[0];
  out.invariant = mpt_combine(out.e_pair, out.mob.at_origin);
  return out;
}

namespace {

void push_side_details(Verdict& v, const char* side, const FiberInvariant& f) {
  for (size_t j = 0; j < f.polar_mults.size(); ++j)
    v.details.push_back(
        {"m" + std::to_string(j + 1) + "_" + side, f.polar_mults[j]});
  v.details.push_back({std::string("pair_part_") + side, f.e_pair});
  v.details.push_back({std::string("cover_total_") + side, f.mob.total});
  v.details.push_back(
      {std::string("cover_off_origin_") + side, f.mob.off_origin});
  v.details.push_back(
      {std::string("cover_at_origin_") + side, f.mob.at_origin});
  v.details.push_back({std::string("invariant_") + side, f.invariant});
}

}  // namespace

template <class K>
Verdict whitney_report(const K& k, const FamilySpec<K>& base,
                       const FamilySpec<K>& deformed, FamilyMode mode,
                       const Seed& seed, GenericityLog* log,
                       const GBOptions& opts) {
  Verdict v;
  v.condition = mode_condition_name(mode);
  v.seed_primary = seed.primary;
  v.seed_second = seed.second;
  require(base.m.ring == deformed.m.ring, ErrCode::RingMismatch,
          "the two smoothings live in different rings");
  if (mode != FamilyMode::WhitneyB &&
      (!base.fun.has_value() || !deformed.fun.has_value())) {
    v.outcome = Outcome::Undetermined;
    v.gap = "function germ required for the relative conditions";
    return v;
  }

  bool same = base.minor_size == deformed.minor_size &&
              base.fiber_dim == deformed.fiber_dim &&
              base.m.rows == deformed.m.rows &&
              base.m.cols == deformed.m.cols;
  if (same)
    for (size_t i = 0; i < base.m.a.size() && same; ++i)
      same = poly_eq(k, base.m.a[i], deformed.m.a[i]);
  if (same) {
    bool bf = base.fun.has_value(), df = deformed.fun.has_value();
    same = bf == df && (!bf || poly_eq(k, *base.fun, *deformed.fun));
  }

  FiberInvariant ib = smoothing_invariant(k, base, mode, seed, log, opts);
  FiberInvariant id =
      same ? ib : smoothing_invariant(k, deformed, mode, seed, log, opts);

  long long diff = covering_check(ib.invariant, id.invariant);
  v.has_values = true;
  v.value_base = ib.invariant;
  v.value_deformed = id.invariant;
  v.outcome = diff == 0 ? Outcome::Equisingular : Outcome::NotEquisingular;
  push_side_details(v, "base", ib);
  push_side_details(v, "deformed", id);
  v.details.push_back({"covering_difference", diff});
  return v;
}

template <class K>
Verdict entry_locus_report(const K& k, const FamilySpec<K>& fam,
                           const Seed& seed, GenericityLog* log,
                           const GBOptions& opts) {
  Verdict v;
  v.condition = "SingularLocusSplit";
  v.seed_primary = seed.primary;
  v.seed_second = seed.second;
  int pv = param_index(fam.m.ring);
  Ideal<K> ent = entries_ideal(fam.m);

  auto colength_at = [&](long long t0) -> long long {
    Ideal<K> slice = substitute(k, ent, pv, k.from_long(t0));
    long long c = colength_at_origin(k, slice, opts);
    if (log) log->push_back({"entry-locus", (int)t0, -1, 0, 0, true, false, c});
    return c;
  };

  long long c0 = colength_at(0);
  long long e1 = draw_param_value(seed.primary, "entry-locus-value");
  long long e2 = draw_param_value(seed.second, "entry-locus-value");
  if (e2 == e1) ++e2;
  long long cg = colength_at(e1);
  long long cg_check = colength_at(e2);
  if (cg != cg_check) {
    if (log)
      log->push_back({"entry-agreement", (int)e1, (int)e2, 0, 0, false, false,
                      cg - cg_check});
    fail(ErrCode::GenericitySuspect,
         "entry colengths at two seeded parameter values disagree: " +
             std::to_string(cg) + " vs " + std::to_string(cg_check));
  }

  v.has_values = true;
  v.value_base = c0;
  v.value_deformed = cg;
  v.outcome = c0 == cg ? Outcome::NoSplit : Outcome::Split;
  v.details.push_back({"entry_colength_central", c0});
  v.details.push_back({"entry_colength_generic", cg});
  return v;
}

#define DETPOL_INSTANTIATE_FAMILY(K)                                          \
  template FamilySpec<K> make_family<K>(const K&, const PolyMatrix<K>&, int,  \
                                        FamilyRole, std::optional<Poly<K>>,   \
                                        int, const GBOptions&);               \
  template PolyMatrix<K> family_fiber_matrix<K>(const K&,                     \
                                                const FamilySpec<K>&);        \
  template MultOverBase mult_over_base<K>(const K&, const Ideal<K>&,          \
                                          const Seed&, GenericityLog*,        \
                                          const GBOptions&);                  \
  template Ideal<K> family_polar_ideal<K>(const K&, const FamilySpec<K>&,     \
                                          FamilyMode, SplitMix64&, int*,      \
                                          const GBOptions&);                  \
  template FiberInvariant smoothing_invariant<K>(const K&,                    \
                                                 const FamilySpec<K>&,        \
                                                 FamilyMode, const Seed&,     \
                                                 GenericityLog*,              \
                                                 const GBOptions&);           \
  template Verdict whitney_report<K>(const K&, const FamilySpec<K>&,          \
                                     const FamilySpec<K>&, FamilyMode,        \
                                     const Seed&, GenericityLog*,             \
                                     const GBOptions&);                       \
  template Verdict entry_locus_report<K>(const K&, const FamilySpec<K>&,      \
                                         const Seed&, GenericityLog*,         \
                                         const GBOptions&);

DETPOL_INSTANTIATE_FAMILY(RationalField)
DETPOL_INSTANTIATE_FAMILY(PrimeField)

}  // namespace detpol
