// Randomized property suites shared by the unit tests and the acceptance
// gate. Every suite is deterministic for a fixed seed and throws
// std::runtime_error with a reproduction hint on the first violation.
#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "detpol/detsing.hpp"
#include "detpol/family.hpp"
#include "detpol/groebner.hpp"
#include "detpol/ideals.hpp"
#include "detpol/jobfile.hpp"
#include "detpol/poly.hpp"
#include "detpol/rng.hpp"

namespace detpol {
namespace props {

inline void prop_require(bool ok, const std::string& msg) {
  if (!ok) throw std::runtime_error(msg);
}

// Random nonzero polynomial built as text and parsed, so the generator
// cannot accidentally depend on internal term invariants.
inline Poly<RationalField> rand_poly(const RationalField& k, const Rc& ring,
                                     SplitMix64& rng, int max_terms,
                                     int max_exp) {
  std::string text;
  int terms = (int)rng.range(1, max_terms);
  for (int t = 0; t < terms; ++t) {
    long long c = rng.range(1, 9) * (rng.range(0, 1) ? 1 : -1);
    std::string term = std::to_string(c);
    for (int v = 0; v < ring->nvars(); ++v) {
      int e = (int)rng.range(0, max_exp);
      if (e > 0) term += "*" + ring->vars[(size_t)v] + "^" + std::to_string(e);
    }
    text += (t ? " + " : "") + term;
  }
  auto p = parse_poly(k, ring.get(), text);
  if (p.is_zero()) p = poly_var(k, ring.get(), 0);  // cancellation fallback
  return p;
}

inline Ideal<RationalField> rand_ideal(const RationalField& k, const Rc& ring,
                                       SplitMix64& rng, int max_gens) {
  Ideal<RationalField> ideal(ring);
  int gens = (int)rng.range(2, max_gens);
  for (int g = 0; g < gens; ++g)
    ideal.gens.push_back(rand_poly(k, ring, rng, 3, 3));
  return ideal;
}

inline Rc rand_ring(SplitMix64& rng, int max_vars = 3) {
  static const std::vector<std::string> names = {"x", "y", "z"};
  int n = (int)rng.range(2, max_vars);
  return make_ring(
      std::vector<std::string>(names.begin(), names.begin() + n),
      MonomialOrder::degrevlex());
}

// Normal forms are idempotent, reduce differences into the ideal, and kill
// random combinations of the generators.
inline void suite_normal_form(int n_ideals, uint64_t seed) {
  const RationalField k;
  auto rng = Seed::stream(seed, "prop-normal-form");
  for (int it = 0; it < n_ideals; ++it) {
    const std::string at = " (iteration " + std::to_string(it) + ")";
    Rc ring = rand_ring(rng);
    auto ideal = rand_ideal(k, ring, rng, 3);
    auto gb = buchberger(k, ideal);

    auto p = rand_poly(k, ring, rng, 4, 4);
    auto nf = normal_form(k, p, gb);
    prop_require(poly_eq(k, normal_form(k, nf, gb), nf),
                 "normal form is not idempotent" + at);
    prop_require(in_ideal(k, poly_sub(k, p, nf), gb),
                 "p - nf(p) escaped the ideal" + at);

    auto combo = poly_zero<RationalField>(ring.get());
    for (const auto& g : ideal.gens)
      combo = poly_add(k, combo,
                       poly_mul(k, g, rand_poly(k, ring, rng, 2, 2)));
    prop_require(in_ideal(k, combo, gb),
                 "generator combination not recognized as member" + at);
    prop_require(normal_form(k, combo, gb).is_zero(),
                 "member has nonzero normal form" + at);
  }
}

// quotient_dim against direct lattice counting for monomial box ideals
// (x^a, y^b, z^c) plus at most one extra interior monomial, where the
// dimension is a pure divisibility count over the box grid.
inline void suite_quotient_dim_brute(int n_cases, uint64_t seed) {
  const RationalField k;
  auto rng = Seed::stream(seed, "prop-quotient-dim");
  for (int it = 0; it < n_cases; ++it) {
    const std::string at = " (iteration " + std::to_string(it) + ")";
    Rc ring = rand_ring(rng);
    int n = ring->nvars();
    std::vector<int> box((size_t)n);
    long long cells = 1;
    do {
      cells = 1;
      for (auto& b : box) {
        b = (int)rng.range(1, 4);
        cells *= b;
      }
    } while (cells > 12);

    Ideal<RationalField> ideal(ring);
    for (int v = 0; v < n; ++v)
      ideal.gens.push_back(parse_poly(
          k, ring.get(),
          ring->vars[(size_t)v] + "^" + std::to_string(box[(size_t)v])));

    std::vector<int> extra;
    if (rng.range(0, 9) < 7) {
      extra.assign((size_t)n, 0);
      int deg = 0;
      for (int v = 0; v < n; ++v) {
        extra[(size_t)v] = (int)rng.range(0, box[(size_t)v] - 1);
        deg += extra[(size_t)v];
      }
      if (deg == 0) {
        extra.clear();
      } else {
        std::string mono;
        for (int v = 0; v < n; ++v) {
          if (!extra[(size_t)v]) continue;
          if (!mono.empty()) mono += "*";
          mono +=
              ring->vars[(size_t)v] + "^" + std::to_string(extra[(size_t)v]);
        }
        ideal.gens.push_back(parse_poly(k, ring.get(), mono));
      }
    }

    // Count box cells not absorbed by the extra monomial.
    long long expected = 0;
    std::vector<int> e((size_t)n, 0);
    for (;;) {
      bool divisible = !extra.empty();
      for (int v = 0; v < n && divisible; ++v)
        divisible = e[(size_t)v] >= extra[(size_t)v];
      if (!divisible) ++expected;
      int v = 0;
      while (v < n && ++e[(size_t)v] == box[(size_t)v]) e[(size_t)v++] = 0;
      if (v == n) break;
    }

    auto gb = buchberger(k, ideal);
    auto dim = quotient_dim(gb);
    prop_require(dim.has_value(), "box quotient reported infinite" + at);
    prop_require(*dim == expected,
                 "quotient_dim " + std::to_string(*dim) + " != lattice count " +
                     std::to_string(expected) + at);
    prop_require((long long)standard_monomials(gb).size() == expected,
                 "staircase size disagrees with lattice count" + at);
  }
}

// Saturation is idempotent and only ever grows the ideal.
inline void suite_saturation(int n_cases, uint64_t seed) {
  const RationalField k;
  auto rng = Seed::stream(seed, "prop-saturation");
  for (int it = 0; it < n_cases; ++it) {
    const std::string at = " (iteration " + std::to_string(it) + ")";
    Rc ring = rand_ring(rng);
    auto ideal = rand_ideal(k, ring, rng, 3);
    Ideal<RationalField> j =
        (it % 2) ? origin_ideal(k, ring)
                 : Ideal<RationalField>(ring, {rand_poly(k, ring, rng, 2, 2)});

    auto s = saturate(k, ideal, j);
    auto s2 = saturate(k, s, j);
    prop_require(ideal_equal(k, s, s2), "saturation is not idempotent" + at);

    auto gb = buchberger(k, s);
    for (const auto& g : ideal.gens)
      prop_require(in_ideal(k, g, gb),
                   "saturation lost a generator" + at);
  }
}

// Fitting ideals form an ascending chain in the minor-size index.
inline void suite_fitting_chain(int n_cases, uint64_t seed) {
  const RationalField k;
  auto rng = Seed::stream(seed, "prop-fitting");
  for (int it = 0; it < n_cases; ++it) {
    const std::string at = " (iteration " + std::to_string(it) + ")";
    Rc ring = rand_ring(rng);
    int rows = (int)rng.range(2, 3);
    int cols = 2;
    PolyMatrix<RationalField> m(ring, rows, cols);
    for (int r = 0; r < rows; ++r)
      for (int c = 0; c < cols; ++c)
        m.at(r, c) = rand_poly(k, ring, rng, 2, 2);

    for (int j = 0; j + 1 <= cols; ++j) {
      auto low = fitting_ideal(k, m, j);
      auto high = buchberger(k, fitting_ideal(k, m, j + 1));
      for (const auto& g : low.gens)
        prop_require(in_ideal(k, g, high),
                     "fitting chain broken at index " + std::to_string(j) + at);
    }
  }
}

// Mixed polar degrees are invariant under seeded unimodular row and column
// operations on the presentation matrix.
inline void suite_unimodular_invariance(const std::string& corpus_dir,
                                        const std::vector<std::string>& items,
                                        int n_perturb, uint64_t seed) {
  const RationalField k;
  for (const auto& item : items) {
    JobFile job = load_job_file(corpus_dir + "/" + item + ".job");
    Rc ring = job_ring(job);
    auto pm = make_presmat(k, job_matrix(k, job, ring));
    int imax = std::min(pm.d, pm.n - 1);

    std::vector<long long> base;
    for (int i = 0; i <= imax; ++i)
      base.push_back(mixed_polar_degree(k, pm, i));

    auto rng = Seed::stream(seed ^ fnv1a64(item), "prop-unimodular");
    for (int t = 0; t < n_perturb; ++t) {
      auto pm2 = make_presmat(k, unimodular_perturb(k, pm.m, rng));
      for (int i = 0; i <= imax; ++i) {
        long long got = mixed_polar_degree(k, pm2, i);
        prop_require(
            got == base[(size_t)i],
            item + ": mixed polar " + std::to_string(i) + " moved to " +
                std::to_string(got) + " under perturbation " +
                std::to_string(t));
      }
    }
  }
}

// Polar multiplicities agree across independent seeds.
inline void suite_two_seed(const std::string& corpus_dir,
                           const std::vector<std::string>& items,
                           const std::vector<uint64_t>& seeds) {
  const RationalField k;
  for (const auto& item : items) {
    JobFile job = load_job_file(corpus_dir + "/" + item + ".job");
    Rc ring = job_ring(job);
    auto pm = make_presmat(k, job_matrix(k, job, ring));
    auto defining = defining_ideal(k, pm);
    auto jm = jacobian_module(k, pm, false);
    for (int j = 1; j <= pm.d; ++j) {
      long long first = 0;
      for (size_t s = 0; s < seeds.size(); ++s) {
        long long got =
            polar_multiplicity(k, jm, defining, pm.d - j, Seed(seeds[s]));
        if (s == 0)
          first = got;
        else
          prop_require(got == first,
                       item + ": polar " + std::to_string(j) + " is " +
                           std::to_string(got) + " at seed " +
                           std::to_string(seeds[s]) + " but " +
                           std::to_string(first) + " at seed " +
                           std::to_string(seeds[0]));
      }
    }
  }
}

// p(L(x)) for a linear substitution given by an integer matrix on the
// variables (rows index the substituted variable).
inline Poly<RationalField> apply_linear(
    const RationalField& k, const Poly<RationalField>& p, const Rc& ring,
    const std::vector<std::vector<long long>>& u) {
  int n = (int)u.size();
  std::vector<Poly<RationalField>> images;
  for (int v = 0; v < ring->nvars(); ++v) {
    if (v >= n) {
      images.push_back(poly_var(k, ring.get(), v));
      continue;
    }
    auto form = poly_zero<RationalField>(ring.get());
    for (int j = 0; j < n; ++j) {
      if (!u[(size_t)v][(size_t)j]) continue;
      form = poly_add(k, form,
                      poly_scale(k, poly_var(k, ring.get(), j),
                                 k.from_long(u[(size_t)v][(size_t)j])));
    }
    images.push_back(form);
  }
  auto out = poly_zero<RationalField>(ring.get());
  for (const auto& term : p.terms) {
    auto factor = poly_const(k, ring.get(), term.second);
    for (int v = 0; v < ring->nvars(); ++v)
      for (int e = 0; e < (int)term.first.e[(size_t)v]; ++e)
        factor = poly_mul(k, factor, images[(size_t)v]);
    out = poly_add(k, out, factor);
  }
  return out;
}

// The smoothing invariant survives seeded unimodular linear changes of the
// fiber coordinates (the base parameter stays fixed).
inline void suite_fiber_change(const std::string& corpus_dir,
                               const std::string& item, int n_changes,
                               uint64_t seed) {
  const RationalField k;
  JobFile job = load_job_file(corpus_dir + "/" + item + ".job");
  Rc ring = job_ring(job);
  auto m = job_matrix(k, job, ring);
  int msize = job.minor_size > 0 ? job.minor_size : job.cols;
  auto fam = make_family(k, m, msize, FamilyRole::Smoothing);
  auto base = smoothing_invariant(k, fam, FamilyMode::WhitneyB);

  int nf = ring->nfiber();
  auto rng = Seed::stream(seed, "prop-fiber-change");
  for (int t = 0; t < n_changes; ++t) {
    // Identity plus a few elementary operations stays unimodular.
    std::vector<std::vector<long long>> u(
        (size_t)nf, std::vector<long long>((size_t)nf, 0));
    for (int v = 0; v < nf; ++v) u[(size_t)v][(size_t)v] = 1;
    for (int op = 0; op < 4; ++op) {
      int a = (int)rng.range(0, nf - 1);
      int b = (int)rng.range(0, nf - 1);
      if (a == b) continue;
      long long c = rng.range(0, 1) ? 1 : -1;
      for (int j = 0; j < nf; ++j) u[(size_t)a][(size_t)j] += c * u[(size_t)b][(size_t)j];
    }

    PolyMatrix<RationalField> changed(ring, m.rows, m.cols);
    for (int r = 0; r < m.rows; ++r)
      for (int c = 0; c < m.cols; ++c)
        changed.at(r, c) = apply_linear(k, m.at(r, c), ring, u);

    auto fam2 = make_family(k, changed, msize, FamilyRole::Smoothing);
    auto got = smoothing_invariant(k, fam2, FamilyMode::WhitneyB);
    const std::string at = " (change " + std::to_string(t) + ")";
    prop_require(got.polar_mults == base.polar_mults,
                 item + ": polar multiplicities moved" + at);
    prop_require(got.e_pair == base.e_pair,
                 item + ": pair part moved" + at);
    prop_require(got.mob.total == base.mob.total &&
                     got.mob.off_origin == base.mob.off_origin &&
                     got.mob.at_origin == base.mob.at_origin,
                 item + ": cover counts moved" + at);
    prop_require(got.invariant == base.invariant,
                 item + ": invariant moved" + at);
  }
}

}  // namespace props
}  // namespace detpol
