#pragma once

#include <string>
#include <utility>
#include <vector>

#include "detpol/ideals.hpp"
#include "detpol/unipoly.hpp"

namespace detpol {

// Presentation matrix of a maximal-rank determinantal germ: an (n+k) x n
// matrix of fiber-origin-vanishing entries. q counts the fiber variables of
// the ambient space and d = q - (k+1) is the expected dimension.
template <class K>
struct PresMat {
  PolyMatrix<K> m;
  int n = 0;  // columns
  int k = 0;  // rows - columns
  int q = 0;  // ambient fiber dimension
  int d = 0;  // q - (k + 1)
};

// Validates shape, d >= 0, and that every entry has zero constant term.
template <class K>
PresMat<K> make_presmat(const K& k, PolyMatrix<K> m);

// One genericity or consistency check attached to a computed number.
struct GenericityCheck {
  std::string stage;  // "intersection", "polar-slice", "index-bound", ...
  int i = -1;
  int j = -1;
  long long expected_codim = -1;
  long long actual_dim = -1;  // Krull dimension found when the check failed
  bool ok = true;
  bool retried = false;
  long long value = 0;
};

using GenericityLog = std::vector<GenericityCheck>;

// Ideal of maximal minors of the presentation matrix, row subsets in
// lexicographic order (zero minors kept so indices line up with module rows).
template <class K>
Ideal<K> defining_ideal(const K& k, const PresMat<K>& p);

// Rows = gradients of the maximal minors (same row order as defining_ideal);
// columns = partials with respect to the fiber variables, plus the parameter
// partials when relative is false.
template <class K>
PolyMatrix<K> jacobian_module(const K& k, const PresMat<K>& p, bool relative);

// Generators of N_D: rows indexed like defining_ideal, n(n+k) columns
// indexed (i, j) with j major; the (r, (i,j)) entry is the signed cofactor
// of entry (i,j) in the r-th maximal minor (zero when row i is deleted).
template <class K>
PolyMatrix<K> nd_generators(const K& k, const PresMat<K>& p);

// First n - d - l rows of the presentation matrix (empty when that is 0).
template <class K>
PolyMatrix<K> sub_rows(const K& k, const PresMat<K>& p, int l);

// The complementary submatrix for the (i, j) summand: first n-d+i-j-1 rows,
// then the last d+k-i rows, restricted to the last n-i columns. Returns an
// empty matrix when the row count is not positive.
template <class K>
PolyMatrix<K> sub_complement(const K& k, const PresMat<K>& p, int i, int j);

// Colength at the origin of the sum of both maximal-minors ideals (plus an
// optional ambient ideal). An empty matrix contributes nothing; dimension
// failures raise GenericityFail with the codimension report.
template <class K>
long long intersection_number(const K& k, const PolyMatrix<K>& a,
                              const PolyMatrix<K>& b, const Ideal<K>* ambient,
                              GenericityLog* log = nullptr,
                              const GBOptions& opts = {});

// Alternating sum of intersection numbers over the canonical j range; on a
// genericity failure the whole sum is retried once on a seeded row/column
// perturbation of the matrix.
template <class K>
long long mixed_polar_degree(const K& k, const PresMat<K>& p, int i,
                             const Seed& seed = Seed(DEFAULT_SEED),
                             GenericityLog* log = nullptr,
                             const GBOptions& opts = {});

// Binomially weighted sum of the mixed polar degrees; 0 outright when the
// polar-nonempty predicate fails.
template <class K>
long long nd_polar_mult(const K& k, const PresMat<K>& p,
                        const Seed& seed = Seed(DEFAULT_SEED),
                        GenericityLog* log = nullptr,
                        const GBOptions& opts = {});

// True when the codimension-u locus of the rank-r degeneracy is forced empty.
bool gamma_empty_bound(int n, int k, int r, long long u);

// True iff q <= 2n + k - 1, the exact condition for a non-empty polar curve.
template <class K>
bool polar_nonempty_predicate(const PresMat<K>& p);

// Largest s such that some s x s minor of `gens` is nonzero modulo the
// ambient ideal's reduced basis.
template <class K>
int generic_rank(const K& k, const PolyMatrix<K>& gens,
                 const ReducedGB<K>& ambient_gb);

// Rank-drop ideal of the codimension-i polar: minors of size g_rank
// (computed against `ambient`) of g_rank + i - 1 seeded generic column
// combinations, plus the ambient generators. i = 0 yields the ambient ideal
// alone (the polar is all of X). g_out receives the generic rank.
template <class K>
Ideal<K> polar_ideal(const K& k, const PolyMatrix<K>& gens,
                     const Ideal<K>& ambient, int i, SplitMix64& rng,
                     int* g_out = nullptr, const GBOptions& opts = {});

// Colength at the origin of the codimension-i polar locus, sliced by seeded
// linear forms down to dimension zero. Both seeds of the pair must produce
// the same value. i counts codimension in X: the dimension-j polar of a
// d-dimensional X is i = d - j, and i = 0 gives the multiplicity of X.
template <class K>
long long polar_multiplicity(const K& k, const PolyMatrix<K>& gens,
                             const Ideal<K>& ambient, int i, const Seed& seed,
                             GenericityLog* log = nullptr,
                             const GBOptions& opts = {});

// e_pair plus the binomially weighted polar multiplicities: the weight of
// m^i is C(ambient_dim_minus_1, D + 1 - i) for D the largest index present.
long long kt_formula(long long e_pair,
                     const std::vector<std::pair<int, long long>>& polar_mults,
                     int ambient_dim_minus_1);

// Dense univariate matrix for pulled-back module generators.
template <class K>
struct UniMat {
  int rows = 0, cols = 0;
  std::vector<UniPoly<K>> a;

  UniMat() = default;
  UniMat(int nr, int nc) : rows(nr), cols(nc) {
    a.assign((size_t)(nr * nc), UniPoly<K>{});
  }
  UniPoly<K>& at(int i, int j) { return a[(size_t)(i * cols + j)]; }
  const UniPoly<K>& at(int i, int j) const {
    return a[(size_t)(i * cols + j)];
  }
};

// Entrywise pullback along x_i = t^(exps[i]).
template <class K>
UniMat<K> uni_pullback_matrix(const K& k, const PolyMatrix<K>& m,
                              const std::vector<long>& exps);

// Multiplicity of the pair over the local univariate ring: column-reduce
// `big` to a minimal basis, express the columns of `small` in it, and return
// the least t-adic order over the maximal minors of the coordinate matrix.
// RankDefect when the ranks disagree.
template <class K>
long long pair_multiplicity_dvr(const K& k, const UniMat<K>& big,
                                const UniMat<K>& small);

// e(JM, N_D) for a unibranch monomial space curve parameterized by
// x_i = t^(exps[i]) (exps defaults to the weights). The parameterization
// must lie on the germ; NotUnibranchSupported otherwise.
template <class K>
long long curve_pair_multiplicity(const K& k, const PresMat<K>& p,
                                  const std::vector<long>& weights,
                                  std::vector<long> exps = {});

// pair_value + nd_polar_mult.
template <class K>
long long e_gamma(const K& k, const PresMat<K>& p, long long pair_value,
                  const Seed& seed = Seed(DEFAULT_SEED),
                  GenericityLog* log = nullptr, const GBOptions& opts = {});

// Euler characteristic of the smoothing from the polar multiplicity and the
// slice Euler characteristic: chi = (-1)^d * polar + chi_slice.
long long euler_from_polar(long long polar, long long chi_slice, int d);

// Exact membership of a column vector in the submodule of R^p generated by
// the columns of `gens`, over R = ring / ambient.
template <class K>
bool module_contains(const K& k, const PolyMatrix<K>& gens,
                     const std::vector<Poly<K>>& column,
                     const Ideal<K>& ambient, const GBOptions& opts = {});

// Seeded invertible row and column operations over the integers; preserves
// the generated minor ideals and every polar invariant.
template <class K>
PolyMatrix<K> unimodular_perturb(const K& k, const PolyMatrix<K>& m,
                                 SplitMix64& rng);

// C(n, r) as long long; 0 outside 0 <= r <= n.
long long binom(long long n, long long r);

}  // namespace detpol
