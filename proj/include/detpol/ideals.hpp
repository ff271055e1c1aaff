#pragma once

#include "detpol/groebner.hpp"
#include "detpol/matrix.hpp"
#include "detpol/rng.hpp"

namespace detpol {

// Sum of ideals in one ring: generators concatenated.
template <class K>
Ideal<K> ideal_sum(const Ideal<K>& a, const Ideal<K>& b);

// A intersect B, through one auxiliary variable and elimination.
template <class K>
Ideal<K> ideal_intersect(const K& k, const Ideal<K>& a, const Ideal<K>& b,
                         const GBOptions& opts = {});

// I : J, generator by generator; ZeroDivisorRequest when J has no nonzero
// generator.
template <class K>
Ideal<K> ideal_quotient(const K& k, const Ideal<K>& ideal, const Ideal<K>& j,
                        const GBOptions& opts = {});

// I : J^infinity, by iterating the quotient until the basis stabilizes.
// Generators of the result form a reduced basis.
template <class K>
Ideal<K> saturate(const K& k, const Ideal<K>& ideal, const Ideal<K>& j,
                  const GBOptions& opts = {});

// Evaluate every generator at var = value; the result lives in the ring
// without that variable.
template <class K>
Ideal<K> substitute(const K& k, const Ideal<K>& ideal, int var,
                    const typename K::Elem& value);

// Ideal of all size-by-size minors, row subsets outer and column subsets
// inner, each in lexicographic order. Unit ideal when size <= 0, zero ideal
// when size exceeds a dimension.
template <class K>
Ideal<K> minors_ideal(const K& k, const PolyMatrix<K>& m, int size);

// j-th Fitting ideal of the module presented by the p x g matrix: minors of
// size p - j.
template <class K>
Ideal<K> fitting_ideal(const K& k, const PolyMatrix<K>& m, int j);

// Maximal ideal of the origin: all fiber variables.
template <class K>
Ideal<K> origin_ideal(const K& k, const Rc& ring);

// Multiplicity of the origin component: dim(ring/I) minus the dimension of
// the part supported away from the origin. NotZeroDimensional when dim(I)
// is not finite.
template <class K>
long long colength_at_origin(const K& k, const Ideal<K>& ideal,
                             const GBOptions& opts = {});

// `count` linear forms in the fiber variables with integer coefficients
// drawn from [-999, 999], never all zero in a form.
template <class K>
std::vector<Poly<K>> random_linear_forms(const K& k, const Rc& ring,
                                         int count, SplitMix64& rng);

// M * R for a seeded integer matrix R (g x c) of full rank; R is resampled
// until the rank condition holds. Entries are drawn from [-20, 20].
template <class K>
PolyMatrix<K> generic_combinations(const K& k, const PolyMatrix<K>& m, int c,
                                   SplitMix64& rng);

// Presentation of the relation ideal among the module generators given by
// the columns of `m` (p x g): eliminate the T block from
// ambient + (z_i - sum_j m[j][i] T_j). Result lives in ring [x.., z..].
template <class K>
Ideal<K> rees_relations(const K& k, const PolyMatrix<K>& m,
                        const Ideal<K>& ambient, const GBOptions& opts = {});

// Equality as ideals, decided by reduced bases under the first ring's order.
template <class K>
bool ideal_equal(const K& k, const Ideal<K>& a, const Ideal<K>& b,
                 const GBOptions& opts = {});

}  // namespace detpol
