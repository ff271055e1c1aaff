#pragma once

#include "detpol/groebner.hpp"
#include "detpol/ideals.hpp"

// Independent reference implementations used only by tests. Each one takes a
// different algorithmic route than the library code it checks.
namespace detpol::oracle {

using QQ = RationalField;

// Textbook completion: every pair queued, no pruning criteria, rational
// division throughout, quadratic-time final reduction.
ReducedGB<QQ> naive_buchberger(const QQ& k, const Ideal<QQ>& ideal,
                               long pair_cap);

// Counts standard monomials by scanning the full exponent box below the
// pure-power bounds, testing each monomial against every lead.
long long brute_standard_count(const ReducedGB<QQ>& gb);

// Multiplicity of the origin by truncated linear algebra: the dimension of
// ring/(I + m^N) stabilizes in N at the local colength. No bases involved.
long long macaulay_colength(const QQ& k, const Ideal<QQ>& ideal);

}  // namespace detpol::oracle
