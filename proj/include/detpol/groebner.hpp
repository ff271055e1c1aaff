#pragma once

#include <optional>
#include <vector>

#include "detpol/poly.hpp"

namespace detpol {

// Finitely generated ideal. Owns its ring; generators may be redundant.
template <class K>
struct Ideal {
  Rc ring;
  std::vector<Poly<K>> gens;

  Ideal() = default;
  explicit Ideal(Rc r) : ring(std::move(r)) {}
  Ideal(Rc r, std::vector<Poly<K>> g)
      : ring(std::move(r)), gens(std::move(g)) {}
};

// Reduced Groebner basis: monic generators, each fully reduced against the
// others, sorted ascending by lead monomial. Canonical for (ideal, order).
template <class K>
struct ReducedGB {
  Rc ring;
  std::vector<Poly<K>> g;

  bool is_unit() const {
    return g.size() == 1 && g.front().terms.size() == 1 &&
           g.front().lm().is_one();
  }
  bool is_zero_ideal() const { return g.empty(); }
};

struct GBOptions {
  // Cap on S-pair reductions before CapExceeded.
  long step_cap = 400000;
};

// Buchberger completion with lcm-criterion pair pruning and normal (least
// lcm) selection, followed by full autoreduction.
template <class K>
ReducedGB<K> buchberger(const K& k, const Ideal<K>& ideal,
                        const GBOptions& opts = {});

// Same, computed under an explicit order (a derived ring carries it).
template <class K>
ReducedGB<K> buchberger(const K& k, const Ideal<K>& ideal,
                        const MonomialOrder& order,
                        const GBOptions& opts = {});

// Remainder of multivariate division by the basis; canonical for reduced
// bases.
template <class K>
Poly<K> normal_form(const K& k, const Poly<K>& f, const ReducedGB<K>& gb);

// Generators of ideal I intersected with the subring that omits the listed
// variables. Result carries the subring.
template <class K>
Ideal<K> eliminate(const K& k, const Ideal<K>& ideal,
                   const std::vector<int>& drop, const GBOptions& opts = {});

// Vector-space dimension of ring / ideal; nullopt when infinite.
template <class K>
std::optional<long long> quotient_dim(const ReducedGB<K>& gb);

// Monomials outside the lead-term staircase (finite case only).
template <class K>
std::vector<Monomial> standard_monomials(const ReducedGB<K>& gb);

// Krull dimension of ring / ideal; -1 for the unit ideal.
template <class K>
int krull_dim(const ReducedGB<K>& gb);

template <class K>
bool gb_equal(const K& k, const ReducedGB<K>& a, const ReducedGB<K>& b);

// Membership via normal form against a reduced basis.
template <class K>
bool in_ideal(const K& k, const Poly<K>& f, const ReducedGB<K>& gb);

}  // namespace detpol
