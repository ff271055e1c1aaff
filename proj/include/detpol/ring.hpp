#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "detpol/error.hpp"

namespace detpol {

// Hard cap on ring size. The largest ring any pipeline here builds is the
// curve-scale Rees elimination ring plus auxiliary trick variables.
constexpr int MAX_VARS = 16;

// Exponent vector with cached total degree. Slots beyond the ring's variable
// count stay zero, so arithmetic can run over the full array unconditionally.
struct Monomial {
  std::array<uint16_t, MAX_VARS> e{};
  uint32_t deg = 0;

  bool is_one() const { return deg == 0; }

  static Monomial one() { return Monomial{}; }

  static Monomial var(int i, uint16_t exp = 1) {
    Monomial m;
    m.e[(size_t)i] = exp;
    m.deg = exp;
    return m;
  }
};

bool operator==(const Monomial& a, const Monomial& b);

Monomial mono_mul(const Monomial& a, const Monomial& b);
bool mono_divides(const Monomial& a, const Monomial& b);  // a | b
Monomial mono_div(const Monomial& a, const Monomial& b);  // a / b, b | a
Monomial mono_lcm(const Monomial& a, const Monomial& b);
bool mono_coprime(const Monomial& a, const Monomial& b);
uint32_t mono_support(const Monomial& a);  // bit i set when e[i] > 0

enum class OrderKind { Lex, DegRevLex, Block, Weighted };

// Monomial order descriptor. Block compares degrevlex on the first `block`
// variables, then degrevlex on the rest; Weighted compares weighted degree
// with a degrevlex tie break.
struct MonomialOrder {
  OrderKind kind = OrderKind::DegRevLex;
  int block = 0;
  std::vector<long> weights;

  static MonomialOrder lex() { return {OrderKind::Lex, 0, {}}; }
  static MonomialOrder degrevlex() { return {OrderKind::DegRevLex, 0, {}}; }
  static MonomialOrder elim_block(int nfirst) {
    return {OrderKind::Block, nfirst, {}};
  }
  static MonomialOrder weighted(std::vector<long> w) {
    return {OrderKind::Weighted, 0, std::move(w)};
  }
};

bool operator==(const MonomialOrder& a, const MonomialOrder& b);

// Three-way comparison under `ord`: +1 when a is larger, -1 when smaller.
int mono_cmp(const Monomial& a, const Monomial& b, const MonomialOrder& ord);

// Immutable ring descriptor: ordered variable names (fiber variables first,
// then base parameters), the monomial order, and the parameter count.
struct RingCtx {
  std::vector<std::string> vars;
  MonomialOrder order;
  int nparams = 0;

  int nvars() const { return (int)vars.size(); }
  int nfiber() const { return nvars() - nparams; }

  // Index of a declared variable; UnknownVariable otherwise.
  int var_index(const std::string& name) const;
  // Index or -1, for parsers that map the miss to UndeclaredVariable.
  int find_var(const std::string& name) const;

  std::string mono_str(const Monomial& m) const;
};

using Rc = std::shared_ptr<const RingCtx>;

Rc make_ring(std::vector<std::string> vars, MonomialOrder order,
             int nparams = 0);

// Same variables under a different order.
Rc with_order(const Rc& ring, MonomialOrder order);

// Subring without the listed variable indices (relative order kept).
Rc drop_vars(const Rc& ring, const std::vector<int>& dropped);

}  // namespace detpol
