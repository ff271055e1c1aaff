#include "detpol/ring.hpp"

#include <algorithm>

namespace detpol {

bool operator==(const Monomial& a, const Monomial& b) {
  return a.deg == b.deg && a.e == b.e;
}

Monomial mono_mul(const Monomial& a, const Monomial& b) {
  Monomial m;
  for (int i = 0; i < MAX_VARS; ++i)
    m.e[(size_t)i] = (uint16_t)(a.e[(size_t)i] + b.e[(size_t)i]);
  m.deg = a.deg + b.deg;
  require(m.deg <= 0xffff, ErrCode::ResourceLimit, "exponent overflow");
  return m;
}

bool mono_divides(const Monomial& a, const Monomial& b) {
  if (a.deg > b.deg) return false;
  for (int i = 0; i < MAX_VARS; ++i)
    if (a.e[(size_t)i] > b.e[(size_t)i]) return false;
  return true;
}

Monomial mono_div(const Monomial& a, const Monomial& b) {
  Monomial m;
  for (int i = 0; i < MAX_VARS; ++i) {
    require(b.e[(size_t)i] <= a.e[(size_t)i], ErrCode::InvariantViolation,
            "monomial division is not exact");
    m.e[(size_t)i] = (uint16_t)(a.e[(size_t)i] - b.e[(size_t)i]);
  }
  m.deg = a.deg - b.deg;
  return m;
}

Monomial mono_lcm(const Monomial& a, const Monomial& b) {
  Monomial m;
  uint32_t deg = 0;
  for (int i = 0; i < MAX_VARS; ++i) {
    m.e[(size_t)i] = std::max(a.e[(size_t)i], b.e[(size_t)i]);
    deg += m.e[(size_t)i];
  }
  m.deg = deg;
  return m;
}

bool mono_coprime(const Monomial& a, const Monomial& b) {
  for (int i = 0; i < MAX_VARS; ++i)
    if (a.e[(size_t)i] > 0 && b.e[(size_t)i] > 0) return false;
  return true;
}

uint32_t mono_support(const Monomial& a) {
  uint32_t mask = 0;
  for (int i = 0; i < MAX_VARS; ++i)
    if (a.e[(size_t)i] > 0) mask |= (1u << i);
  return mask;
}

bool operator==(const MonomialOrder& a, const MonomialOrder& b) {
  return a.kind == b.kind && a.block == b.block && a.weights == b.weights;
}

// Degrevlex on slots [lo, hi): larger total degree wins, ties go to the
// monomial whose last nonzero exponent difference is negative.
static int cmp_drl_range(const Monomial& a, const Monomial& b, int lo,
                         int hi) {
  long da = 0, db = 0;
  for (int i = lo; i < hi; ++i) {
    da += a.e[(size_t)i];
    db += b.e[(size_t)i];
  }
  if (da != db) return da > db ? 1 : -1;
  for (int i = hi - 1; i >= lo; --i) {
    int d = (int)a.e[(size_t)i] - (int)b.e[(size_t)i];
    if (d != 0) return d < 0 ? 1 : -1;
  }
  return 0;
}

int mono_cmp(const Monomial& a, const Monomial& b, const MonomialOrder& ord) {
  switch (ord.kind) {
    case OrderKind::Lex: {
      for (int i = 0; i < MAX_VARS; ++i) {
        int d = (int)a.e[(size_t)i] - (int)b.e[(size_t)i];
        if (d != 0) return d > 0 ? 1 : -1;
      }
      return 0;
    }
    case OrderKind::DegRevLex: {
      if (a.deg != b.deg) return a.deg > b.deg ? 1 : -1;
      for (int i = MAX_VARS - 1; i >= 0; --i) {
        int d = (int)a.e[(size_t)i] - (int)b.e[(size_t)i];
        if (d != 0) return d < 0 ? 1 : -1;
      }
      return 0;
    }
    case OrderKind::Block: {
      int c = cmp_drl_range(a, b, 0, ord.block);
      if (c != 0) return c;
      return cmp_drl_range(a, b, ord.block, MAX_VARS);
    }
    case OrderKind::Weighted: {
      long wa = 0, wb = 0;
      for (size_t i = 0; i < ord.weights.size(); ++i) {
        wa += ord.weights[i] * (long)a.e[i];
        wb += ord.weights[i] * (long)b.e[i];
      }
      if (wa != wb) return wa > wb ? 1 : -1;
      return cmp_drl_range(a, b, 0, MAX_VARS);
    }
  }
  return 0;
}

int RingCtx::var_index(const std::string& name) const {
  int i = find_var(name);
  require(i >= 0, ErrCode::UnknownVariable, "no variable named " + name);
  return i;
}

int RingCtx::find_var(const std::string& name) const {
  for (size_t i = 0; i < vars.size(); ++i)
    if (vars[i] == name) return (int)i;
  return -1;
}

std::string RingCtx::mono_str(const Monomial& m) const {
  std::string out;
  for (int i = 0; i < nvars(); ++i) {
    uint16_t e = m.e[(size_t)i];
    if (e == 0) continue;
    if (!out.empty()) out += "*";
    out += vars[(size_t)i];
    if (e > 1) out += "^" + std::to_string(e);
  }
  return out.empty() ? "1" : out;
}

static void validate_ring(const std::vector<std::string>& vars,
                          const MonomialOrder& order, int nparams) {
  require((int)vars.size() <= MAX_VARS, ErrCode::ResourceLimit,
          "ring exceeds the " + std::to_string(MAX_VARS) + " variable cap");
  require(nparams >= 0 && nparams <= (int)vars.size(), ErrCode::RangeError,
          "parameter count out of range");
  for (size_t i = 0; i < vars.size(); ++i) {
    require(!vars[i].empty(), ErrCode::InputError, "empty variable name");
    for (size_t j = i + 1; j < vars.size(); ++j)
      require(vars[i] != vars[j], ErrCode::InputError,
              "duplicate variable " + vars[i]);
  }
  if (order.kind == OrderKind::Block)
    require(order.block > 0 && order.block <= (int)vars.size(),
            ErrCode::OrderingMismatch, "block boundary out of range");
  if (order.kind == OrderKind::Weighted) {
    require(order.weights.size() == vars.size(), ErrCode::OrderingMismatch,
            "weight list does not match variable count");
    for (long w : order.weights)
      require(w > 0, ErrCode::OrderingMismatch, "weights must be positive");
  }
}

Rc make_ring(std::vector<std::string> vars, MonomialOrder order,
             int nparams) {
  validate_ring(vars, order, nparams);
  auto r = std::make_shared<RingCtx>();
  r->vars = std::move(vars);
  r->order = std::move(order);
  r->nparams = nparams;
  return r;
}

Rc with_order(const Rc& ring, MonomialOrder order) {
  return make_ring(ring->vars, std::move(order), ring->nparams);
}

Rc drop_vars(const Rc& ring, const std::vector<int>& dropped) {
  std::vector<bool> gone((size_t)ring->nvars(), false);
  for (int i : dropped) {
    require(i >= 0 && i < ring->nvars(), ErrCode::RangeError,
            "dropped variable index out of range");
    gone[(size_t)i] = true;
  }
  std::vector<std::string> vars;
  MonomialOrder order = ring->order;
  if (order.kind == OrderKind::Weighted) order.weights.clear();
  int nparams = 0;
  for (int i = 0; i < ring->nvars(); ++i) {
    if (gone[(size_t)i]) continue;
    vars.push_back(ring->vars[(size_t)i]);
    if (i >= ring->nfiber()) ++nparams;
    if (ring->order.kind == OrderKind::Weighted)
      order.weights.push_back(ring->order.weights[(size_t)i]);
  }
  if (order.kind == OrderKind::Block) {
    int kept_in_block = 0;
    for (int i = 0; i < ring->order.block && i < ring->nvars(); ++i)
      if (!gone[(size_t)i]) ++kept_in_block;
    order.block = kept_in_block;
    if (order.block == 0) order = MonomialOrder::degrevlex();
  }
  return make_ring(std::move(vars), order, nparams);
}

}  // namespace detpol
