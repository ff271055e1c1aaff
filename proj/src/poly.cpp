#include "detpol/poly.hpp"

#include <algorithm>
#include <cctype>

namespace detpol {

template <class K>
Poly<K> poly_zero(const RingCtx* ring) {
  Poly<K> p;
  p.ring = ring;
  return p;
}

template <class K>
Poly<K> poly_const(const K& k, const RingCtx* ring, typename K::Elem c) {
  Poly<K> p;
  p.ring = ring;
  if (!k.is_zero(c)) p.terms.push_back({Monomial::one(), std::move(c)});
  return p;
}

template <class K>
Poly<K> poly_var(const K& k, const RingCtx* ring, int var) {
  require(var >= 0 && var < ring->nvars(), ErrCode::RangeError,
          "variable index out of range");
  Poly<K> p;
  p.ring = ring;
  p.terms.push_back({Monomial::var(var), k.one()});
  return p;
}

template <class K>
Poly<K> poly_term(const K& k, const RingCtx* ring, const Monomial& m,
                  typename K::Elem c) {
  Poly<K> p;
  p.ring = ring;
  if (!k.is_zero(c)) p.terms.push_back({m, std::move(c)});
  return p;
}

template <class K>
Poly<K> poly_normalize(const K& k, const RingCtx* ring,
                       std::vector<typename Poly<K>::Term> terms) {
  const MonomialOrder& ord = ring->order;
  std::sort(terms.begin(), terms.end(), [&](const auto& a, const auto& b) {
    return mono_cmp(a.first, b.first, ord) > 0;
  });
  Poly<K> p;
  p.ring = ring;
  p.terms.reserve(terms.size());
  for (auto& t : terms) {
    if (!p.terms.empty() && p.terms.back().first == t.first) {
      p.terms.back().second = k.add(p.terms.back().second, t.second);
      if (k.is_zero(p.terms.back().second)) p.terms.pop_back();
    } else if (!k.is_zero(t.second)) {
      p.terms.push_back(std::move(t));
    }
  }
  return p;
}

template <class K>
bool poly_eq(const K& k, const Poly<K>& a, const Poly<K>& b) {
  check_same_ring(a, b);
  if (a.terms.size() != b.terms.size()) return false;
  for (size_t i = 0; i < a.terms.size(); ++i) {
    if (!(a.terms[i].first == b.terms[i].first)) return false;
    if (!k.eq(a.terms[i].second, b.terms[i].second)) return false;
  }
  return true;
}

// Merge two canonical term lists, with the second scaled by c (and shifted
// by m when shift is set). Handles add, sub, and the reduction kernel.
template <class K>
static Poly<K> merge_scaled(const K& k, const Poly<K>& a,
                            const typename K::Elem& c, const Monomial* shift,
                            const Poly<K>& b) {
  check_same_ring(a, b);
  const MonomialOrder& ord = a.ring->order;
  Poly<K> out;
  out.ring = a.ring;
  out.terms.reserve(a.terms.size() + b.terms.size());
  size_t i = 0, j = 0;
  while (i < a.terms.size() || j < b.terms.size()) {
    if (j >= b.terms.size()) {
      out.terms.push_back(a.terms[i++]);
      continue;
    }
    Monomial bm = shift ? mono_mul(b.terms[j].first, *shift)
                        : b.terms[j].first;
    if (i >= a.terms.size()) {
      auto cv = k.mul(c, b.terms[j].second);
      if (!k.is_zero(cv)) out.terms.push_back({bm, std::move(cv)});
      ++j;
      continue;
    }
    int cmp = mono_cmp(a.terms[i].first, bm, ord);
    if (cmp > 0) {
      out.terms.push_back(a.terms[i++]);
    } else if (cmp < 0) {
      auto cv = k.mul(c, b.terms[j].second);
      if (!k.is_zero(cv)) out.terms.push_back({bm, std::move(cv)});
      ++j;
    } else {
      auto cv = k.add(a.terms[i].second, k.mul(c, b.terms[j].second));
      if (!k.is_zero(cv)) out.terms.push_back({a.terms[i].first, std::move(cv)});
      ++i;
      ++j;
    }
  }
  return out;
}

template <class K>
Poly<K> poly_add(const K& k, const Poly<K>& a, const Poly<K>& b) {
  return merge_scaled(k, a, k.one(), nullptr, b);
}

template <class K>
Poly<K> poly_sub(const K& k, const Poly<K>& a, const Poly<K>& b) {
  return merge_scaled(k, a, k.neg(k.one()), nullptr, b);
}

template <class K>
Poly<K> poly_neg(const K& k, const Poly<K>& a) {
  Poly<K> out = a;
  for (auto& t : out.terms) t.second = k.neg(t.second);
  return out;
}

template <class K>
Poly<K> poly_axpy(const K& k, const Poly<K>& a, const typename K::Elem& c,
                  const Monomial& m, const Poly<K>& b) {
  return merge_scaled(k, a, k.neg(c), &m, b);
}

template <class K>
Poly<K> poly_mul(const K& k, const Poly<K>& a, const Poly<K>& b) {
  check_same_ring(a, b);
  if (a.is_zero() || b.is_zero()) return poly_zero<K>(a.ring);
  if (b.terms.size() == 1)
    return merge_scaled(k, poly_zero<K>(a.ring), b.terms[0].second,
                        &b.terms[0].first, a);
  if (a.terms.size() == 1)
    return merge_scaled(k, poly_zero<K>(b.ring), a.terms[0].second,
                        &a.terms[0].first, b);
  std::vector<typename Poly<K>::Term> prods;
  prods.reserve(a.terms.size() * b.terms.size());
  for (const auto& ta : a.terms)
    for (const auto& tb : b.terms)
      prods.push_back(
          {mono_mul(ta.first, tb.first), k.mul(ta.second, tb.second)});
  return poly_normalize<K>(k, a.ring, std::move(prods));
}

template <class K>
Poly<K> poly_scale(const K& k, const Poly<K>& a, const typename K::Elem& c) {
  if (k.is_zero(c)) return poly_zero<K>(a.ring);
  Poly<K> out = a;
  for (auto& t : out.terms) t.second = k.mul(t.second, c);
  return out;
}

template <class K>
Poly<K> poly_derivative(const K& k, const Poly<K>& a, int var) {
  require(var >= 0 && var < a.ring->nvars(), ErrCode::RangeError,
          "variable index out of range");
  Poly<K> out;
  out.ring = a.ring;
  for (const auto& t : a.terms) {
    uint16_t e = t.first.e[(size_t)var];
    if (e == 0) continue;
    Monomial m = t.first;
    m.e[(size_t)var] = (uint16_t)(e - 1);
    m.deg -= 1;
    auto c = k.mul(t.second, k.from_long((long long)e));
    if (!k.is_zero(c)) out.terms.push_back({m, std::move(c)});
  }
  // Dropping one fixed variable keeps the descending term order intact for
  // lex and degrevlex but not for block or weighted orders in general.
  return poly_normalize<K>(k, a.ring, std::move(out.terms));
}

template <class K>
Poly<K> poly_eval_var(const K& k, const Poly<K>& a, int var,
                      const typename K::Elem& value) {
  require(var >= 0 && var < a.ring->nvars(), ErrCode::RangeError,
          "variable index out of range");
  std::vector<typename Poly<K>::Term> terms;
  terms.reserve(a.terms.size());
  for (const auto& t : a.terms) {
    uint16_t e = t.first.e[(size_t)var];
    Monomial m = t.first;
    m.e[(size_t)var] = 0;
    m.deg -= e;
    auto c = t.second;
    for (uint16_t i = 0; i < e; ++i) c = k.mul(c, value);
    terms.push_back({m, std::move(c)});
  }
  return poly_normalize<K>(k, a.ring, std::move(terms));
}

template <class K>
Poly<K> poly_canonical(const K& k, const Poly<K>& a) {
  if (a.is_zero()) return a;
  std::vector<const typename K::Elem*> cs;
  cs.reserve(a.terms.size());
  for (const auto& t : a.terms) cs.push_back(&t.second);
  return poly_scale(k, a, k.canonical_scale(cs));
}

template <class K>
Poly<K> poly_monic(const K& k, const Poly<K>& a) {
  if (a.is_zero()) return a;
  return poly_scale(k, a, k.inv(a.lc()));
}

template <class K>
Poly<K> poly_to_ring(const K& k, const Poly<K>& a, const RingCtx* ring) {
  require(a.ring->vars == ring->vars, ErrCode::RingMismatch,
          "target ring has different variables");
  return poly_normalize<K>(k, ring, a.terms);
}

template <class K>
Poly<K> poly_map_vars(const K& k, const Poly<K>& a, const RingCtx* ring,
                      const std::vector<int>& image) {
  require((int)image.size() == a.ring->nvars(), ErrCode::LengthMismatch,
          "variable image list does not match source ring");
  std::vector<typename Poly<K>::Term> terms;
  terms.reserve(a.terms.size());
  for (const auto& t : a.terms) {
    Monomial m;
    for (int i = 0; i < a.ring->nvars(); ++i) {
      uint16_t e = t.first.e[(size_t)i];
      if (e == 0) continue;
      require(image[(size_t)i] >= 0, ErrCode::InvariantViolation,
              "term uses a variable absent from the target ring");
      m.e[(size_t)image[(size_t)i]] = e;
    }
    m.deg = t.first.deg;
    terms.push_back({m, t.second});
  }
  return poly_normalize<K>(k, ring, std::move(terms));
}

template <class K>
Poly<K> poly_exact_div(const K& k, const Poly<K>& f, const Poly<K>& g) {
  check_same_ring(f, g);
  require(!g.is_zero(), ErrCode::ZeroDivisorRequest, "division by zero");
  Poly<K> q = poly_zero<K>(f.ring);
  Poly<K> r = f;
  while (!r.is_zero()) {
    require(mono_divides(g.lm(), r.lm()), ErrCode::InvariantViolation,
            "polynomial division is not exact");
    Monomial m = mono_div(r.lm(), g.lm());
    auto c = k.div(r.lc(), g.lc());
    q.terms.push_back({m, c});
    r = poly_axpy(k, r, c, m, g);
  }
  // Quotient leads are strictly decreasing, so q is already canonical.
  return q;
}

namespace {

// Recursive-descent parser for polynomial expressions.
template <class K>
struct Parser {
  const K& k;
  const RingCtx* ring;
  const std::string& s;
  size_t pos = 0;

  Parser(const K& kk, const RingCtx* r, const std::string& text)
      : k(kk), ring(r), s(text) {}

  [[noreturn]] void err(const std::string& msg) {
    fail(ErrCode::SyntaxError,
         msg + " at byte " + std::to_string(pos) + " of \"" + s + "\"");
  }

  void skip_ws() {
    while (pos < s.size() && std::isspace((unsigned char)s[pos])) ++pos;
  }

  bool eat(char c) {
    skip_ws();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }

  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }

  long long integer() {
    skip_ws();
    size_t start = pos;
    while (pos < s.size() && std::isdigit((unsigned char)s[pos])) ++pos;
    if (pos == start) err("expected an integer");
    if (pos - start > 18) err("integer literal too large");
    return std::stoll(s.substr(start, pos - start));
  }

  Poly<K> expr() {
    Poly<K> acc = eat('-') ? poly_neg(k, term()) : term();
    for (;;) {
      if (eat('+'))
        acc = poly_add(k, acc, term());
      else if (eat('-'))
        acc = poly_sub(k, acc, term());
      else
        return acc;
    }
  }

  Poly<K> term() {
    Poly<K> acc = factor();
    while (eat('*')) acc = poly_mul(k, acc, factor());
    return acc;
  }

  Poly<K> factor() {
    Poly<K> base = atom();
    if (eat('^')) {
      skip_ws();
      if (peek() == '-')
        fail(ErrCode::NegativeExponent,
             "exponents must be nonnegative (at byte " +
                 std::to_string(pos) + " of \"" + s + "\")");
      long long e = integer();
      if (e > 0xffff) err("exponent too large");
      Poly<K> acc = poly_const<K>(k, ring, k.one());
      for (long long i = 0; i < e; ++i) acc = poly_mul(k, acc, base);
      return acc;
    }
    return base;
  }

  Poly<K> atom() {
    skip_ws();
    if (pos >= s.size()) err("unexpected end of input");
    char c = s[pos];
    if (c == '(') {
      ++pos;
      Poly<K> inner = expr();
      if (!eat(')')) err("expected ')'");
      return inner;
    }
    if (c == '-') {
      ++pos;
      return poly_neg(k, factor());
    }
    if (std::isdigit((unsigned char)c)) {
      long long num = integer();
      if (eat('/')) {
        size_t at = pos;
        long long den = integer();
        if (den == 0) {
          pos = at;
          err("zero denominator");
        }
        return poly_const<K>(k, ring, k.from_ratio(num, den));
      }
      return poly_const<K>(k, ring, k.from_long(num));
    }
    if (std::isalpha((unsigned char)c) || c == '_') {
      size_t start = pos;
      while (pos < s.size() &&
             (std::isalnum((unsigned char)s[pos]) || s[pos] == '_'))
        ++pos;
      std::string name = s.substr(start, pos - start);
      int idx = ring->find_var(name);
      if (idx < 0) {
        pos = start;
        fail(ErrCode::UndeclaredVariable,
             "variable " + name + " is not declared (at byte " +
                 std::to_string(start) + ")");
      }
      return poly_var<K>(k, ring, idx);
    }
    err(std::string("unexpected character '") + c + "'");
  }
};

}  // namespace

template <class K>
Poly<K> parse_poly(const K& k, const RingCtx* ring, const std::string& text) {
  Parser<K> p(k, ring, text);
  Poly<K> out = p.expr();
  p.skip_ws();
  if (p.pos != text.size()) p.err("trailing input");
  return out;
}

template <class K>
std::string poly_str(const K& k, const Poly<K>& a) {
  if (a.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : a.terms) {
    std::string cs = k.str(t.second);
    bool negative = !cs.empty() && cs[0] == '-';
    if (negative) cs = cs.substr(1);
    if (first) {
      if (negative) out += "-";
      first = false;
    } else {
      out += negative ? " - " : " + ";
    }
    if (t.first.is_one()) {
      out += cs;
    } else if (cs == "1") {
      out += a.ring->mono_str(t.first);
    } else {
      out += cs + "*" + a.ring->mono_str(t.first);
    }
  }
  return out;
}

#define DETPOL_INSTANTIATE_POLY(K)                                           \
  template Poly<K> poly_zero<K>(const RingCtx*);                             \
  template Poly<K> poly_const<K>(const K&, const RingCtx*, K::Elem);         \
  template Poly<K> poly_var<K>(const K&, const RingCtx*, int);               \
  template Poly<K> poly_term<K>(const K&, const RingCtx*, const Monomial&,   \
                                K::Elem);                                    \
  template Poly<K> poly_normalize<K>(const K&, const RingCtx*,               \
                                     std::vector<Poly<K>::Term>);            \
  template bool poly_eq<K>(const K&, const Poly<K>&, const Poly<K>&);        \
  template Poly<K> poly_add<K>(const K&, const Poly<K>&, const Poly<K>&);    \
  template Poly<K> poly_sub<K>(const K&, const Poly<K>&, const Poly<K>&);    \
  template Poly<K> poly_neg<K>(const K&, const Poly<K>&);                    \
  template Poly<K> poly_axpy<K>(const K&, const Poly<K>&, const K::Elem&,    \
                                const Monomial&, const Poly<K>&);            \
  template Poly<K> poly_mul<K>(const K&, const Poly<K>&, const Poly<K>&);    \
  template Poly<K> poly_scale<K>(const K&, const Poly<K>&, const K::Elem&);  \
  template Poly<K> poly_derivative<K>(const K&, const Poly<K>&, int);        \
  template Poly<K> poly_eval_var<K>(const K&, const Poly<K>&, int,           \
                                    const K::Elem&);                         \
  template Poly<K> poly_canonical<K>(const K&, const Poly<K>&);              \
  template Poly<K> poly_monic<K>(const K&, const Poly<K>&);                  \
  template Poly<K> poly_to_ring<K>(const K&, const Poly<K>&, const RingCtx*); \
  template Poly<K> poly_map_vars<K>(const K&, const Poly<K>&,                \
                                    const RingCtx*, const std::vector<int>&); \
  template Poly<K> poly_exact_div<K>(const K&, const Poly<K>&,               \
                                     const Poly<K>&);                        \
  template Poly<K> parse_poly<K>(const K&, const RingCtx*,                   \
                                 const std::string&);                        \
  template std::string poly_str<K>(const K&, const Poly<K>&);

DETPOL_INSTANTIATE_POLY(RationalField)
DETPOL_INSTANTIATE_POLY(PrimeField)

}  // namespace detpol
