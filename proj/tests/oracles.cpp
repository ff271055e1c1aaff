#include "oracles.hpp"

#include <algorithm>
#include <map>

namespace detpol::oracle {

namespace {

Poly<QQ> naive_reduce(const QQ& k, Poly<QQ> cur,
                      const std::vector<Poly<QQ>>& basis) {
  Poly<QQ> rem = poly_zero<QQ>(cur.ring);
  while (!cur.is_zero()) {
    bool hit = false;
    for (const auto& g : basis) {
      if (mono_divides(g.lm(), cur.lm())) {
        auto c = k.div(cur.lc(), g.lc());
        cur = poly_axpy(k, cur, c, mono_div(cur.lm(), g.lm()), g);
        hit = true;
        break;
      }
    }
    if (!hit) {
      rem.terms.push_back(cur.terms.front());
      cur.terms.erase(cur.terms.begin());
    }
  }
  return rem;
}

}  // namespace

ReducedGB<QQ> naive_buchberger(const QQ& k, const Ideal<QQ>& ideal,
                               long pair_cap) {
  std::vector<Poly<QQ>> basis;
  for (const auto& g : ideal.gens)
    if (!g.is_zero()) basis.push_back(g);
  std::vector<std::pair<size_t, size_t>> queue;
  for (size_t i = 0; i < basis.size(); ++i)
    for (size_t j = i + 1; j < basis.size(); ++j) queue.push_back({i, j});
  long steps = 0;
  while (!queue.empty()) {
    require(++steps <= pair_cap, ErrCode::CapExceeded,
            "oracle pair cap exceeded");
    auto [i, j] = queue.front();
    queue.erase(queue.begin());
    Monomial l = mono_lcm(basis[i].lm(), basis[j].lm());
    Poly<QQ> s =
        poly_sub(k,
                 poly_mul(k,
                          poly_term<QQ>(k, basis[i].ring,
                                        mono_div(l, basis[i].lm()),
                                        k.inv(basis[i].lc())),
                          basis[i]),
                 poly_mul(k,
                          poly_term<QQ>(k, basis[j].ring,
                                        mono_div(l, basis[j].lm()),
                                        k.inv(basis[j].lc())),
                          basis[j]));
    Poly<QQ> r = naive_reduce(k, s, basis);
    if (!r.is_zero()) {
      for (size_t t = 0; t < basis.size(); ++t)
        queue.push_back({t, basis.size()});
      basis.push_back(r);
    }
  }
  // Minimalize, then tail-reduce until stable.
  std::sort(basis.begin(), basis.end(),
            [&](const Poly<QQ>& a, const Poly<QQ>& b) {
              return mono_cmp(a.lm(), b.lm(), a.ring->order) < 0;
            });
  std::vector<Poly<QQ>> min;
  for (const auto& g : basis) {
    bool covered = false;
    for (const auto& h : min)
      if (mono_divides(h.lm(), g.lm())) covered = true;
    if (!covered) min.push_back(g);
  }
  for (bool changed = true; changed;) {
    changed = false;
    for (size_t i = 0; i < min.size(); ++i) {
      std::vector<Poly<QQ>> others;
      for (size_t j = 0; j < min.size(); ++j)
        if (j != i) others.push_back(min[j]);
      Poly<QQ> r = naive_reduce(k, min[i], others);
      if (!poly_eq(k, r, min[i])) {
        min[i] = r;
        changed = true;
      }
    }
  }
  for (auto& g : min) g = poly_monic(k, g);
  std::sort(min.begin(), min.end(),
            [&](const Poly<QQ>& a, const Poly<QQ>& b) {
              return mono_cmp(a.lm(), b.lm(), a.ring->order) < 0;
            });
  ReducedGB<QQ> out;
  out.ring = ideal.ring;
  out.g = std::move(min);
  return out;
}

long long brute_standard_count(const ReducedGB<QQ>& gb) {
  const int n = gb.ring->nvars();
  std::vector<long> bound((size_t)n, -1);
  for (const auto& g : gb.g) {
    const Monomial& m = g.lm();
    if (m.is_one()) return 0;
    int support = 0, maxv = -1;
    for (int i = 0; i < n; ++i)
      if (m.e[(size_t)i] > 0) {
        ++support;
        maxv = i;
      }
    if (support == 1) {
      long b = (long)m.e[(size_t)maxv];
      if (bound[(size_t)maxv] < 0 || b < bound[(size_t)maxv])
        bound[(size_t)maxv] = b;
    }
  }
  for (int i = 0; i < n; ++i)
    require(bound[(size_t)i] >= 0, ErrCode::NotZeroDimensional,
            "oracle needs a finite staircase");
  long long box = 1;
  for (int i = 0; i < n; ++i) {
    box *= bound[(size_t)i];
    require(box <= 2000000, ErrCode::ResourceLimit, "oracle box too large");
  }
  long long count = 0;
  std::vector<long> e((size_t)n, 0);
  for (;;) {
    Monomial m;
    uint32_t deg = 0;
    for (int i = 0; i < n; ++i) {
      m.e[(size_t)i] = (uint16_t)e[(size_t)i];
      deg += (uint32_t)e[(size_t)i];
    }
    m.deg = deg;
    bool divisible = false;
    for (const auto& g : gb.g)
      if (mono_divides(g.lm(), m)) {
        divisible = true;
        break;
      }
    if (!divisible) ++count;
    int at = 0;
    while (at < n) {
      if (++e[(size_t)at] < bound[(size_t)at]) break;
      e[(size_t)at] = 0;
      ++at;
    }
    if (at == n) break;
  }
  return count;
}

namespace {

// Dense row of rationals indexed by a fixed monomial list.
using Row = std::vector<mpq_class>;

long long rank_of(std::vector<Row>& rows, size_t width) {
  long long rank = 0;
  size_t row_at = 0;
  for (size_t col = 0; col < width && row_at < rows.size(); ++col) {
    size_t pivot = row_at;
    while (pivot < rows.size() && sgn(rows[pivot][col]) == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[pivot], rows[row_at]);
    for (size_t r = row_at + 1; r < rows.size(); ++r) {
      if (sgn(rows[r][col]) == 0) continue;
      mpq_class f = rows[r][col] / rows[row_at][col];
      for (size_t c = col; c < width; ++c)
        rows[r][c] -= f * rows[row_at][c];
    }
    ++row_at;
    ++rank;
  }
  return rank;
}

void enum_monomials(int n, int maxdeg, std::vector<Monomial>& out) {
  std::vector<long> e((size_t)n, 0);
  for (;;) {
    long deg = 0;
    for (int i = 0; i < n; ++i) deg += e[(size_t)i];
    if (deg < maxdeg) {
      Monomial m;
      for (int i = 0; i < n; ++i) m.e[(size_t)i] = (uint16_t)e[(size_t)i];
      m.deg = (uint32_t)deg;
      out.push_back(m);
    }
    int at = 0;
    while (at < n) {
      if (++e[(size_t)at] <= maxdeg) break;
      e[(size_t)at] = 0;
      ++at;
    }
    if (at == n) break;
  }
}

long long truncated_dim(const QQ&, const Ideal<QQ>& ideal, int N) {
  const int n = ideal.ring->nvars();
  std::vector<Monomial> monos;
  enum_monomials(n, N, monos);
  std::map<std::array<uint16_t, MAX_VARS>, size_t> index;
  for (size_t i = 0; i < monos.size(); ++i) index[monos[i].e] = i;

  std::vector<Row> rows;
  for (const auto& f : ideal.gens) {
    if (f.is_zero()) continue;
    long ordf = 1 << 20;
    for (const auto& t : f.terms) ordf = std::min(ordf, (long)t.first.deg);
    for (const auto& m : monos) {
      if ((long)m.deg + ordf >= N) continue;
      Row row(monos.size(), mpq_class(0));
      bool any = false;
      for (const auto& t : f.terms) {
        Monomial prod = mono_mul(m, t.first);
        if ((int)prod.deg >= N) continue;
        row[index.at(prod.e)] += t.second;
        any = true;
      }
      if (any) rows.push_back(std::move(row));
    }
  }
  long long rank = rank_of(rows, monos.size());
  return (long long)monos.size() - rank;
}

}  // namespace

long long macaulay_colength(const QQ& k, const Ideal<QQ>& ideal) {
  long long prev = -1;
  for (int N = 1; N <= 16; ++N) {
    long long d = truncated_dim(k, ideal, N);
    if (d == prev) return d;
    prev = d;
  }
  fail(ErrCode::ResourceLimit,
       "truncation did not stabilize below the degree cap");
}

}  // namespace detpol::oracle
