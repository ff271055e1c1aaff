#include "doctest.h"

#include <algorithm>
#include <set>

#include "detpol/groebner.hpp"
#include "detpol/rng.hpp"
#include "oracles.hpp"

using namespace detpol;
using QQ = RationalField;

namespace {

const QQ kq;

Poly<QQ> p(const Rc& r, const std::string& s) {
  return parse_poly(kq, r.get(), s);
}

Ideal<QQ> ideal_of(const Rc& r, const std::vector<std::string>& gens) {
  Ideal<QQ> i(r);
  for (const auto& s : gens) i.gens.push_back(p(r, s));
  return i;
}

std::set<std::string> gb_strings(const ReducedGB<QQ>& gb) {
  std::set<std::string> out;
  for (const auto& g : gb.g) out.insert(poly_str(kq, g));
  return out;
}

}  // namespace

TEST_CASE("reduced basis of the twisted cubic under lex") {
  auto r = make_ring({"x", "y", "z"}, MonomialOrder::lex());
  auto gb = buchberger(kq, ideal_of(r, {"x^2 - y", "x*y - z"}));
  CHECK(gb_strings(gb) == std::set<std::string>{"x^2 - y", "x*y - z",
                                                "x*z - y^2", "y^3 - z^2"});
  // Ascending by lead monomial.
  CHECK(poly_str(kq, gb.g.front()) == "y^3 - z^2");
  CHECK(poly_str(kq, gb.g.back()) == "x^2 - y");
}

TEST_CASE("quotient dimension and staircase") {
  auto r = make_ring({"x", "y"}, MonomialOrder::degrevlex());
  auto box = buchberger(kq, ideal_of(r, {"x^2", "y^3"}));
  CHECK(quotient_dim(box) == 6);
  auto mons = standard_monomials(box);
  REQUIRE(mons.size() == 6);
  CHECK(mons.front().is_one());
  for (size_t i = 1; i < mons.size(); ++i)
    CHECK(mono_cmp(mons[i - 1], mons[i], r->order) < 0);

  CHECK(!quotient_dim(buchberger(kq, ideal_of(r, {"x^2"}))).has_value());

  auto unit = buchberger(kq, ideal_of(r, {"x", "x + 1"}));
  CHECK(unit.is_unit());
  CHECK(quotient_dim(unit) == 0);
  CHECK(krull_dim(unit) == -1);

  auto zero = buchberger(kq, Ideal<QQ>(r));
  CHECK(zero.is_zero_ideal());
  CHECK(!quotient_dim(zero).has_value());
  CHECK(krull_dim(zero) == 2);
}

TEST_CASE("krull dimension") {
  auto r2 = make_ring({"x", "y"}, MonomialOrder::degrevlex());
  CHECK(krull_dim(buchberger(kq, ideal_of(r2, {"x*y"}))) == 1);
  auto r3 = make_ring({"x", "y", "z"}, MonomialOrder::degrevlex());
  CHECK(krull_dim(buchberger(kq, ideal_of(r3, {"z^2 - x*y"}))) == 2);
  CHECK(krull_dim(buchberger(kq, ideal_of(r3, {"x", "y", "z"}))) == 0);
}

TEST_CASE("elimination drops a variable") {
  auto r = make_ring({"w", "x", "y"}, MonomialOrder::degrevlex());
  auto elim = eliminate(kq, ideal_of(r, {"w*x - 1", "w*y - 1"}), {0});
  REQUIRE(elim.ring->nvars() == 2);
  CHECK(elim.ring->vars == std::vector<std::string>{"x", "y"});
  auto gb = buchberger(kq, elim);
  REQUIRE(gb.g.size() == 1);
  CHECK(poly_str(kq, gb.g.front()) == "x - y");
}

TEST_CASE("normal form is idempotent and detects membership") {
  auto r = make_ring({"x", "y", "z"}, MonomialOrder::degrevlex());
  auto gb = buchberger(kq, ideal_of(r, {"x^2 - y", "x*y - z"}));
  auto f = p(r, "x^4 + 3*x*y - z + 1");
  auto nf = normal_form(kq, f, gb);
  CHECK(poly_eq(kq, normal_form(kq, nf, gb), nf));
  CHECK(in_ideal(kq, poly_sub(kq, f, nf), gb));
  auto member = poly_add(kq, poly_mul(kq, p(r, "x + z^2"), p(r, "x^2 - y")),
                         poly_mul(kq, p(r, "y - 7"), p(r, "x*y - z")));
  CHECK(in_ideal(kq, member, gb));
  CHECK(!in_ideal(kq, p(r, "1"), gb));
  CHECK(!in_ideal(kq, p(r, "x"), gb));
}

TEST_CASE("step cap aborts long runs") {
  auto r = make_ring({"x", "y", "z"}, MonomialOrder::lex());
  GBOptions opts;
  opts.step_cap = 1;
  bool threw = false;
  try {
    buchberger(kq, ideal_of(r, {"x^2 - y", "x*y - z", "x*z - y^2"}), opts);
  } catch (const Error& e) {
    threw = true;
    CHECK(e.code() == ErrCode::CapExceeded);
  }
  CHECK(threw);
}

TEST_CASE("agrees with the unpruned textbook completion") {
  auto r = make_ring({"x", "y", "z"}, MonomialOrder::degrevlex());
  for (const auto& gens : std::vector<std::vector<std::string>>{
           {"x^2 - y", "x*y - z"},
           {"x^2 + y^2 + z^2 - 1", "x*y - z", "x - y"},
           {"x^3 - 2*x*y", "x^2*y - 2*y^2 + x"},
           {"x*y + z^2", "y^2 - 1", "x^2*z - y"}}) {
    auto i = ideal_of(r, gens);
    auto fast = buchberger(kq, i);
    auto slow = oracle::naive_buchberger(kq, i, 200000);
    CHECK(gb_equal(kq, fast, slow));
  }
}

TEST_CASE("agrees with the textbook completion on random ideals") {
  auto r = make_ring({"x", "y"}, MonomialOrder::degrevlex());
  SplitMix64 rng(fnv1a64("groebner-vs-oracle"));
  for (int trial = 0; trial < 40; ++trial) {
    Ideal<QQ> i(r);
    int ngens = (int)rng.range(2, 3);
    for (int g = 0; g < ngens; ++g) {
      std::vector<Poly<QQ>::Term> terms;
      int nterms = (int)rng.range(1, 3);
      for (int t = 0; t < nterms; ++t) {
        Monomial m;
        m.e[0] = (uint16_t)rng.range(0, 3);
        m.e[1] = (uint16_t)rng.range(0, 3);
        m.deg = m.e[0] + m.e[1];
        long long mag = (long long)rng.range(1, 9);
        long long sign = rng.range(0, 1) ? 1LL : -1LL;
        terms.push_back({m, kq.from_long(mag * sign)});
      }
      i.gens.push_back(poly_normalize(kq, r.get(), std::move(terms)));
    }
    auto fast = buchberger(kq, i);
    auto slow = oracle::naive_buchberger(kq, i, 200000);
    CHECK(gb_equal(kq, fast, slow));
  }
}

TEST_CASE("staircase count against brute enumeration") {
  auto r = make_ring({"x", "y", "z"}, MonomialOrder::degrevlex());
  for (const auto& gens : std::vector<std::vector<std::string>>{
           {"x^2", "y^3", "z^4"},
           {"x^2 - y*z", "y^2", "z^3", "x*z^2"},
           {"x^3", "y^2 - x", "z^2 - x*y"},
       }) {
    auto gb = buchberger(kq, ideal_of(r, gens));
    auto dim = quotient_dim(gb);
    REQUIRE(dim.has_value());
    CHECK(*dim == oracle::brute_standard_count(gb));
    CHECK(*dim == (long long)standard_monomials(gb).size());
  }
}

TEST_CASE("prime field runs match rational structure") {
  PrimeField fp(DEFAULT_CHECK_PRIME);
  auto r = make_ring({"x", "y", "z"}, MonomialOrder::lex());
  Ideal<PrimeField> i(r);
  i.gens.push_back(parse_poly(fp, r.get(), "x^2 - y"));
  i.gens.push_back(parse_poly(fp, r.get(), "x*y - z"));
  auto gb = buchberger(fp, i);
  CHECK(gb.g.size() == 4);
  auto rq = make_ring({"x", "y"}, MonomialOrder::degrevlex());
  Ideal<PrimeField> box(rq);
  box.gens.push_back(parse_poly(fp, rq.get(), "x^2"));
  box.gens.push_back(parse_poly(fp, rq.get(), "y^3"));
  CHECK(quotient_dim(buchberger(fp, box)) == 6);
}
