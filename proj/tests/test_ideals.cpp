#include "doctest.h"

#include "detpol/ideals.hpp"
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

std::vector<std::string> gen_strings(const Ideal<QQ>& i) {
  std::vector<std::string> out;
  for (const auto& g : i.gens) out.push_back(poly_str(kq, g));
  return out;
}

PolyMatrix<QQ> mat(const Rc& r, int rows, int cols,
                   const std::vector<std::string>& entries) {
  PolyMatrix<QQ> m(r, rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j)
      m.at(i, j) = p(r, entries[(size_t)(i * cols + j)]);
  return m;
}

}  // namespace

TEST_CASE("intersection of principal ideals") {
  auto r = make_ring({"x", "y"}, MonomialOrder::degrevlex());
  auto cap = ideal_intersect(kq, ideal_of(r, {"x"}), ideal_of(r, {"y"}));
  CHECK(cap.ring == r);
  CHECK(ideal_equal(kq, cap, ideal_of(r, {"x*y"})));

  auto wr = make_ring({"x", "y"}, MonomialOrder::weighted({2, 3}));
  auto wcap = ideal_intersect(kq, ideal_of(wr, {"x"}), ideal_of(wr, {"y"}));
  CHECK(wcap.ring == wr);
  CHECK(ideal_equal(kq, wcap, ideal_of(wr, {"x*y"})));
}

TEST_CASE("ideal quotient") {
  auto r = make_ring({"x", "y"}, MonomialOrder::degrevlex());
  auto q = ideal_quotient(kq, ideal_of(r, {"x^2*y", "x*y^2"}),
                          ideal_of(r, {"x*y"}));
  CHECK(ideal_equal(kq, q, ideal_of(r, {"x", "y"})));

  // Quotient by a constant gives the ideal back.
  auto c = ideal_quotient(kq, ideal_of(r, {"x^2", "y"}), ideal_of(r, {"3"}));
  CHECK(ideal_equal(kq, c, ideal_of(r, {"x^2", "y"})));

  bool threw = false;
  try {
    ideal_quotient(kq, ideal_of(r, {"x"}), Ideal<QQ>(r));
  } catch (const Error& e) {
    threw = true;
    CHECK(e.code() == ErrCode::ZeroDivisorRequest);
  }
  CHECK(threw);
}

TEST_CASE("saturation") {
  auto r = make_ring({"x", "y", "z"}, MonomialOrder::degrevlex());
  auto s1 = saturate(kq, ideal_of(r, {"x*y", "x*z"}), ideal_of(r, {"x"}));
  CHECK(ideal_equal(kq, s1, ideal_of(r, {"y", "z"})));

  auto s2 = saturate(kq, ideal_of(r, {"x^2", "x*y"}), ideal_of(r, {"x"}));
  CHECK(ideal_equal(kq, s2, ideal_of(r, {"1"})));

  // Saturation is idempotent.
  auto j = ideal_of(r, {"x"});
  auto once = saturate(kq, ideal_of(r, {"x^2*z", "x*y"}), j);
  auto twice = saturate(kq, once, j);
  CHECK(ideal_equal(kq, once, twice));
}

TEST_CASE("substitution maps to the smaller ring") {
  auto r = make_ring({"x", "y", "t"}, MonomialOrder::degrevlex(), 1);
  auto i = ideal_of(r, {"x^2 + t*y", "y - t"});
  auto at0 = substitute(kq, i, 2, kq.zero());
  REQUIRE(at0.ring->vars == std::vector<std::string>{"x", "y"});
  CHECK(at0.ring->nparams == 0);
  CHECK(gen_strings(at0) == std::vector<std::string>{"x^2", "y"});
  auto at2 = substitute(kq, i, 2, kq.from_long(2));
  CHECK(gen_strings(at2) == std::vector<std::string>{"x^2 + 2*y", "y - 2"});
}

TEST_CASE("minors are listed row-subset major in lexicographic order") {
  auto r = make_ring({"x", "y", "z"}, MonomialOrder::degrevlex());
  auto m = mat(r, 3, 2, {"z", "x", "y", "z", "x^2", "y"});
  auto minors = minors_ideal(kq, m, 2);
  REQUIRE(minors.gens.size() == 3);
  CHECK(poly_eq(kq, minors.gens[0], p(r, "z^2 - x*y")));
  CHECK(poly_eq(kq, minors.gens[1], p(r, "y*z - x^3")));
  CHECK(poly_eq(kq, minors.gens[2], p(r, "y^2 - x^2*z")));

  CHECK(gen_strings(minors_ideal(kq, m, 0)) ==
        std::vector<std::string>{"1"});
  CHECK(minors_ideal(kq, m, 3).gens.empty());
}

TEST_CASE("fitting ideals form a chain") {
  auto r = make_ring({"x", "y", "z"}, MonomialOrder::degrevlex());
  auto m = mat(r, 3, 2, {"z", "x", "y", "z", "x^2", "y"});
  // fitting_ideal(m, j) uses minors of size rows - j.
  std::vector<Ideal<QQ>> chain;
  for (int j = 0; j <= 3; ++j) chain.push_back(fitting_ideal(kq, m, j));
  CHECK(chain[0].gens.empty());
  for (int j = 0; j + 1 <= 3; ++j) {
    auto big = buchberger(kq, chain[(size_t)j + 1]);
    for (const auto& g : chain[(size_t)j].gens)
      CHECK(in_ideal(kq, g, big));
  }
  CHECK(ideal_equal(kq, chain[3], ideal_of(r, {"1"})));
}

TEST_CASE("colength at the origin") {
  auto r1 = make_ring({"x"}, MonomialOrder::degrevlex());
  CHECK(colength_at_origin(kq, ideal_of(r1, {"x^3 + x^2"})) == 2);

  auto r2 = make_ring({"x", "y"}, MonomialOrder::degrevlex());
  CHECK(colength_at_origin(kq, ideal_of(r2, {"x^3 + x^2", "y^2 - y"})) == 2);

  bool threw = false;
  try {
    colength_at_origin(kq, ideal_of(r2, {"x*y"}));
  } catch (const Error& e) {
    threw = true;
    CHECK(e.code() == ErrCode::NotZeroDimensional);
  }
  CHECK(threw);
}

TEST_CASE("colength matches truncated linear algebra") {
  auto r = make_ring({"x", "y"}, MonomialOrder::degrevlex());
  for (const auto& gens : std::vector<std::vector<std::string>>{
           {"x^2", "y^3"},
           {"x^2 + y^3", "x*y"},
           {"x^3 + x^2", "y^2 - y"},
           {"x^2 - y^2", "x*y^2"},
       }) {
    auto i = ideal_of(r, gens);
    CHECK(colength_at_origin(kq, i) == oracle::macaulay_colength(kq, i));
  }
}

TEST_CASE("module relations by elimination") {
  auto r = make_ring({"x", "y"}, MonomialOrder::degrevlex());
  auto m = mat(r, 1, 2, {"x", "y"});
  auto rel = rees_relations(kq, m, Ideal<QQ>(r));
  REQUIRE(rel.ring->vars ==
          std::vector<std::string>{"x", "y", "z1", "z2"});
  auto gb = buchberger(kq, rel);
  REQUIRE(gb.g.size() == 1);
  CHECK(poly_str(kq, gb.g.front()) == "y*z1 - x*z2");
}

TEST_CASE("seeded linear forms are deterministic and fiber only") {
  auto r = make_ring({"x", "y", "t"}, MonomialOrder::degrevlex(), 1);
  SplitMix64 a(99), b(99), c(100);
  auto fa = random_linear_forms(kq, r, 3, a);
  auto fb = random_linear_forms(kq, r, 3, b);
  auto fc = random_linear_forms(kq, r, 3, c);
  REQUIRE(fa.size() == 3);
  bool all_eq = true, any_diff = false;
  for (int i = 0; i < 3; ++i) {
    all_eq = all_eq && poly_eq(kq, fa[(size_t)i], fb[(size_t)i]);
    any_diff = any_diff || !poly_eq(kq, fa[(size_t)i], fc[(size_t)i]);
    CHECK(!fa[(size_t)i].is_zero());
    CHECK(fa[(size_t)i].total_degree() == 1);
    for (const auto& t : fa[(size_t)i].terms) CHECK(t.first.e[2] == 0);
  }
  CHECK(all_eq);
  CHECK(any_diff);
}

TEST_CASE("generic column combinations have the requested shape") {
  auto r = make_ring({"x", "y"}, MonomialOrder::degrevlex());
  auto m = mat(r, 2, 3, {"x", "y", "x + y", "y", "x", "x - y"});
  SplitMix64 a(7), b(7);
  auto ca = generic_combinations(kq, m, 2, a);
  auto cb = generic_combinations(kq, m, 2, b);
  CHECK(ca.rows == 2);
  CHECK(ca.cols == 2);
  for (int i = 0; i < ca.rows; ++i)
    for (int j = 0; j < ca.cols; ++j)
      CHECK(poly_eq(kq, ca.at(i, j), cb.at(i, j)));
}

TEST_CASE("ideal equality is order independent of generators") {
  auto r = make_ring({"x", "y"}, MonomialOrder::degrevlex());
  CHECK(ideal_equal(kq, ideal_of(r, {"x + y", "x - y"}),
                    ideal_of(r, {"x", "y"})));
  CHECK(!ideal_equal(kq, ideal_of(r, {"x"}), ideal_of(r, {"x", "y"})));
}
