#include "doctest.h"

#include "dreg/commutative.hpp"
#include "dreg/errors.hpp"
#include "dreg/factor.hpp"
#include "dreg/rational_function.hpp"
#include "support.hpp"

using namespace dreg;
using dreg::test::poly;
using dreg::test::random_poly;

TEST_CASE("rationals are canonical") {
  Rational a(6, 4);
  a.canonicalize();
  CHECK(to_string(a) == "3/2");
  CHECK(to_string(Rational(0)) == "0");
  CHECK(to_string(parse_rational("-10/4")) == "-5/2");
  CHECK_THROWS_AS(parse_rational("1/0"), UsageError);
  CHECK_THROWS_AS(parse_rational("1/"), UsageError);
  CHECK(parse_rational_list("0,1,1/2") == std::vector<Rational>{0, 1, Rational(1, 2)});
}

TEST_CASE("groebner_commutative examples") {
  auto lex1 = MonomialOrder::lex(1);
  auto g = groebner_commutative({poly("x1^2 - 1", 1), poly("x1 - 1", 1)}, lex1);
  REQUIRE(g.size() == 1);
  CHECK(g[0] == poly("x1 - 1", 1));

  auto lex2 = MonomialOrder::lex(2);
  g = groebner_commutative({poly("x1*x2 - 1", 2), poly("x1^2", 2)}, lex2);
  REQUIRE(g.size() == 1);
  CHECK(g[0].is_one());

  auto xi = poly("x2^2 - x1*x3", 3);
  g = groebner_commutative({xi}, MonomialOrder::degrevlex(3));
  REQUIRE(g.size() == 1);
  CHECK(g[0] == xi);

  CHECK(groebner_commutative({}, lex2).empty());
}

TEST_CASE("saturate_and_eliminate examples") {
  // variables (x, xi)
  CommutativeIdeal i{2, {poly("x1*x2", 2)}};
  auto r = saturate_and_eliminate(i, {1}, {1});
  REQUIRE(r.generators.size() == 1);
  CHECK(r.generators[0] == poly("x1", 2));

  CommutativeIdeal zero_section{4, {poly("x3", 4), poly("x4", 4)}};
  CHECK(saturate_and_eliminate(zero_section, {2, 3}, {2, 3}).is_unit());
}

TEST_CASE("saturate and intersect") {
  CommutativeIdeal i{2, {poly("x1^2*x2", 2)}};
  auto s = saturate(i, {poly("x1", 2)});
  REQUIRE(s.generators.size() == 1);
  CHECK(s.generators[0] == poly("x2", 2));
  CHECK(saturate(i, {}).is_unit());
  CHECK(saturate(i, {poly("3", 2)}).generators == i.generators);

  CommutativeIdeal a{2, {poly("x1", 2)}}, b{2, {poly("x2", 2)}};
  auto c = intersect(a, b);
  REQUIRE(c.generators.size() == 1);
  CHECK(c.generators[0] == poly("x1*x2", 2));
}

TEST_CASE("squarefree_factors examples") {
  auto f = squarefree_factors(poly("x1^2*x2", 2));
  REQUIRE(f.size() == 2);
  CHECK(f[0].first == poly("x1", 2));
  CHECK(f[0].second == 2);
  CHECK(f[1].first == poly("x2", 2));
  CHECK(f[1].second == 1);

  auto disc = poly("x2^2 - 4*x1*x3", 3);
  f = squarefree_factors(disc);
  REQUIRE(f.size() == 1);
  CHECK(f[0].first == disc);
  CHECK(f[0].second == 1);

  f = squarefree_factors(poly("(x1+x2)^2*(x1-x2)", 2));
  REQUIRE(f.size() == 2);
  CHECK(f[0].first == poly("x1+x2", 2));
  CHECK(f[0].second == 2);
  CHECK(f[1].first == poly("x1-x2", 2));
  CHECK(f[1].second == 1);

  CHECK_THROWS_AS(squarefree_factors(MultiPoly(2)), MathError);
  CHECK(squarefree_factors(poly("7", 2)).empty());
}

TEST_CASE("rational_roots examples") {
  CHECK(rational_roots(poly("x1^2 - 1", 1)) == std::vector<Rational>{-1, 1});
  CHECK(rational_roots(poly("x1^2 + 1", 1)).empty());
  CHECK(rational_roots(poly("2*x1 - 3", 1)) == std::vector<Rational>{Rational(3, 2)});
  CHECK(rational_roots(poly("x2^3 - x2", 2)) == std::vector<Rational>{-1, 0, 1});
}

TEST_CASE("gcd and exact division") {
  auto a = poly("(x1+x2)^3*(x1-1)", 2);
  auto b = poly("(x1+x2)*(x1-1)^2*x2", 2);
  CHECK(gcd(a, b) == poly("(x1+x2)*(x1-1)", 2).primitive());
  auto q = exact_divide(a, poly("x1+x2", 2));
  REQUIRE(q.has_value());
  CHECK(*q == poly("(x1+x2)^2*(x1-1)", 2));
  CHECK_FALSE(exact_divide(a, poly("x2", 2)).has_value());
}

TEST_CASE("property: ring axioms") {
  Rng rng(11);
  for (int k = 0; k < 100; ++k) {
    auto a = random_poly(rng, 3, 3, 4, 5);
    auto b = random_poly(rng, 3, 3, 4, 5);
    auto c = random_poly(rng, 3, 3, 4, 5);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * b == b * a);
    CHECK((a + b) - b == a);
  }
}

namespace {

MultiPoly s_poly(const MultiPoly& f, const MultiPoly& g, const MonomialOrder& o) {
  auto ef = leading_exponent(f, o), eg = leading_exponent(g, o);
  Exponents l(ef.size());
  for (std::size_t i = 0; i < l.size(); ++i) l[i] = std::max(ef[i], eg[i]);
  auto coef = [&](const MultiPoly& p, const Exponents& e) {
    for (const auto& t : p.terms())
      if (t.exp == e) return t.coef;
    return Rational(0);
  };
  Exponents uf(l.size()), ug(l.size());
  for (std::size_t i = 0; i < l.size(); ++i) {
    uf[i] = l[i] - ef[i];
    ug[i] = l[i] - eg[i];
  }
  return f.shift_monomial(uf) * coef(g, eg) - g.shift_monomial(ug) * coef(f, ef);
}

}  // namespace

TEST_CASE("property: groebner soundness") {
  Rng rng(23);
  for (int k = 0; k < 60; ++k) {
    std::size_t n = 2 + k % 2;
    auto order = k % 3 == 0 ? MonomialOrder::lex(n) : MonomialOrder::degrevlex(n);
    std::vector<MultiPoly> gens;
    for (int j = 0; j < 3; ++j) gens.push_back(random_poly(rng, n, 2, 3, 3));
    auto g = groebner_commutative(gens, order);
    for (const auto& f : gens) CHECK(ideal_contains(g, f, order));
    for (std::size_t i = 0; i < g.size(); ++i)
      for (std::size_t j = i + 1; j < g.size(); ++j)
        CHECK(reduce_primitive(s_poly(g[i], g[j], order), g, order).is_zero());
  }
}

TEST_CASE("property: squarefree invariants") {
  Rng rng(5);
  for (int k = 0; k < 40; ++k) {
    auto a = random_poly(rng, 2, 2, 3, 4);
    auto b = random_poly(rng, 2, 2, 3, 4);
    if (a.is_zero() || b.is_zero()) continue;
    auto f = a * a * b;
    auto factors = squarefree_factors(f);
    MultiPoly prod = MultiPoly::constant(2, 1);
    for (auto& [p, m] : factors) prod *= p.pow(m);
    CHECK(prod.primitive() == f.primitive());
    for (std::size_t i = 0; i < factors.size(); ++i) {
      for (std::size_t j = i + 1; j < factors.size(); ++j)
        CHECK(gcd(factors[i].first, factors[j].first).is_constant());
      for (std::size_t v = 0; v < 2; ++v) {
        auto d = factors[i].first.derivative(v);
        if (!d.is_zero()) CHECK(gcd(factors[i].first, d).is_constant());
      }
    }
  }
}

TEST_CASE("property: rational function normal form") {
  Rng rng(9);
  for (int k = 0; k < 60; ++k) {
    auto a = random_poly(rng, 2, 2, 3, 4);
    auto b = random_poly(rng, 2, 2, 3, 4);
    auto c = random_poly(rng, 2, 2, 3, 4);
    if (b.is_zero() || c.is_zero()) continue;
    RationalFunction f(a, b);
    RationalFunction g(a * c * Rational(-3, 7), b * c * Rational(-3, 7));
    CHECK(f == g);
    CHECK(f.numerator() == g.numerator());
    CHECK(f.denominator() == g.denominator());
    CHECK((f + RationalFunction(c)) - RationalFunction(c) == f);
    if (!a.is_zero()) CHECK(f * RationalFunction(b, a) == RationalFunction::constant(2, 1));
  }
}
