#include "doctest.h"

#include "dreg/errors.hpp"
#include "dreg/rank.hpp"
#include "support.hpp"

using namespace dreg;
using dreg::test::op;
using dreg::test::poly;

namespace {

RationalFunction rf(std::string_view num, std::string_view den, std::size_t n) {
  return RationalFunction(poly(num, n), poly(den, n));
}

}  // namespace

TEST_CASE("rational_weyl_gb examples") {
  auto g = rational_weyl_gb(test::ideal("vars 1; x1*dx1 - 1;"));
  REQUIRE(g.size() == 1);
  CHECK(g[0].coefficient({1}) == RationalFunction::constant(1, 1));
  CHECK(g[0].coefficient({0}) == rf("-1", "x1", 1));

  g = rational_weyl_gb(test::ideal("vars 2; dx1; dx2;"));
  REQUIRE(g.size() == 2);
  CHECK(g[0] == RationalOperator::monomial(2, {0, 1}));
  CHECK(g[1] == RationalOperator::monomial(2, {1, 0}));

  auto std32 = standard_monomials(rational_weyl_gb(test::corpus_ideal("gkz_regular.dreg")), 3);
  REQUIRE(std32.has_value());
  CHECK(std32->size() == 2);
}

TEST_CASE("holonomic_rank examples") {
  CHECK(holonomic_rank(test::ideal("vars 3; dx1; dx2; dx3;")) == RankResult::finite(1));
  CHECK(holonomic_rank(test::ideal("vars 1; x1*dx1^2 + dx1;")) == RankResult::finite(2));
  CHECK(holonomic_rank(test::corpus_ideal("gkz_regular.dreg")) == RankResult::finite(2));
  CHECK(holonomic_rank(test::corpus_ideal("gkz_irregular.dreg")) == RankResult::finite(2));
  CHECK(holonomic_rank(test::corpus_ideal("exp_pole.dreg")) == RankResult::finite(1));
  CHECK(holonomic_rank(test::ideal("vars 2; dx1;")).infinite);
  CHECK(holonomic_rank(test::ideal("vars 1; x1*dx1 - x1;")) == RankResult::finite(1));
}

TEST_CASE("characteristic_ideal examples") {
  auto ch = characteristic_ideal(test::ideal("vars 2; dx1; dx2;"));
  CHECK(ch.nvars == 4);
  REQUIRE(ch.generators.size() == 2);
  auto order = MonomialOrder::degrevlex(4);
  CHECK(ideal_contains(ch.generators, poly("x3", 4), order));
  CHECK(ideal_contains(ch.generators, poly("x4", 4), order));

  ch = characteristic_ideal(test::ideal("vars 1; x1*dx1^2 + dx1;"));
  REQUIRE(ch.generators.size() == 1);
  CHECK(ch.generators[0] == poly("x1*x2^2", 2));
}

TEST_CASE("singular_locus examples") {
  auto s = singular_locus(test::ideal("vars 3; dx1; dx2; dx3;"));
  CHECK(s.codim1.empty());
  CHECK_FALSE(s.may_have_deeper_components);

  s = singular_locus(test::ideal("vars 1; x1*dx1^2 + dx1;"));
  REQUIRE(s.codim1.size() == 1);
  CHECK(s.codim1[0] == poly("x1", 1));
  CHECK_FALSE(s.may_have_deeper_components);

  s = singular_locus(test::corpus_ideal("gkz_regular.dreg"));
  CHECK(s.codim1 == std::vector<MultiPoly>{poly("x1", 3), poly("x3", 3),
                                           poly("x2^2 - 4*x1*x3", 3)});
  CHECK_FALSE(s.may_have_deeper_components);

  s = singular_locus(test::corpus_ideal("gkz_irregular.dreg"));
  CHECK(s.codim1 == std::vector<MultiPoly>{poly("x1", 3), poly("x2", 3), poly("x3", 3)});
  CHECK(s.may_have_deeper_components);
  // both V(x1,x2) and V(x2,x3) lie in the flagged strata
  for (const auto& p : {Point{0, 0, 5}, Point{5, 0, 0}}) {
    bool inside = true;
    for (const auto& h : s.deeper_strata) inside = inside && h.evaluate(p) == 0;
    CHECK(inside);
  }
}

TEST_CASE("singular locus is stable under translation round trips") {
  auto i = test::corpus_ideal("gkz_regular.dreg");
  Point p{Rational(1, 2), -2, 3}, q{Rational(-1, 2), 2, -3};
  auto back = translate(translate(i, p), q);
  CHECK(singular_locus(back).codim1 == singular_locus(i).codim1);
}

TEST_CASE("pfaffian_system examples") {
  auto pf = pfaffian_system(test::ideal("vars 1; dx1 - 1;"));
  CHECK(pf.rank == 1);
  CHECK(pf.matrices[0][0][0] == RationalFunction::constant(1, 1));

  pf = pfaffian_system(test::ideal("vars 2; dx1 - x2; dx2 - x1;"));
  CHECK(pf.rank == 1);
  CHECK(pf.matrices[0][0][0] == RationalFunction(poly("x2", 2)));
  CHECK(pf.matrices[1][0][0] == RationalFunction(poly("x1", 2)));
  CHECK(pf.is_integrable());

  pf = pfaffian_system(test::ideal("vars 1; x1*dx1^2 + dx1;"));
  REQUIRE(pf.rank == 2);
  CHECK(pf.basis == std::vector<Exponents>{{0}, {1}});
  const auto& a = pf.matrices[0];
  CHECK(a[0][0].is_zero());
  CHECK(a[0][1] == RationalFunction::constant(1, 1));
  CHECK(a[1][0].is_zero());
  CHECK(a[1][1] == rf("-1", "x1", 1));

  CHECK_THROWS_AS(pfaffian_system(test::ideal("vars 2; dx1;")), MathError);
}

TEST_CASE("property: corpus pfaffian systems are integrable") {
  for (const char* name : {"exp_pole.dreg", "gkz_regular.dreg", "gkz_irregular.dreg"})
    CHECK(pfaffian_system(test::corpus_ideal(name)).is_integrable());
}

TEST_CASE("integrability sign convention") {
  // A1 = [[0,1],[0,0]], A2 = [[0,x1],[0,1]]: d1 A2 = A1 A2 - A2 A1 = [[0,1],[0,0]]
  auto zero = RationalFunction::constant(2, 0), one = RationalFunction::constant(2, 1);
  PfaffianSystem pf;
  pf.nvars = 2;
  pf.rank = 2;
  pf.basis = {{0, 0}, {1, 0}};
  pf.matrices = {{{zero, one}, {zero, zero}}, {{zero, RationalFunction(poly("x1", 2))}, {zero, one}}};
  CHECK(pf.is_integrable());
  CHECK_FALSE(matrix_multiply(pf.matrices[0], pf.matrices[1]) ==
              matrix_multiply(pf.matrices[1], pf.matrices[0]));
  pf.matrices[1][0][1] = RationalFunction(poly("-x1", 2));
  CHECK_FALSE(pf.is_integrable());
}

TEST_CASE("property: rank of a scalar operator is its order") {
  Rng rng(41);
  for (int k = 0; k < 60; ++k) {
    auto p = test::random_operator(rng, 1, 3, 4, 5);
    if (p.is_zero()) continue;
    CHECK(holonomic_rank(DIdeal(1, {p})) == RankResult::finite(p.order()));
  }
}

TEST_CASE("property: rank of the w = 0 deformation") {
  for (const char* name : {"exp_pole.dreg", "gkz_regular.dreg", "gkz_irregular.dreg", "log.dreg"}) {
    auto i = test::corpus_ideal(name);
    auto zero = WeightVector(i.nvars(), 0);
    CHECK(holonomic_rank(initial_ideal(i, zero)) == holonomic_rank(i));
  }
}
