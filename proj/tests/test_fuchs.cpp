#include "doctest.h"

#include "dreg/errors.hpp"
#include "dreg/fuchs.hpp"
#include "dreg/regularity.hpp"
#include "support.hpp"

using namespace dreg;
using dreg::test::op;
using dreg::test::poly;

namespace {

RationalFunction rf(std::string_view num, std::string_view den = "1") {
  return RationalFunction(poly(num, 1), poly(den, 1));
}

ScalarODEOperator scalar(std::string_view text) { return ScalarODEOperator::from_weyl(op(text, 1)); }

LineRestriction line_of(RationalMatrix a) {
  return LineRestriction{Point{0}, {1}, std::move(a)};
}

}  // namespace

TEST_CASE("fuchs_order_test examples") {
  CHECK(fuchs_order_test(scalar("x1*dx1^2 + dx1"), 0));
  CHECK_FALSE(fuchs_order_test(scalar("x1^2*dx1 + 1"), 0));
  CHECK(fuchs_order_test(scalar("dx1^2 + 1"), 0));
  CHECK(fuchs_order_test(scalar("x1^2*dx1 + 1"), 1));
  CHECK(order_at(poly("x1^3 - x1^2", 1), 0) == 2);
  CHECK(order_at(rf("x1 - 1", "x1^2"), 0) == -2);
}

TEST_CASE("gr_rank_1d examples") {
  auto r = gr_rank_1d(op("x1*dx1^2 + dx1", 1));
  CHECK(r.gr_rank == 2);
  CHECK(r.regular);
  r = gr_rank_1d(op("x1^2*dx1 + 1", 1));
  CHECK(r.gr_rank == 0);
  CHECK_FALSE(r.regular);
  r = gr_rank_1d(op("dx1", 1));
  CHECK(r.gr_rank == 1);
  CHECK(r.regular);
}

TEST_CASE("restrict_to_line examples") {
  auto pf = pfaffian_system(test::ideal("vars 2; dx1 - x2; dx2 - x1;"));
  auto line = restrict_to_line(pf, Point{0, 0}, {1, 1});
  REQUIRE(line.matrix.size() == 1);
  CHECK(line.matrix[0][0] == rf("2*x1"));

  pf = pfaffian_system(test::ideal("vars 1; dx1 - 1;"));
  line = restrict_to_line(pf, Point{0}, {1});
  CHECK(line.matrix[0][0] == rf("1"));

  pf = pfaffian_system(test::corpus_ideal("gkz_irregular.dreg"));
  line = restrict_to_line(pf, Point{1, 0, 1}, {0, 1, 0});
  REQUIRE(line.matrix.size() == 2);
  bool pole = false;
  for (const auto& row : line.matrix)
    for (const auto& e : row)
      if (!e.is_zero() && order_at(e, 0) < 0) pole = true;
  CHECK(pole);

  pf = pfaffian_system(test::ideal("vars 2; x1*dx1 - 1; dx2;"));
  CHECK_THROWS_AS(restrict_to_line(pf, Point{0, 0}, {0, 1}), MathError);
}

TEST_CASE("cyclic_vector_scalarize examples") {
  auto s = cyclic_vector_scalarize(line_of({{rf("x1^2 + 3")}}));
  CHECK(s.order() == 1);
  CHECK(s.cleared().to_weyl() == op("dx1 - x1^2 - 3", 1));

  s = cyclic_vector_scalarize(line_of({{rf("0"), rf("1")}, {rf("0"), rf("-1", "x1")}}));
  CHECK(s.order() == 2);
  CHECK(s.cleared().to_weyl() == op("x1*dx1^2 + dx1", 1));
  CHECK(fuchs_order_test(s, 0));

  s = cyclic_vector_scalarize(line_of({{rf("0"), rf("0")}, {rf("0"), rf("1", "x1^2")}}));
  CHECK(s.order() == 2);
  CHECK_FALSE(fuchs_order_test(s, 0));

  // a scalar system has no constant cyclic vector
  s = cyclic_vector_scalarize(line_of({{rf("1", "x1"), rf("0")}, {rf("0"), rf("1", "x1")}}));
  CHECK(s.order() == 2);
  CHECK(fuchs_order_test(s, 0));
}

TEST_CASE("line_regularity_oracle examples") {
  auto ex32 = test::corpus_ideal("gkz_regular.dreg");
  auto x1 = poly("x1", 3);
  CHECK(line_regularity_oracle(ex32, Point{0, 1, 1}, {1, 0, 0}, &x1).regular);

  auto ex33 = test::corpus_ideal("gkz_irregular.dreg");
  auto x2 = poly("x2", 3);
  CHECK_FALSE(line_regularity_oracle(ex33, Point{1, 0, 1}, {0, 1, 0}, &x2).regular);
  CHECK_THROWS_AS(line_regularity_oracle(ex33, Point{1, 0, 1}, {1, 0, 0}, &x2), MathError);

  auto ex31 = test::corpus_ideal("exp_pole.dreg");
  CHECK_FALSE(line_regularity_oracle(ex31, Point{0, 1}, {1, 0}).regular);
}

TEST_CASE("property: scaling the direction preserves the verdict") {
  auto pf = pfaffian_system(test::corpus_ideal("gkz_irregular.dreg"));
  for (Rational c : {Rational(2), Rational(-1, 3), Rational(7, 5)}) {
    auto a = cyclic_vector_scalarize(restrict_to_line(pf, Point{1, 0, 1}, {0, 1, 0}));
    auto b = cyclic_vector_scalarize(restrict_to_line(pf, Point{1, 0, 1}, {0, c, 0}));
    CHECK(fuchs_order_test(a, 0) == fuchs_order_test(b, 0));
    CHECK(a.order() == 2);
    CHECK(b.order() == 2);
  }
}

TEST_CASE("property: fuchs test agrees with the gr-rank criterion") {
  Rng rng(101);
  int tested = 0;
  while (tested < 100) {
    std::vector<WeylElement::Term> terms;
    int r = static_cast<int>(rng.integer(1, 3));
    for (int i = 0; i <= r; ++i)
      for (int j = 0; j <= 3; ++j)
        if (rng.integer(0, 2) > 0) terms.push_back({{j, i}, rng.rational(5)});
    auto p = WeylElement::from_terms(1, terms);
    if (p.is_zero() || p.order() == 0) continue;
    ++tested;
    CHECK(fuchs_order_test(ScalarODEOperator::from_weyl(p), 0) == gr_rank_1d(p).regular);
  }
}
