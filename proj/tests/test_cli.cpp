#include "doctest.h"

#include <cstdlib>
#include <sstream>

#include "dreg/cli.hpp"
#include "dreg/errors.hpp"
#include "dreg/report.hpp"
#include "support.hpp"

using namespace dreg;
using dreg::test::op;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "dreg");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = run_command(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("parse_ideal examples") {
  auto pf = parse_ideal("vars 3; dx2^2 - dx1*dx3; x1*dx1 + x2*dx2 + x3*dx3 - 1/4;");
  CHECK(pf.nvars == 3);
  CHECK(pf.generators.size() == 2);

  pf = parse_ideal("vars 1; dx1*x1;");
  REQUIRE(pf.generators.size() == 1);
  CHECK(pf.generators[0] == op("x1*dx1 + 1", 1));

  try {
    parse_ideal("vars 2; dx3;");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("variable index out of range") != std::string::npos);
    CHECK(e.line() == 1);
  }
  CHECK_THROWS_AS(parse_ideal("vars 2; x0;"), ParseError);
  CHECK_THROWS_AS(parse_ideal("dx1; vars 1;"), ParseError);
  CHECK_THROWS_AS(parse_ideal("vars 1; x1 dx1;"), ParseError);
  CHECK_THROWS_AS(parse_ideal("vars 1;\n x1 + ;"), ParseError);
  CHECK_THROWS_AS(parse_ideal("vars 1;"), UsageError);
}

TEST_CASE("parser grammar") {
  CHECK(parse_operator("-x1^2*dx1", 1) == op("(-1)*x1^2*dx1", 1));
  CHECK(parse_operator("2*3^2", 1) == op("18", 1));
  CHECK(parse_operator("(x1 + 1)*(x1 - 1)", 1) == op("x1^2 - 1", 1));
  CHECK(parse_operator("dx1*dx2*x1*x2", 2) == op("x1*x2*dx1*dx2 + x1*dx1 + x2*dx2 + 1", 2));
  CHECK_THROWS_AS(parse_polynomial("dx1", 1), UsageError);

  auto pf = parse_ideal(
      "# comment\nvars 2;\nx1*dx1 - 1; dx2;\ncomponent x1;\navoid x2 - 1;\npoint 0,3/2;\n"
      "weight 1,1;\ncharts 1,2;\nseed 9;\nheight 4;\npoints 2;\nbudget 1000;\n");
  CHECK(pf.components.size() == 1);
  CHECK(pf.avoid.size() == 1);
  CHECK(pf.points == std::vector<Point>{{0, Rational(3, 2)}});
  CHECK(pf.weights.size() == 1);
  CHECK(pf.charts == std::vector<std::size_t>{1, 2});
  CHECK(pf.seed == 9u);
  CHECK(pf.height_bound == 4);
  CHECK(pf.points_per_component == 2u);
  CHECK(pf.budget_ms == 1000);
}

TEST_CASE("property: print/parse round trip") {
  Rng rng(77);
  for (int k = 0; k < 60; ++k) {
    ProblemFile pf;
    pf.nvars = 2;
    for (int j = 0; j < 3; ++j) {
      auto g = test::random_operator(rng, 2, 3, 4, 9);
      if (!g.is_zero()) pf.generators.push_back(g);
    }
    if (pf.generators.empty()) continue;
    pf.components = {test::random_poly(rng, 2, 2, 3, 5)};
    if (pf.components[0].is_zero()) pf.components.clear();
    auto back = parse_ideal(print_problem(pf));
    CHECK(back.generators == pf.generators);
    CHECK(back.components == pf.components);
  }
}

TEST_CASE("emit_report examples") {
  Json doc = Json::parse(emit_report(RankResult::finite(1)));
  CHECK(doc["rank"] == 1);

  RegularityOptions opt;
  opt.check_infinity = true;
  auto rep32 = is_regular(test::corpus_ideal("gkz_regular.dreg"), opt);
  doc = Json::parse(emit_report(rep32));
  CHECK(doc["verdict"] == "REGULAR");
  CHECK(doc["divisor"].empty());

  auto rep33 = is_regular(test::corpus_ideal("gkz_irregular.dreg"), RegularityOptions{});
  doc = Json::parse(emit_report(rep33));
  CHECK(doc["verdict"] == "IRREGULAR");
  REQUIRE(doc["divisor"].size() == 1);
  CHECK(doc["divisor"][0] == Json{{"mult", 1}, {"poly", "x2"}});
  CHECK(to_json(Rational(-3, 6)) == "-1/2");
}

TEST_CASE("run_command exit codes") {
  auto r = run({"regular", test::corpus("gkz_irregular.dreg"), "--check-infinity", "--seed", "7"});
  CHECK(r.code == kExitIrregular);
  CHECK(Json::parse(r.out)["verdict"] == "IRREGULAR");

  r = run({"rank", test::corpus("gkz_regular.dreg")});
  CHECK(r.code == kExitOk);
  CHECK(Json::parse(r.out)["rank"] == 2);

  r = run({"init", test::corpus("gkz_regular.dreg"), "--point", "0,1,1", "--weight", "1,1,1"});
  CHECK(r.code == kExitOk);
  auto doc = Json::parse(r.out);
  std::vector<WeylElement> gens;
  for (const auto& g : doc["generators"]) gens.push_back(op(g.get<std::string>(), 3));
  DIdeal expected(3, {op("dx2", 3), op("dx3", 3), op("x1*dx1^2 + dx1", 3)});
  CHECK(DIdeal(3, gens).same_ideal(expected));

  r = run({"regular", test::corpus("gkz_regular.dreg"), "--check-infinity"});
  CHECK(r.code == kExitOk);
  r = run({"regular", test::corpus("log.dreg")});
  CHECK(r.code == kExitInconclusive);
  r = run({"regular", test::corpus("nonexistent.dreg")});
  CHECK(r.code == kExitUsage);
  r = run({"frobnicate", test::corpus("gkz_regular.dreg")});
  CHECK(r.code == kExitUsage);
  r = run({"init", test::corpus("gkz_regular.dreg"), "--point", "0,1"});
  CHECK(r.code == kExitUsage);
  r = run({"oracle", test::corpus("gkz_irregular.dreg"), "--point", "1,0,1", "--direction", "1,0,0",
           "--component", "x2"});
  CHECK(r.code == kExitOk);
  CHECK(Json::parse(r.out)["oracle"][0]["regular"].is_null());
  r = run({"oracle", test::corpus("exp_pole.dreg")});
  CHECK(r.code == kExitOk);
  CHECK(Json::parse(r.out)["oracle"][0]["regular"] == false);
}

TEST_CASE("reports are deterministic and independent of --jobs") {
  for (const char* name : {"exp_pole.dreg", "gkz_irregular.dreg"}) {
    auto a = run({"regular", test::corpus(name), "--check-infinity", "--seed", "3"});
    auto b = run({"regular", test::corpus(name), "--check-infinity", "--seed", "3"});
    auto c = run({"regular", test::corpus(name), "--check-infinity", "--seed", "3", "--jobs", "4"});
    CHECK(a.out == b.out);
    CHECK(a.out == c.out);
    auto d = run({"regular", test::corpus(name), "--check-infinity", "--seed", "4"});
    auto ja = Json::parse(a.out), jd = Json::parse(d.out);
    CHECK(ja["verdict"] == jd["verdict"]);
    CHECK(ja["divisor"] == jd["divisor"]);
  }
}

TEST_CASE("resource budget maps to exit 4") {
  auto r = run({"regular", test::corpus("gkz_regular.dreg"), "--check-infinity", "--budget-ms", "1"});
  unsetenv("DREG_BUDGET_MS");
  CHECK(r.code == kExitResource);
}
