#include "dreg/cli.hpp"

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <map>

#include "CLI11.hpp"
#include "dreg/parser.hpp"
#include "dreg/factor.hpp"
#include "dreg/random.hpp"
#include "dreg/report.hpp"

namespace dreg {

namespace {

struct CommandLine {
  std::string command;
  std::string file;
  std::string out;
  std::uint64_t seed = 0;
  std::int64_t height = 5;
  std::size_t points_per_component = 3;
  bool check_infinity = false;
  std::string charts;
  bool cross_check = false;
  int jobs = 1;
  bool timing = false;
  std::int64_t budget_ms = 0;
  std::string point;
  std::string weight;
  std::string direction;
  std::string component;
  std::map<std::string, bool> given;
};

std::vector<std::size_t> parse_charts(const std::string& text) {
  std::vector<std::size_t> out;
  for (const auto& r : parse_rational_list(text)) {
    if (r.get_den() != 1 || r < 1) throw UsageError("chart indices are positive integers");
    out.push_back(r.get_num().get_ui());
  }
  return out;
}

RegularityOptions build_options(const ProblemFile& pf, const CommandLine& cl) {
  RegularityOptions o;
  o.seed = cl.given.at("seed") ? cl.seed : pf.seed.value_or(0);
  o.height_bound = cl.given.at("height") ? cl.height : pf.height_bound.value_or(5);
  o.points_per_component =
      cl.given.at("ppc") ? cl.points_per_component : pf.points_per_component.value_or(3);
  if (o.height_bound < 1) throw UsageError("height bound must be positive");
  if (o.points_per_component < 1) throw UsageError("points per component must be positive");
  o.check_infinity = cl.check_infinity;
  o.charts = cl.given.at("charts") ? parse_charts(cl.charts) : pf.charts;
  for (auto k : o.charts)
    if (k > pf.nvars) throw UsageError("chart index out of range");
  o.components = pf.components;
  o.avoid = pf.avoid;
  o.points = pf.points;
  o.jobs = cl.jobs;
  o.cross_check = cl.cross_check;
  return o;
}

Point vector_option(const std::string& text, std::size_t n, const char* what) {
  Point p = parse_rational_list(text);
  if (p.size() != n) throw UsageError(std::string(what) + " needs one entry per variable");
  return p;
}

Json options_json(const RegularityOptions& o) {
  return {{"seed", o.seed},
          {"heightBound", o.height_bound},
          {"pointsPerComponent", o.points_per_component},
          {"checkInfinity", o.check_infinity},
          {"crossCheck", o.cross_check}};
}

Json weight_ranks(const DIdeal& ideal, const std::vector<WeightVector>& weights) {
  Json a = Json::array();
  for (const auto& w : weights)
    a.push_back({{"weight", to_json(w)}, {"rank", to_json(holonomic_rank(initial_ideal(ideal, w)))}});
  return a;
}

std::vector<MultiPoly> components_for(const ProblemFile& pf, const SingularLocus& locus) {
  if (pf.components.empty()) return locus.codim1;
  std::vector<MultiPoly> out;
  for (const auto& c : pf.components)
    for (auto& [f, m] : squarefree_factors(c))
      if (std::find(out.begin(), out.end(), f) == out.end()) out.push_back(f);
  return out;
}

Json oracle_entry(const PfaffianSystem& sys, const MultiPoly* f, const Point& p,
                  const std::vector<Rational>& v, std::uint64_t seed) {
  Json e;
  e["component"] = f ? f->to_string() : std::string();
  e["point"] = to_json(p);
  try {
    auto r = line_regularity_oracle(sys, p, v, f, seed);
    e["direction"] = to_json(r.direction);
    e["regular"] = r.regular;
    e["scalarOperator"] = r.scalar.to_string();
  } catch (const MathError& err) {
    e["direction"] = to_json(v);
    e["regular"] = nullptr;
    e["error"] = err.code() + ": " + err.what();
  }
  return e;
}

int execute(const CommandLine& cl, Json& doc) {
  ProblemFile pf = parse_problem_file(cl.file);
  if (cl.given.at("budget"))
    setenv("DREG_BUDGET_MS", std::to_string(cl.budget_ms).c_str(), 1);
  else if (pf.budget_ms && !std::getenv("DREG_BUDGET_MS"))
    setenv("DREG_BUDGET_MS", std::to_string(*pf.budget_ms).c_str(), 1);
  const std::size_t n = pf.nvars;
  DIdeal ideal = pf.ideal();
  const std::string& cmd = cl.command;

  if (cmd == "rank") {
    doc["rank"] = to_json(holonomic_rank(ideal));
    return kExitOk;
  }
  if (cmd == "init") {
    Point p = cl.given.at("point") ? vector_option(cl.point, n, "--point")
              : pf.points.empty()  ? Point(n, Rational(0))
                                   : pf.points.front();
    WeightVector w = cl.given.at("weight") ? vector_option(cl.weight, n, "--weight")
                     : pf.weights.empty()  ? WeightVector(n, Rational(1))
                                           : pf.weights.front();
    DIdeal in = initial_ideal(translate(ideal, p), w);
    DIdeal reduced(n, in.reduced_basis());
    Json gens = Json::array();
    for (const auto& g : reduced.generators()) gens.push_back(g.to_string());
    doc["point"] = to_json(p);
    doc["weight"] = to_json(w);
    doc["generators"] = gens;
    doc["rank"] = to_json(holonomic_rank(reduced));
    return kExitOk;
  }
  if (cmd == "sing") {
    SingularLocus s = singular_locus(ideal);
    doc = to_json(s);
    doc["projected"] = to_json(s.projected.generators);
    return kExitOk;
  }
  RegularityOptions opts = build_options(pf, cl);
  if (cmd == "support") {
    auto records = irregular_support(ideal, opts);
    Json recs = Json::array(), support = Json::array();
    for (const auto& r : records) {
      recs.push_back(to_json(r));
      if (r.status == RecordStatus::Stable && r.irr_mult > 0) support.push_back(r.label);
    }
    doc["rank"] = to_json(holonomic_rank(ideal));
    doc["records"] = recs;
    doc["support"] = support;
    doc["options"] = options_json(opts);
    return kExitOk;
  }
  if (cmd == "irrdiv" || cmd == "regular") {
    RegularityReport rep = is_regular(ideal, opts);
    if (cmd == "irrdiv") {
      doc["divisor"] = to_json(rep.divisor);
      Json recs = Json::array();
      for (const auto& r : rep.records) recs.push_back(to_json(r));
      doc["records"] = recs;
      doc["caveats"] = rep.caveats;
      doc["options"] = options_json(opts);
      return kExitOk;
    }
    doc = to_json(rep);
    doc["options"] = options_json(opts);
    if (!pf.weights.empty()) doc["weightRanks"] = weight_ranks(ideal, pf.weights);
    switch (rep.verdict) {
      case Verdict::Regular: return kExitOk;
      case Verdict::Irregular: return kExitIrregular;
      case Verdict::Inconclusive: return kExitInconclusive;
    }
  }
  if (cmd == "oracle") {
    PfaffianSystem sys = pfaffian_system(ideal);
    SingularLocus locus = singular_locus(ideal);
    std::vector<MultiPoly> comps = components_for(pf, locus);
    std::vector<MultiPoly> strata = pf.avoid;
    for (const auto& h : locus.deeper_strata) strata.push_back(h);
    std::optional<MultiPoly> chosen;
    if (cl.given.at("component")) chosen = parse_polynomial(cl.component, n);
    Json entries = Json::array();
    if (cl.given.at("point")) {
      Point p = vector_option(cl.point, n, "--point");
      const MultiPoly* f = chosen ? &*chosen : nullptr;
      for (const auto& c : comps)
        if (!f && c.evaluate(p) == 0) f = &c;
      std::vector<Rational> v;
      if (cl.given.at("direction")) {
        v = vector_option(cl.direction, n, "--direction");
      } else {
        if (!f) throw UsageError("no component through the point; give --direction or --component");
        for (std::size_t i = 0; i < n; ++i) v.push_back(f->derivative(i).evaluate(p));
      }
      entries.push_back(oracle_entry(sys, f, p, v, opts.seed));
    } else {
      if (chosen) comps = {*chosen};
      for (std::size_t j = 0; j < comps.size(); ++j) {
        const MultiPoly& f = comps[j];
        Json e;
        try {
          Point p = generic_point(f, avoidance_for(f, comps, strata),
                                  derive_seed(opts.seed, {0, j, 0}), opts.height_bound);
          std::vector<Rational> v;
          for (std::size_t i = 0; i < n; ++i) v.push_back(f.derivative(i).evaluate(p));
          e = oracle_entry(sys, &f, p, v, opts.seed);
        } catch (const MathError& err) {
          e = {{"component", f.to_string()}, {"regular", nullptr},
               {"error", err.code() + ": " + err.what()}};
        }
        entries.push_back(e);
      }
    }
    doc["rank"] = sys.rank;
    doc["oracle"] = entries;
    return kExitOk;
  }
  throw UsageError("unknown command '" + cmd + "'");
}

}  // namespace

int run_command(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Regularity of holonomic D-modules presented by Weyl-algebra ideals"};
  app.require_subcommand(1);
  CommandLine cl;
  const std::vector<std::pair<std::string, std::string>> commands = {
      {"rank", "holonomic rank over Q(x)"},
      {"init", "initial ideal at a point for a weight"},
      {"sing", "singular locus"},
      {"support", "support of the irregularity complex in the affine chart"},
      {"irrdiv", "irregularity divisor"},
      {"regular", "regularity verdict"},
      {"oracle", "line-restriction oracle"},
  };
  std::vector<std::pair<std::string, CLI::Option*>> tracked;
  for (const auto& [name, desc] : commands) {
    CLI::App* sub = app.add_subcommand(name, desc);
    sub->add_option("file", cl.file, ".dreg problem file")->required();
    sub->add_option("--out", cl.out, "write the report to this file");
    sub->add_flag("--timing", cl.timing, "add wall-clock timing to the report");
    tracked.emplace_back("budget", sub->add_option("--budget-ms", cl.budget_ms,
                                                   "wall-clock cap per Groebner computation"));
    tracked.emplace_back("seed", sub->add_option("--seed", cl.seed, "sampling seed"));
    tracked.emplace_back("height", sub->add_option("--height-bound", cl.height,
                                                   "initial height of sampled rationals"));
    tracked.emplace_back("ppc", sub->add_option("--points-per-component", cl.points_per_component,
                                                "generic points per component"));
    tracked.emplace_back("charts", sub->add_option("--charts", cl.charts,
                                                   "charts of P^n at infinity, e.g. 1,3"));
    sub->add_flag("--check-infinity", cl.check_infinity, "inspect the hyperplane at infinity");
    sub->add_flag("--cross-check", cl.cross_check, "append line-oracle verdicts");
    sub->add_option("--jobs", cl.jobs, "worker threads for component records")
        ->check(CLI::PositiveNumber);
    tracked.emplace_back("point", sub->add_option("--point", cl.point, "point a,b,..."));
    tracked.emplace_back("weight", sub->add_option("--weight", cl.weight, "weight w1,w2,..."));
    tracked.emplace_back("direction", sub->add_option("--direction", cl.direction,
                                                      "line direction for the oracle"));
    tracked.emplace_back("component", sub->add_option("--component", cl.component,
                                                      "component polynomial for the oracle"));
  }
  try {
    app.parse(argc, const_cast<char**>(argv));
  } catch (const CLI::Success& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  for (const auto* sub : app.get_subcommands()) cl.command = sub->get_name();
  for (const auto& [key, opt] : tracked) cl.given[key] = cl.given[key] || opt->count() > 0;

  const auto start = std::chrono::steady_clock::now();
  Json doc = Json::object();
  int code = kExitOk;
  try {
    code = execute(cl, doc);
  } catch (const ResourceError& e) {
    err << "resource limit: " << e.what() << "\n";
    return kExitResource;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const MathError& e) {
    err << "error " << e.code() << ": " << e.what() << "\n";
    return kExitInconclusive;
  } catch (const std::bad_alloc&) {
    err << "resource limit: out of memory\n";
    return kExitResource;
  }
  doc["command"] = cl.command;
  if (cl.timing) {
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - start)
                  .count();
    doc["timing"] = {{"wallMs", ms}};
  }
  const char* budget = std::getenv("DREG_BUDGET_MS");
  doc["budgetMs"] = budget ? Json(std::atoll(budget)) : Json(nullptr);
  std::string text = emit(doc);
  if (cl.out.empty()) {
    out << text;
  } else {
    std::ofstream f(cl.out);
    if (!(f << text)) {
      err << "error: cannot write '" << cl.out << "'\n";
      return kExitUsage;
    }
  }
  return code;
}

}  // namespace dreg
