// Acceptance run: one PASS/FAIL line per criterion. Criteria listed in
// kKnownDivergences are expected to fail for the documented reason; the
// binary exits nonzero on any other failure, and also when a known
// divergence unexpectedly passes (the list is then stale).
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "dreg/cli.hpp"
#include "dreg/commutative.hpp"
#include "dreg/errors.hpp"
#include "dreg/fuchs.hpp"
#include "dreg/regularity.hpp"
#include "dreg/report.hpp"
#include "support.hpp"

using namespace dreg;
using dreg::test::op;
using dreg::test::poly;

namespace {

struct Outcome {
  bool pass = true;
  std::vector<std::string> failures;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      failures.push_back(what);
    }
  }
};

struct Criterion {
  int id;
  std::string title;
  double limit_s;
  std::function<void(Outcome&)> body;
};

// The gr-rank at the hyperplane at infinity of the irregular GKZ system is 1
// in every standard chart of P^3: solutions are x1^a x3^b g(x2/(x1 x3)) with g
// irregular at 0, and every line to infinity drives x2/(x1 x3) to 0.
// Criterion id -> marker every expected failure message carries.
const std::map<int, std::string> kKnownDivergences = {{2, "H_inf"}};

std::string show(const std::vector<std::size_t>& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + "]";
}

const ComponentRecord* record(const RegularityReport& rep, std::size_t chart,
                              const std::string& label) {
  for (const auto& r : rep.records)
    if (r.chart == chart && r.label == label) return &r;
  return nullptr;
}

// gr-ranks of a record, required to be stable and equal to `expected`.
void expect_gr(Outcome& o, const ComponentRecord* r, std::size_t expected, const std::string& what) {
  if (!r) {
    o.require(false, what + ": no record");
    return;
  }
  bool ok = r->status == RecordStatus::Stable && !r->gr_ranks.empty();
  for (auto g : r->gr_ranks) ok = ok && g == expected;
  o.require(ok, what + ": gr-ranks " + show(r->gr_ranks) + ", expected " +
                    std::to_string(expected));
}

RegularityOptions infinity_options(std::uint64_t seed = 0) {
  RegularityOptions opt;
  opt.check_infinity = true;
  opt.seed = seed;
  return opt;
}

bool divisor_is(const Divisor& d, const MultiPoly& f, std::size_t mult) {
  return d.entries.size() == 1 && d.entries[0].poly == f && d.entries[0].mult == mult;
}

void criterion_gkz_regular(Outcome& o) {
  auto ideal = test::corpus_ideal("gkz_regular.dreg");
  o.require(holonomic_rank(ideal) == RankResult::finite(2), "rank is not 2");
  auto init = initial_ideal(translate(ideal, Point{0, 1, 1}), {1, 1, 1});
  DIdeal expected(3, {op("dx2", 3), op("dx3", 3), op("x1*dx1^2 + dx1", 3)});
  o.require(init.same_ideal(expected), "initial ideal at (0,1,1) differs");
  auto rep = is_regular(ideal, infinity_options());
  for (const char* c : {"x1", "x3", "x2^2 - 4*x1*x3"}) {
    auto label = poly(c, 3).to_string();
    expect_gr(o, record(rep, 0, label), 2, label);
  }
  for (std::size_t k = 1; k <= 3; ++k)
    expect_gr(o, record(rep, k, "H_inf"), 2, "H_inf chart " + std::to_string(k));
  o.require(rep.verdict == Verdict::Regular, "verdict " + to_string(rep.verdict));
}

void criterion_gkz_irregular(Outcome& o) {
  auto ideal = test::corpus_ideal("gkz_irregular.dreg");
  o.require(holonomic_rank(ideal) == RankResult::finite(2), "rank is not 2");
  auto rep = is_regular(ideal, infinity_options());
  expect_gr(o, record(rep, 0, "x2"), 1, "x2");
  expect_gr(o, record(rep, 0, "x1"), 2, "x1");
  expect_gr(o, record(rep, 0, "x3"), 2, "x3");
  for (std::size_t k = 1; k <= 3; ++k)
    expect_gr(o, record(rep, k, "H_inf"), 2, "H_inf chart " + std::to_string(k));
  auto support = irregular_support(ideal, RegularityOptions{});
  std::vector<std::string> labels;
  for (const auto& r : support)
    if (r.status == RecordStatus::Stable && r.irr_mult > 0) labels.push_back(r.label);
  o.require(labels == std::vector<std::string>{"x2"}, "support is not {V(x2)}");
  o.require(divisor_is(irregularity_divisor(ideal, RegularityOptions{}), poly("x2", 3), 1),
            "affine divisor is not 1*V(x2)");
  o.require(rep.verdict == Verdict::Irregular, "verdict " + to_string(rep.verdict));
}

void criterion_exp_pole(Outcome& o) {
  auto ideal = test::corpus_ideal("exp_pole.dreg");
  o.require(holonomic_rank(ideal) == RankResult::finite(1), "rank is not 1");
  auto recs = irregular_support(ideal, RegularityOptions{});
  o.require(recs.size() == 1 && recs[0].label == "x1", "components are not {V(x1)}");
  if (!recs.empty()) {
    bool zero = recs[0].status == RecordStatus::Stable;
    for (auto g : recs[0].gr_ranks) zero = zero && g == 0;
    o.require(zero, "gr-rank on V(x1) is not 0: " + show(recs[0].gr_ranks));
  }
  o.require(divisor_is(irregularity_divisor(ideal, RegularityOptions{}), poly("x1", 2), 1),
            "divisor is not 1*V(x1)");
}

void criterion_fuchs_equivalence(Outcome& o) {
  Rng rng(derive_seed(0, {4}));
  int tested = 0, disagreements = 0;
  while (tested < 300) {
    std::vector<WeylElement::Term> terms;
    for (int i = 0; i <= 3; ++i)
      for (int j = 0; j <= 3; ++j)
        if (rng.integer(0, 2) == 0) terms.push_back({{j, i}, rng.rational(5)});
    auto p = WeylElement::from_terms(1, terms);
    if (p.is_zero()) continue;
    ++tested;
    bool fuchs = fuchs_order_test(ScalarODEOperator::from_weyl(p), 0);
    if (fuchs != gr_rank_1d(p).regular) {
      ++disagreements;
      if (disagreements <= 3) o.require(false, "disagreement on " + p.to_string());
    }
  }
  o.require(disagreements == 0, std::to_string(disagreements) + " of " +
                                    std::to_string(tested) + " operators disagree");
}

const std::vector<std::string> kCorpus = {"exp_pole.dreg", "gkz_regular.dreg",
                                          "gkz_irregular.dreg", "euler.dreg", "log.dreg",
                                          "irregular1d.dreg"};

void sample_agreement(Outcome& o, const DIdeal& ideal, const std::string& what,
                      const MultiPoly& f, const std::vector<MultiPoly>& avoid, std::uint64_t tag) {
  std::vector<std::size_t> ranks;
  std::set<Point> points;
  for (std::uint64_t s = 1; s <= 3; ++s) {
    auto p = generic_point(f, avoid, derive_seed(1000 + s, {tag}));
    points.insert(p);
    ranks.push_back(gr_rank_at_point(ideal, p));
  }
  bool agree = std::all_of(ranks.begin(), ranks.end(), [&](std::size_t r) { return r == ranks[0]; });
  o.require(agree, what + ": " + show(ranks));
  // on the line a component is a single point
  if (ideal.nvars() > 1) o.require(points.size() == 3, what + ": repeated sample point");
}

void criterion_point_independence(Outcome& o) {
  for (const auto& name : kCorpus) {
    auto ideal = test::corpus_ideal(name);
    auto locus = singular_locus(ideal);
    for (std::size_t j = 0; j < locus.codim1.size(); ++j) {
      const auto& f = locus.codim1[j];
      sample_agreement(o, ideal, name + " " + f.to_string(), f,
                       avoidance_for(f, locus.codim1, locus.deeper_strata), j);
    }
    for (std::size_t k = 1; k <= ideal.nvars(); ++k) {
      auto chart = chart_pullback(ideal, k);
      auto cl = singular_locus(chart);
      auto h = MultiPoly::variable(ideal.nvars(), k - 1);
      auto comps = cl.codim1;
      if (std::find(comps.begin(), comps.end(), h) == comps.end()) comps.push_back(h);
      sample_agreement(o, chart, name + " H_inf chart " + std::to_string(k), h,
                       avoidance_for(h, comps, cl.deeper_strata), 100 + k);
    }
  }
}

void criterion_oracle_agreement(Outcome& o) {
  for (const auto& name : kCorpus) {
    auto opt = infinity_options();
    opt.cross_check = true;
    auto rep = is_regular(test::corpus_ideal(name), opt);
    for (const auto& r : rep.records) {
      std::string what = name + " " + r.label + " chart " + std::to_string(r.chart);
      if (!r.oracle_regular) {
        o.require(false, what + ": no oracle verdict (" + r.oracle_note + ")");
        continue;
      }
      o.require(*r.oracle_regular == (r.irr_mult == 0), what + ": oracle disagrees");
    }
  }
}

MultiPoly s_poly(const MultiPoly& f, const MultiPoly& g, const MonomialOrder& order) {
  auto ef = leading_exponent(f, order), eg = leading_exponent(g, order);
  Exponents uf(ef.size()), ug(eg.size());
  for (std::size_t i = 0; i < ef.size(); ++i) {
    int l = std::max(ef[i], eg[i]);
    uf[i] = l - ef[i];
    ug[i] = l - eg[i];
  }
  auto lc = [](const MultiPoly& p, const Exponents& e) {
    for (const auto& t : p.terms())
      if (t.exp == e) return t.coef;
    return Rational(0);
  };
  return f.shift_monomial(uf) * lc(g, eg) - g.shift_monomial(ug) * lc(f, ef);
}

// Under degrevlex on (x, dx) the Weyl product of monomials has the
// commutative product as leading term, so the S-pair is formed by left
// multiplication with monomial operators.
WeylElement weyl_s_poly(const WeylElement& f, const WeylElement& g) {
  const auto& tf = f.terms().front();
  const auto& tg = g.terms().front();
  Exponents uf(tf.exp.size()), ug(tg.exp.size());
  for (std::size_t i = 0; i < uf.size(); ++i) {
    int l = std::max(tf.exp[i], tg.exp[i]);
    uf[i] = l - tf.exp[i];
    ug[i] = l - tg.exp[i];
  }
  auto mf = WeylElement::monomial(f.nvars(), uf, tg.coef);
  auto mg = WeylElement::monomial(g.nvars(), ug, tf.coef);
  return mf * f - mg * g;
}

int min_x_degree(const WeylElement& p, std::size_t var) {
  int m = 1 << 30;
  for (const auto& t : p.terms()) m = std::min(m, t.exp[var]);
  return m;
}

void criterion_kernel_properties(Outcome& o) {
  Rng rng(derive_seed(0, {7}));
  const std::vector<WeightVector> weights = {{1, 1}, {2, Rational(-1, 2)}, {0, 3}};
  int pairs = 0, bad = 0;
  while (pairs < 500) {
    auto p = test::random_operator(rng, 2, 2, 3, 5);
    auto q = test::random_operator(rng, 2, 2, 3, 5);
    if (p.is_zero() || q.is_zero()) continue;
    ++pairs;
    auto pq = p * q;
    for (const auto& w : weights) {
      auto a = weight_data(p, w), b = weight_data(q, w), c = weight_data(pq, w);
      if (c.order != a.order + b.order ||
          c.initial != weight_data(a.initial * b.initial, w).initial)
        ++bad;
    }
  }
  o.require(bad == 0, std::to_string(bad) + " symbol multiplicativity failures");

  int comm_bad = 0;
  for (int k = 0; k < 100; ++k) {
    std::size_t n = 2 + k % 2;
    auto order = k % 3 == 0 ? MonomialOrder::lex(n) : MonomialOrder::degrevlex(n);
    std::vector<MultiPoly> gens;
    for (int j = 0; j < 3; ++j) gens.push_back(test::random_poly(rng, n, 2, 3, 3));
    auto g = groebner_commutative(gens, order);
    for (const auto& f : gens)
      if (!ideal_contains(g, f, order)) ++comm_bad;
    for (std::size_t i = 0; i < g.size(); ++i)
      for (std::size_t j = i + 1; j < g.size(); ++j)
        if (!reduce_primitive(s_poly(g[i], g[j], order), g, order).is_zero()) ++comm_bad;
  }
  o.require(comm_bad == 0, std::to_string(comm_bad) + " commutative Groebner failures");

  int weyl_bad = 0, weyl_cases = 0;
  auto spec = WeylOrderSpec::degrevlex(2);
  while (weyl_cases < 100) {
    std::vector<WeylElement> gens;
    for (int j = 0; j < 2; ++j) {
      auto g = test::random_operator(rng, 2, 1, 3, 3);
      if (!g.is_zero()) gens.push_back(g);
    }
    if (gens.empty()) continue;
    ++weyl_cases;
    DIdeal ideal(2, gens);
    auto basis = *ideal.groebner_basis(spec);
    for (const auto& g : gens)
      if (!weyl_reduce(g, basis, spec).is_zero()) ++weyl_bad;
    for (std::size_t i = 0; i < basis.size(); ++i)
      for (std::size_t j = i + 1; j < basis.size(); ++j)
        if (!weyl_reduce(weyl_s_poly(basis[i], basis[j]), basis, spec).is_zero()) ++weyl_bad;
  }
  o.require(weyl_bad == 0, std::to_string(weyl_bad) + " Weyl Groebner failures");

  int systems = 0;
  for (const auto& name : kCorpus) {
    auto ideal = test::corpus_ideal(name);
    std::vector<DIdeal> variants{ideal, translate(ideal, Point(ideal.nvars(), Rational(1, 3)))};
    for (std::size_t k = 1; k <= ideal.nvars(); ++k) variants.push_back(chart_pullback(ideal, k));
    for (const auto& v : variants) {
      auto pf = pfaffian_system(v);
      ++systems;
      o.require(pf.is_integrable(), name + ": Pfaffian system not integrable");
    }
  }
  o.require(systems > 0, "no Pfaffian systems constructed");

  int involution_bad = 0;
  for (int k = 0; k < 100; ++k) {
    std::size_t n = 1 + k % 3;
    auto p = test::random_operator(rng, n, 2, 3, 5);
    if (p.is_zero()) continue;
    Point pt(n), neg(n);
    for (std::size_t i = 0; i < n; ++i) {
      pt[i] = rng.rational(5);
      neg[i] = -pt[i];
    }
    if (apply_affine_substitution(apply_affine_substitution(p, pt), neg) != p) ++involution_bad;
    std::size_t chart = 1 + k % n;
    auto back = chart_pullback(chart_pullback(p, chart), chart);
    int shift = min_x_degree(back, chart - 1) - min_x_degree(p, chart - 1);
    Exponents e(2 * n, 0);
    e[chart - 1] = std::abs(shift);
    auto xk = WeylElement::monomial(n, e, 1);
    bool ok = shift >= 0 ? back.primitive() == (xk * p).primitive()
                         : (xk * back).primitive() == p.primitive();
    if (!ok) ++involution_bad;
  }
  o.require(involution_bad == 0, std::to_string(involution_bad) + " involution failures");
}

std::string run_regular(const std::string& file, const std::string& seed) {
  std::vector<std::string> args = {"dreg", "regular", file, "--check-infinity", "--seed", seed};
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  run_command(static_cast<int>(argv.size()), argv.data(), out, err);
  return out.str();
}

void criterion_determinism(Outcome& o) {
  for (const auto& name : kCorpus) {
    auto file = test::corpus(name);
    auto a = run_regular(file, "11"), b = run_regular(file, "11");
    o.require(!a.empty() && a == b, name + ": reports differ for the same seed");
    auto c = run_regular(file, "12");
    auto ja = Json::parse(a), jc = Json::parse(c);
    o.require(ja["verdict"] == jc["verdict"], name + ": verdict depends on the seed");
    o.require(ja["divisor"] == jc["divisor"], name + ": divisor depends on the seed");
  }
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "GKZ A=[[1,1,1],[0,1,2]], beta=(1/4,1/4): rank, initial ideal, gr-ranks, REGULAR", 60,
       criterion_gkz_regular},
      {2, "GKZ A=[[1,1,0],[0,1,1]]: rank, gr-ranks, support, divisor, IRREGULAR", 60,
       criterion_gkz_irregular},
      {3, "E^{1/x1} on the plane: rank 1, gr-rank 0 on V(x1), divisor 1*V(x1)", 10,
       criterion_exp_pole},
      {4, "Fuchs order test equals the gr-rank criterion on 300 random operators", 120,
       criterion_fuchs_equivalence},
      {5, "gr-rank agrees across 3 seeded points on every corpus component", 120,
       criterion_point_independence},
      {6, "line oracle agrees with irrMult on every corpus record", 120,
       criterion_oracle_agreement},
      {7, "kernel property suites", 600, criterion_kernel_properties},
      {8, "regular reports are byte-identical per seed, verdicts seed-independent", 600,
       criterion_determinism},
  };
  int unexpected = 0, passed = 0;
  for (const auto& c : criteria) {
    Outcome o;
    auto start = std::chrono::steady_clock::now();
    try {
      c.body(o);
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.1f s", secs);
    o.require(secs <= c.limit_s, "took " + std::string(buf) + ", limit " +
                                     std::to_string(static_cast<int>(c.limit_s)) + " s");
    auto it = kKnownDivergences.find(c.id);
    const bool known = it != kKnownDivergences.end();
    const bool only_known =
        known && !o.pass && std::all_of(o.failures.begin(), o.failures.end(), [&](const auto& f) {
          return f.find(it->second) != std::string::npos;
        });
    std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << c.id << ": " << c.title << " ("
              << buf << ")" << (only_known ? " [known divergence]" : "") << "\n";
    for (const auto& f : o.failures) std::cout << "    " << f << "\n";
    if (o.pass) ++passed;
    if (!o.pass && !only_known) ++unexpected;
    if (o.pass && known) ++unexpected;
    if (o.pass && known) std::cout << "    expected to fail; update kKnownDivergences\n";
  }
  std::cout << passed << "/" << criteria.size() << " criteria pass";
  if (!kKnownDivergences.empty()) std::cout << "; known divergences: " << kKnownDivergences.size();
  std::cout << "\n";
  return unexpected == 0 ? 0 : 1;
}
