#include "dreg/regularity.hpp"

#include <algorithm>
#include <deque>
#include <exception>

#include "dreg/errors.hpp"
#include "dreg/factor.hpp"
#include "dreg/random.hpp"

namespace dreg {

namespace {

constexpr int kHeightRounds = 4;
constexpr int kAttemptsPerRound = 64;

bool avoids(const Point& p, const std::vector<MultiPoly>& avoid) {
  return std::all_of(avoid.begin(), avoid.end(),
                     [&](const MultiPoly& q) { return q.is_zero() || q.evaluate(p) != 0; });
}

std::vector<Rational> gradient_at(const MultiPoly& f, const Point& p) {
  std::vector<Rational> g;
  for (std::size_t i = 0; i < f.nvars(); ++i) g.push_back(f.derivative(i).evaluate(p));
  return g;
}

void cross_check(ComponentRecord& rec, const RecordTask& task, const RegularityOptions& options) {
  const Point& p = rec.points.front();
  std::vector<Rational> v = gradient_at(rec.component, p);
  std::uint64_t seed = derive_seed(options.seed, {task.chart, task.index, 0x07ac1eULL});
  try {
    LineOracleResult r =
        task.pfaffian ? line_regularity_oracle(*task.pfaffian, p, v, &rec.component, seed)
                      : line_regularity_oracle(*task.ideal, p, v, &rec.component, seed);
    rec.oracle_regular = r.regular;
    if ((r.regular ? 0u : 1u) != (rec.irr_mult > 0 ? 1u : 0u))
      rec.oracle_note = "line oracle disagrees with the gr-rank test";
  } catch (const MathError& e) {
    rec.oracle_note = e.code() + ": " + e.what();
  }
}

void add_unique(std::vector<MultiPoly>& list, const MultiPoly& f) {
  if (std::find(list.begin(), list.end(), f) == list.end()) list.push_back(f);
}

}  // namespace

Point generic_point(const MultiPoly& component, const std::vector<MultiPoly>& avoid,
                    std::uint64_t seed, std::int64_t height_bound) {
  if (component.is_zero()) throw UsageError("component polynomial must be nonzero");
  if (height_bound < 1) throw UsageError("height bound must be positive");
  const std::size_t n = component.nvars();
  std::vector<std::size_t> vars;
  for (std::size_t i = 0; i < n; ++i)
    if (component.involves(i)) vars.push_back(i);
  std::stable_sort(vars.begin(), vars.end(), [&](std::size_t a, std::size_t b) {
    return component.degree(a) < component.degree(b);
  });
  if (!vars.empty()) {
    for (int round = 0; round < kHeightRounds; ++round) {
      const std::int64_t height = height_bound << round;
      Rng rng(derive_seed(seed, {static_cast<std::uint64_t>(round)}));
      for (int attempt = 0; attempt < kAttemptsPerRound; ++attempt) {
        const std::size_t var = vars[static_cast<std::size_t>(attempt) % vars.size()];
        Point p(n, Rational(0));
        MultiPoly u = component;
        for (std::size_t i = 0; i < n; ++i) {
          if (i == var) continue;
          p[i] = rng.rational(height);
          if (u.involves(i)) u = u.substitute(i, p[i]);
        }
        if (u.is_zero()) {
          p[var] = rng.rational(height);
        } else {
          if (u.is_constant()) continue;
          std::vector<Rational> roots;
          try {
            roots = rational_roots(u);
          } catch (const ResourceError&) {
            continue;
          }
          if (roots.empty()) continue;
          p[var] = roots[static_cast<std::size_t>(
              rng.integer(0, static_cast<std::int64_t>(roots.size()) - 1))];
        }
        if (component.evaluate(p) == 0 && avoids(p, avoid)) return p;
      }
    }
  }
  throw MathError("NO_RATIONAL_POINT",
                  "no rational point found on " + component.to_string() +
                      " avoiding the other strata; supply a point explicitly");
}

std::size_t gr_rank_at_point(const DIdeal& ideal, const Point& p) {
  if (p.size() != ideal.nvars()) throw UsageError("point has the wrong number of coordinates");
  DIdeal centred = translate(ideal, p);
  RankResult r = holonomic_rank(initial_ideal(centred, WeightVector(ideal.nvars(), Rational(1))));
  if (r.infinite) throw MathError("INFINITE_GR_RANK", "initial ideal is not of finite rank");
  return r.value;
}

std::string to_string(RecordStatus s) {
  switch (s) {
    case RecordStatus::Stable: return "STABLE";
    case RecordStatus::Unstable: return "UNSTABLE";
    case RecordStatus::Unsampled: return "UNSAMPLED";
  }
  return "UNSAMPLED";
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Regular: return "REGULAR";
    case Verdict::Irregular: return "IRREGULAR";
    case Verdict::Inconclusive: return "INCONCLUSIVE";
  }
  return "INCONCLUSIVE";
}

std::vector<MultiPoly> avoidance_for(const MultiPoly& component,
                                     const std::vector<MultiPoly>& components,
                                     const std::vector<MultiPoly>& strata) {
  std::vector<MultiPoly> out;
  for (const auto& g : components)
    if (!(g == component)) add_unique(out, g);
  for (const auto& h : strata) {
    if (h.is_zero() || h.is_constant()) continue;
    if (exact_divide(h, component)) continue;
    add_unique(out, h);
  }
  return out;
}

ComponentRecord compute_record(const RecordTask& task, const RegularityOptions& options) {
  ComponentRecord rec;
  rec.component = task.component;
  rec.chart = task.chart;
  rec.label = task.label;
  const std::size_t want = std::max<std::size_t>(options.points_per_component, 1);
  for (const auto& p : task.declared) {
    if (rec.points.size() == want) break;
    if (p.size() != task.component.nvars()) continue;
    if (task.component.evaluate(p) != 0 || !avoids(p, task.avoid)) continue;
    if (std::find(rec.points.begin(), rec.points.end(), p) == rec.points.end()) rec.points.push_back(p);
  }
  for (std::size_t s = 0; rec.points.size() < want && s < 4 * want; ++s) {
    std::uint64_t seed = derive_seed(options.seed, {task.chart, task.index, s});
    try {
      Point p = generic_point(task.component, task.avoid, seed, options.height_bound);
      if (std::find(rec.points.begin(), rec.points.end(), p) == rec.points.end())
        rec.points.push_back(std::move(p));
    } catch (const MathError& e) {
      if (e.code() != "NO_RATIONAL_POINT") throw;
      rec.note = e.code();
      break;
    }
  }
  if (rec.points.empty()) {
    rec.status = RecordStatus::Unsampled;
    if (rec.note.empty()) rec.note = "NO_RATIONAL_POINT";
    return rec;
  }
  for (const auto& p : rec.points) rec.gr_ranks.push_back(gr_rank_at_point(*task.ideal, p));
  const auto [lo, hi] = std::minmax_element(rec.gr_ranks.begin(), rec.gr_ranks.end());
  rec.irr_mult = *hi <= task.rank ? task.rank - *hi : 0;
  if (*lo != *hi) {
    rec.status = RecordStatus::Unstable;
    rec.note = "sampled points disagree";
  } else if (*hi > task.rank) {
    rec.status = RecordStatus::Unstable;
    rec.note = "gr-rank exceeds the rank";
  } else {
    rec.status = RecordStatus::Stable;
    if (rec.points.size() < want) rec.note = "fewer distinct points than requested";
  }
  if (options.cross_check) cross_check(rec, task, options);
  return rec;
}

std::vector<ComponentRecord> compute_records_serial(const std::vector<RecordTask>& tasks,
                                                    const RegularityOptions& options) {
  std::vector<ComponentRecord> out;
  out.reserve(tasks.size());
  for (const auto& t : tasks) out.push_back(compute_record(t, options));
  return out;
}

std::vector<ComponentRecord> compute_records_parallel(const std::vector<RecordTask>& tasks,
                                                      const RegularityOptions& options) {
  const auto count = static_cast<std::int64_t>(tasks.size());
  std::vector<ComponentRecord> out(tasks.size());
  std::vector<std::exception_ptr> errors(tasks.size());
  const int jobs = std::max(options.jobs, 1);
#pragma omp parallel for schedule(dynamic) num_threads(jobs)
  for (std::int64_t i = 0; i < count; ++i) {
    try {
      out[static_cast<std::size_t>(i)] = compute_record(tasks[static_cast<std::size_t>(i)], options);
    } catch (...) {
      errors[static_cast<std::size_t>(i)] = std::current_exception();
    }
  }
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
  return out;
}

Divisor divisor_from_records(const std::vector<ComponentRecord>& records,
                             std::vector<std::string>* caveats) {
  Divisor d;
  std::optional<std::size_t> infinity;
  for (const auto& r : records) {
    if (r.status != RecordStatus::Stable) continue;
    if (r.chart == 0) {
      if (r.irr_mult > 0) d.entries.push_back({r.label, r.component, r.irr_mult});
      continue;
    }
    if (!infinity) {
      infinity = r.irr_mult;
      if (r.irr_mult > 0) d.entries.push_back({r.label, r.component, r.irr_mult});
    } else if (*infinity != r.irr_mult && caveats) {
      caveats->push_back("charts disagree on the multiplicity along the hyperplane at infinity");
    }
  }
  return d;
}

Verdict verdict_from_records(const std::vector<ComponentRecord>& records, bool infinity_checked) {
  bool all_clean = true;
  for (const auto& r : records) {
    if (r.status == RecordStatus::Stable && r.irr_mult > 0) return Verdict::Irregular;
    if (r.status != RecordStatus::Stable) all_clean = false;
  }
  return all_clean && infinity_checked ? Verdict::Regular : Verdict::Inconclusive;
}

namespace {

struct Analysis {
  RegularityReport report;
  std::deque<DIdeal> chart_ideals;
  std::deque<PfaffianSystem> pfaffians;
};

void analyze(const DIdeal& ideal, const RegularityOptions& options, bool affine_only,
             Analysis& a) {
  RegularityReport& rep = a.report;
  const std::size_t n = ideal.nvars();
  rep.caveats.push_back("input is assumed to present a meromorphic connection");
  rep.rank = holonomic_rank(ideal);
  if (rep.rank.infinite) {
    rep.caveats.push_back("holonomic rank is not finite; regularity is not decided");
    rep.verdict = Verdict::Inconclusive;
    return;
  }
  for (const auto& p : options.points)
    if (p.size() != n) throw UsageError("declared point has the wrong number of coordinates");
  rep.locus = singular_locus(ideal);
  if (rep.locus.may_have_deeper_components)
    rep.caveats.push_back(
        "singular locus has strata of codimension at least two; sampled points avoid them");

  std::vector<MultiPoly> components;
  if (!options.components.empty()) {
    for (const auto& c : options.components) {
      if (c.nvars() != n) throw UsageError("declared component has the wrong number of variables");
      for (auto& [f, m] : squarefree_factors(c)) add_unique(components, f);
    }
  } else {
    components = rep.locus.codim1;
  }
  for (const auto& c : components)
    if (!has_linear_variable(c))
      rep.caveats.push_back("component " + c.to_string() +
                            " is squarefree, irreducibility unverified");
  std::vector<MultiPoly> strata = options.avoid;
  for (const auto& h : rep.locus.deeper_strata) strata.push_back(h);

  const bool want_oracle = options.cross_check;
  const PfaffianSystem* affine_pf = nullptr;
  if (want_oracle && !components.empty()) {
    try {
      a.pfaffians.push_back(pfaffian_system(ideal));
      affine_pf = &a.pfaffians.back();
    } catch (const MathError&) {
    }
  }

  std::vector<RecordTask> tasks;
  for (std::size_t j = 0; j < components.size(); ++j) {
    RecordTask t;
    t.ideal = &ideal;
    t.rank = rep.rank.value;
    t.chart = 0;
    t.index = j;
    t.component = components[j];
    t.label = components[j].to_string();
    t.avoid = avoidance_for(components[j], components, strata);
    t.declared = options.points;
    t.pfaffian = affine_pf;
    tasks.push_back(std::move(t));
  }

  if (options.check_infinity && !affine_only) {
    rep.charts = options.charts;
    if (rep.charts.empty())
      for (std::size_t k = 1; k <= n; ++k) rep.charts.push_back(k);
    for (std::size_t k : rep.charts)
      if (k < 1 || k > n) throw UsageError("chart index out of range");
    for (std::size_t k : rep.charts) {
      a.chart_ideals.push_back(chart_pullback(ideal, k));
      const DIdeal& ck = a.chart_ideals.back();
      RankResult rk = holonomic_rank(ck);
      if (!(rk == rep.rank))
        rep.caveats.push_back("rank in chart " + std::to_string(k) + " differs from the affine rank");
      SingularLocus sk = singular_locus(ck);
      MultiPoly h = MultiPoly::variable(n, k - 1);
      std::vector<MultiPoly> comps_k = sk.codim1;
      add_unique(comps_k, h);
      std::vector<MultiPoly> strata_k = sk.deeper_strata;
      for (const auto& q : options.avoid) strata_k.push_back(chart_transport(q, k));
      const PfaffianSystem* pf = nullptr;
      if (want_oracle) {
        try {
          a.pfaffians.push_back(pfaffian_system(ck));
          pf = &a.pfaffians.back();
        } catch (const MathError&) {
        }
      }
      RecordTask t;
      t.ideal = &ck;
      t.rank = rep.rank.value;
      t.chart = k;
      t.index = 0;
      t.component = h;
      t.label = "H_inf";
      t.avoid = avoidance_for(h, comps_k, strata_k);
      t.pfaffian = pf;
      tasks.push_back(std::move(t));
    }
    rep.infinity_checked = true;
  }

  rep.records = options.jobs > 1 ? compute_records_parallel(tasks, options)
                                 : compute_records_serial(tasks, options);
  for (const auto& r : rep.records) {
    std::string where = r.chart == 0 ? "" : " (chart " + std::to_string(r.chart) + ")";
    if (r.status == RecordStatus::Unsampled)
      rep.caveats.push_back("no point sampled on " + r.label + where + "; supply one");
    else if (r.status == RecordStatus::Unstable)
      rep.caveats.push_back("gr-rank unstable on " + r.label + where + ": " + r.note);
    if (!r.oracle_note.empty())
      rep.caveats.push_back("line oracle on " + r.label + where + ": " + r.oracle_note);
  }
  if (!rep.infinity_checked && !affine_only)
    rep.caveats.push_back("hyperplane at infinity not checked; REGULAR cannot be concluded");
  rep.divisor = divisor_from_records(rep.records, &rep.caveats);
  rep.verdict = verdict_from_records(rep.records, rep.infinity_checked);
}

}  // namespace

std::vector<ComponentRecord> irregular_support(const DIdeal& ideal,
                                               const RegularityOptions& options) {
  Analysis a;
  analyze(ideal, options, true, a);
  return a.report.records;
}

Divisor irregularity_divisor(const DIdeal& ideal, const RegularityOptions& options) {
  return is_regular(ideal, options).divisor;
}

RegularityReport is_regular(const DIdeal& ideal, const RegularityOptions& options) {
  Analysis a;
  analyze(ideal, options, false, a);
  return std::move(a.report);
}

}  // namespace dreg
