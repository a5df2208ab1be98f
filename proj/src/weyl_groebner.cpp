#include "dreg/weyl_groebner.hpp"

#include <algorithm>

#include "detail/groebner_engine.hpp"
#include "detail/weyl_kernel.hpp"
#include "dreg/errors.hpp"

namespace dreg {

namespace {

using detail::IPoly;

struct WeylAlgebra {
  std::size_t n;
  bool homogenized;
  MonomialOrder order;

  int compare(const Exponents& a, const Exponents& b) const { return order.compare(a, b); }

  IPoly mul_monomial(const Exponents& m, const IPoly& g) const {
    bool has_d = false;
    for (std::size_t i = 0; i < n; ++i)
      if (m[n + i] > 0) has_d = true;
    if (!has_d) {
      // x-monomials (and h) commute past nothing; order is preserved.
      IPoly r = g;
      for (auto& t : r)
        for (std::size_t i = 0; i < m.size(); ++i) t.exp[i] += m[i];
      return r;
    }
    IPoly out;
    std::vector<detail::ProductTerm> buf;
    for (const auto& t : g) {
      buf.clear();
      detail::expand_weyl_product(n, m, t.exp, buf);
      for (auto& b : buf) {
        if (homogenized) b.exp[2 * n] += 2 * b.mu_total;
        out.push_back({std::move(b.exp), b.coef * t.coef});
      }
    }
    detail::sort_and_merge(out, [this](const Exponents& a, const Exponents& b) {
      return order.compare(a, b);
    });
    return out;
  }

  bool commutative() const { return false; }
};

MonomialOrder make_order(const WeylOrderSpec& spec) {
  const std::size_t n = spec.nvars();
  std::vector<Rational> uv = spec.x_weight;
  uv.insert(uv.end(), spec.d_weight.begin(), spec.d_weight.end());
  auto weight = integer_weight(uv);
  bool zero_weight = std::all_of(weight.begin(), weight.end(), [](auto v) { return v == 0; });
  const std::size_t width = spec.homogenized ? 2 * n + 1 : 2 * n;
  std::vector<std::vector<std::int64_t>> rows;
  if (spec.homogenized) rows.emplace_back(width, 1);
  if (!zero_weight) {
    weight.resize(width, 0);
    rows.push_back(weight);
  }
  std::vector<std::int64_t> total(width, 1);
  if (spec.homogenized) total[2 * n] = 0;
  rows.push_back(total);
  for (std::size_t i = 2 * n; i-- > 1;) {
    std::vector<std::int64_t> r(width, 0);
    r[i] = -1;
    rows.push_back(std::move(r));
  }
  return MonomialOrder::from_rows(std::move(rows));
}

void validate_term_order(const WeylOrderSpec& spec) {
  if (spec.homogenized) return;
  for (std::size_t i = 0; i < spec.nvars(); ++i) {
    Rational s = spec.x_weight[i] + spec.d_weight[i];
    bool ok = (s > 0 && spec.x_weight[i] >= 0 && spec.d_weight[i] >= 0) ||
              (spec.x_weight[i] == 0 && spec.d_weight[i] == 0);
    if (!ok) throw UsageError("weight does not define a term order on D_n; use homogenization");
  }
}

IPoly to_ipoly(const WeylElement& p, bool homogenized, const MonomialOrder& order) {
  IPoly out;
  if (homogenized) {
    auto h = HomogenizedWeylElement::homogenize(p.primitive());
    for (const auto& t : h.terms()) out.push_back({t.exp, t.coef.get_num()});
  } else {
    WeylElement prim = p.primitive();
    for (const auto& t : prim.terms()) out.push_back({t.exp, t.coef.get_num()});
  }
  std::sort(out.begin(), out.end(), [&](const detail::ITerm& a, const detail::ITerm& b) {
    return order.compare(a.exp, b.exp) > 0;
  });
  return out;
}

WeylElement from_ipoly(const IPoly& p, std::size_t n, bool homogenized) {
  std::vector<WeylElement::Term> terms;
  for (const auto& t : p) {
    Exponents e(t.exp.begin(), t.exp.begin() + static_cast<std::ptrdiff_t>(2 * n));
    terms.push_back({std::move(e), Rational(t.coef)});
  }
  (void)homogenized;
  return WeylElement::from_terms(n, std::move(terms)).primitive();
}

}  // namespace

WeylOrderSpec WeylOrderSpec::v_filtration(const WeightVector& w) {
  WeylOrderSpec s;
  for (const auto& wi : w) {
    s.x_weight.push_back(-wi);
    s.d_weight.push_back(wi);
  }
  s.homogenized = true;
  return s;
}

WeylOrderSpec WeylOrderSpec::order_filtration(std::size_t n) {
  WeylOrderSpec s;
  s.x_weight.assign(n, 0);
  s.d_weight.assign(n, 1);
  return s;
}

WeylOrderSpec WeylOrderSpec::degrevlex(std::size_t n) {
  WeylOrderSpec s;
  s.x_weight.assign(n, 0);
  s.d_weight.assign(n, 0);
  return s;
}

std::string WeylOrderSpec::key() const {
  std::string k = homogenized ? "h:" : "t:";
  for (const auto& v : x_weight) k += to_string(v) + ",";
  k += "|";
  for (const auto& v : d_weight) k += to_string(v) + ",";
  return k;
}

DIdeal::DIdeal(std::size_t nvars, std::vector<WeylElement> generators)
    : nvars_(nvars), generators_(std::move(generators)) {
  if (nvars_ == 0) throw UsageError("Weyl algebra needs at least one variable");
  for (const auto& g : generators_) {
    if (g.is_zero()) throw UsageError("zero generator");
    if (g.nvars() != nvars_) throw UsageError("generator has the wrong variable count");
  }
}

std::shared_ptr<const std::vector<WeylElement>> DIdeal::groebner_basis(
    const WeylOrderSpec& order) const {
  const std::string key = order.key();
  {
    std::lock_guard lock(cache_->mutex);
    auto it = cache_->bases.find(key);
    if (it != cache_->bases.end()) return it->second;
  }
  auto basis = std::make_shared<const std::vector<WeylElement>>(weyl_buchberger(*this, order));
  std::lock_guard lock(cache_->mutex);
  auto [it, inserted] = cache_->bases.emplace(key, basis);
  return it->second;
}

std::vector<WeylElement> DIdeal::reduced_basis() const {
  return *groebner_basis(WeylOrderSpec::degrevlex(nvars_));
}

bool DIdeal::contains(const WeylElement& p) const {
  auto spec = WeylOrderSpec::degrevlex(nvars_);
  return weyl_reduce(p, *groebner_basis(spec), spec).is_zero();
}

bool DIdeal::is_unit() const {
  auto gb = reduced_basis();
  return gb.size() == 1 && gb[0].is_constant();
}

bool DIdeal::same_ideal(const DIdeal& other) const {
  for (const auto& g : other.generators())
    if (!contains(g)) return false;
  for (const auto& g : generators_)
    if (!other.contains(g)) return false;
  return true;
}

std::size_t DIdeal::cache_size() const {
  std::lock_guard lock(cache_->mutex);
  return cache_->bases.size();
}

std::vector<WeylElement> weyl_buchberger(const DIdeal& ideal, const WeylOrderSpec& order,
                                         const Deadline& deadline, GroebnerStats* stats) {
  const std::size_t n = ideal.nvars();
  if (order.nvars() != n) throw UsageError("order spec has the wrong number of variables");
  validate_term_order(order);
  WeylAlgebra alg{n, order.homogenized, make_order(order)};
  std::vector<IPoly> input;
  for (const auto& g : ideal.generators()) input.push_back(to_ipoly(g, order.homogenized, alg.order));
  detail::GroebnerEngine engine(alg, deadline, "Weyl Groebner basis");
  auto basis = engine.run(std::move(input));
  if (stats) *stats = engine.stats();
  std::vector<WeylElement> out;
  for (const auto& b : basis) {
    WeylElement e = from_ipoly(b, n, order.homogenized);
    if (std::find(out.begin(), out.end(), e) == out.end()) out.push_back(std::move(e));
  }
  return out;
}

WeylElement weyl_reduce(const WeylElement& p, const std::vector<WeylElement>& basis,
                        const WeylOrderSpec& order) {
  if (order.homogenized) throw UsageError("weyl_reduce needs a term order");
  if (p.is_zero()) return p;
  const std::size_t n = p.nvars();
  WeylAlgebra alg{n, false, make_order(order)};
  std::vector<IPoly> ib;
  for (const auto& b : basis) ib.push_back(to_ipoly(b, false, alg.order));
  std::vector<const IPoly*> ptrs;
  for (const auto& b : ib) ptrs.push_back(&b);
  detail::GroebnerEngine engine(alg, Deadline(), "Weyl normal form");
  return from_ipoly(engine.normal_form(to_ipoly(p, false, alg.order), ptrs), n, false);
}

DIdeal initial_ideal(const DIdeal& ideal, const WeightVector& w) {
  if (w.size() != ideal.nvars()) throw UsageError("weight vector has the wrong length");
  auto gb = ideal.groebner_basis(WeylOrderSpec::v_filtration(w));
  std::vector<WeylElement> gens;
  for (const auto& g : *gb) {
    WeylElement init = weight_data(g, w).initial.primitive();
    if (std::find(gens.begin(), gens.end(), init) == gens.end()) gens.push_back(std::move(init));
  }
  return DIdeal(ideal.nvars(), std::move(gens));
}

DIdeal translate(const DIdeal& ideal, std::span<const Rational> point) {
  std::vector<WeylElement> gens;
  for (const auto& g : ideal.generators()) gens.push_back(apply_affine_substitution(g, point));
  return DIdeal(ideal.nvars(), std::move(gens));
}

WeylElement chart_pullback(const WeylElement& p, std::size_t chart) {
  const std::size_t n = p.nvars();
  if (chart < 1 || chart > n) throw UsageError("chart index out of range");
  const std::size_t k = chart - 1;
  // Images of the derivations.
  std::vector<WeylElement> dimg(n, WeylElement(n));
  for (std::size_t j = 0; j < n; ++j) {
    if (j == k) {
      WeylElement e = -(WeylElement::x(n, k) * WeylElement::x(n, k) * WeylElement::dx(n, k));
      for (std::size_t i = 0; i < n; ++i)
        if (i != k) e -= WeylElement::x(n, i) * WeylElement::x(n, k) * WeylElement::dx(n, i);
      dimg[j] = e;
    } else {
      dimg[j] = WeylElement::x(n, k) * WeylElement::dx(n, j);
    }
  }
  std::map<Exponents, WeylElement> dcache;
  auto image_of_derivative = [&](const Exponents& beta) -> const WeylElement& {
    auto it = dcache.find(beta);
    if (it != dcache.end()) return it->second;
    WeylElement e = WeylElement::constant(n, 1);
    for (std::size_t j = 0; j < n; ++j)
      for (int m = 0; m < beta[j]; ++m) e = e * dimg[j];
    return dcache.emplace(beta, std::move(e)).first->second;
  };

  // Signed y-exponents (y_k may go negative before clearing).
  struct SignedTerm {
    Exponents exp;
    Rational coef;
  };
  std::vector<SignedTerm> terms;
  for (const auto& t : p.terms()) {
    Exponents beta(t.exp.begin() + static_cast<std::ptrdiff_t>(n), t.exp.end());
    int total_alpha = 0;
    for (std::size_t i = 0; i < n; ++i) total_alpha += t.exp[i];
    const WeylElement& d = image_of_derivative(beta);
    for (const auto& s : d.terms()) {
      SignedTerm st{s.exp, s.coef * t.coef};
      for (std::size_t i = 0; i < n; ++i)
        if (i != k) st.exp[i] += t.exp[i];
      st.exp[k] -= total_alpha;
      terms.push_back(std::move(st));
    }
  }
  int lowest = 0;
  for (const auto& t : terms) lowest = std::min(lowest, t.exp[k]);
  std::vector<WeylElement::Term> cleared;
  for (auto& t : terms) {
    t.exp[k] -= lowest;
    cleared.push_back({std::move(t.exp), t.coef});
  }
  WeylElement result = WeylElement::from_terms(n, std::move(cleared));
  if (result.is_zero()) return result;
  return result.primitive();
}

DIdeal chart_pullback(const DIdeal& ideal, std::size_t chart) {
  std::vector<WeylElement> gens;
  for (const auto& g : ideal.generators()) gens.push_back(chart_pullback(g, chart));
  return DIdeal(ideal.nvars(), std::move(gens));
}

MultiPoly chart_transport(const MultiPoly& f, std::size_t chart) {
  const std::size_t n = f.nvars();
  if (chart < 1 || chart > n) throw UsageError("chart index out of range");
  const std::size_t k = chart - 1;
  int top = f.total_degree();
  std::vector<MultiPoly::Term> terms;
  for (const auto& t : f.terms()) {
    Exponents e = t.exp;
    int total = 0;
    for (int v : t.exp) total += v;
    e[k] = top - total;
    terms.push_back({std::move(e), t.coef});
  }
  return MultiPoly::from_terms(n, std::move(terms)).primitive();
}

}  // namespace dreg
