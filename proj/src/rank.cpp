#include "dreg/rank.hpp"

#include <algorithm>
#include <map>

#include "detail/groebner_engine.hpp"
#include "dreg/errors.hpp"
#include "dreg/factor.hpp"

namespace dreg {

namespace {

// Operators with polynomial coefficients standing for their Q(x)^*-ray.
struct PTerm {
  Exponents beta;
  MultiPoly coef;
};
using POp = std::vector<PTerm>;

int beta_cmp(const Exponents& a, const Exponents& b) { return degrevlex_compare(a, b); }

POp sorted_from_map(std::map<Exponents, MultiPoly>& acc) {
  POp out;
  for (auto& [beta, c] : acc)
    if (!c.is_zero()) out.push_back({beta, std::move(c)});
  std::sort(out.begin(), out.end(),
            [](const PTerm& a, const PTerm& b) { return beta_cmp(a.beta, b.beta) > 0; });
  return out;
}

POp from_weyl_element(const WeylElement& p) {
  std::map<Exponents, MultiPoly> acc;
  for (auto& [beta, c] : p.by_derivative()) acc[beta] += c;
  return sorted_from_map(acc);
}

// dx^gamma * P, expanded with Leibniz' rule.
POp mul_d(const Exponents& gamma, const POp& p) {
  bool zero = std::all_of(gamma.begin(), gamma.end(), [](int g) { return g == 0; });
  if (zero) return p;
  const std::size_t n = gamma.size();
  std::map<Exponents, MultiPoly> acc;
  // Enumerate mu <= gamma.
  Exponents mu(n, 0);
  while (true) {
    Integer weight = 1;
    for (std::size_t i = 0; i < n; ++i) {
      Integer b;
      mpz_bin_uiui(b.get_mpz_t(), gamma[i], mu[i]);
      weight *= b;
    }
    for (const auto& t : p) {
      MultiPoly c = t.coef;
      for (std::size_t i = 0; i < n && !c.is_zero(); ++i)
        for (int k = 0; k < mu[i]; ++k) c = c.derivative(i);
      if (c.is_zero()) continue;
      Exponents beta(n);
      for (std::size_t i = 0; i < n; ++i) beta[i] = t.beta[i] + gamma[i] - mu[i];
      acc[beta] += c * Rational(weight);
    }
    std::size_t i = 0;
    while (i < n && mu[i] == gamma[i]) mu[i++] = 0;
    if (i == n) break;
    ++mu[i];
  }
  return sorted_from_map(acc);
}

// a*P - b*Q.
POp combine(const MultiPoly& a, const POp& p, const MultiPoly& b, const POp& q) {
  POp out;
  std::size_t i = 0, j = 0;
  while (i < p.size() || j < q.size()) {
    int c = i == p.size()   ? -1
            : j == q.size() ? 1
                            : beta_cmp(p[i].beta, q[j].beta);
    if (c > 0) {
      out.push_back({p[i].beta, a * p[i].coef});
      ++i;
    } else if (c < 0) {
      out.push_back({q[j].beta, -(b * q[j].coef)});
      ++j;
    } else {
      MultiPoly s = a * p[i].coef - b * q[j].coef;
      if (!s.is_zero()) out.push_back({p[i].beta, std::move(s)});
      ++i;
      ++j;
    }
  }
  return out;
}

// Divide out the common polynomial and rational content of all coefficients
// of a and b together; returns the factor removed.
MultiPoly remove_content(POp& a, POp& b, std::size_t nvars) {
  std::vector<const MultiPoly*> coefs;
  for (const auto& t : a) coefs.push_back(&t.coef);
  for (const auto& t : b) coefs.push_back(&t.coef);
  if (coefs.empty()) return MultiPoly::constant(nvars, 1);
  std::sort(coefs.begin(), coefs.end(),
            [](const MultiPoly* x, const MultiPoly* y) { return x->size() < y->size(); });
  MultiPoly g(nvars);
  for (const MultiPoly* c : coefs) {
    g = gcd(g, *c);
    if (g.is_constant()) break;
  }
  if (!g.is_constant()) {
    for (auto& t : a) t.coef = *exact_divide(t.coef, g);
    for (auto& t : b) t.coef = *exact_divide(t.coef, g);
  } else {
    g = MultiPoly::constant(nvars, 1);
  }
  Integer num = 0, den = 1;
  for (auto* part : {&a, &b})
    for (const auto& t : *part)
      for (const auto& term : t.coef.terms()) {
        mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), term.coef.get_num_mpz_t());
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), term.coef.get_den_mpz_t());
      }
  Rational q(num, den);
  q.canonicalize();
  const POp& lead_part = a.empty() ? b : a;
  if (!lead_part.empty() && lead_part.front().coef.leading().coef < 0) q = -q;
  if (q != 1) {
    Rational inv = 1 / q;
    for (auto& t : a) t.coef *= inv;
    for (auto& t : b) t.coef *= inv;
  }
  return g * q;
}

bool beta_divides(const Exponents& a, const Exponents& b) { return detail::divides(a, b); }

class RationalWeylEngine {
 public:
  RationalWeylEngine(std::size_t n, const Deadline& deadline) : n_(n), deadline_(deadline) {}

  // Full normal form. If `scale` is given, on return
  //   input = (1/scale) * result   modulo the ideal,
  // where scale starts as the caller's value and absorbs every multiplier.
  POp normal_form(POp p, const std::vector<const POp*>& basis, RationalFunction* scale) const {
    POp rem;
    while (!p.empty()) {
      const POp* red = nullptr;
      for (const POp* g : basis)
        if (beta_divides(g->front().beta, p.front().beta)) {
          red = g;
          break;
        }
      if (red == nullptr) {
        rem.push_back(std::move(p.front()));
        p.erase(p.begin());
        continue;
      }
      POp q = mul_d(detail::exp_sub(p.front().beta, red->front().beta), *red);
      MultiPoly g = gcd(q.front().coef, p.front().coef);
      MultiPoly a = *exact_divide(q.front().coef, g);
      MultiPoly c = *exact_divide(p.front().coef, g);
      p = combine(a, p, c, q);
      for (auto& t : rem) t.coef = a * t.coef;
      MultiPoly removed = remove_content(rem, p, n_);
      if (scale) *scale = *scale * RationalFunction(a, removed);
      deadline_.check("rational Weyl normal form", stats_);
    }
    if (!scale) {
      POp empty;
      remove_content(rem, empty, n_);
    }
    return rem;
  }

  std::vector<POp> run(std::vector<POp> input) {
    std::vector<POp> store;
    std::vector<Exponents> leads;
    std::vector<bool> active;
    detail::PairSet pairs(false);
    auto active_basis = [&] {
      std::vector<const POp*> b;
      for (std::size_t k = 0; k < store.size(); ++k)
        if (active[k]) b.push_back(&store[k]);
      return b;
    };
    auto add = [&](POp h) {
      POp empty;
      remove_content(h, empty, n_);
      bool unit = std::all_of(h.front().beta.begin(), h.front().beta.end(),
                              [](int e) { return e == 0; });
      store.push_back(std::move(h));
      leads.push_back(store.back().front().beta);
      active.push_back(true);
      stats_.basis_size = store.size();
      pairs.update(store.size() - 1, leads, active, stats_);
      return unit;
    };
    auto unit_result = [&] {
      return std::vector<POp>{POp{PTerm{Exponents(n_, 0), MultiPoly::constant(n_, 1)}}};
    };
    for (auto& f : input) {
      if (f.empty()) continue;
      POp h = normal_form(std::move(f), active_basis(), nullptr);
      if (h.empty()) continue;
      if (add(std::move(h))) return unit_result();
    }
    while (!pairs.empty()) {
      deadline_.check("rational Weyl Groebner basis", stats_);
      auto pr = pairs.pop_min(beta_cmp);
      ++stats_.pairs_reduced;
      const POp& f = store[pr.i];
      const POp& g = store[pr.j];
      POp sf = mul_d(detail::exp_sub(pr.lcm, f.front().beta), f);
      POp sg = mul_d(detail::exp_sub(pr.lcm, g.front().beta), g);
      MultiPoly common = gcd(sf.front().coef, sg.front().coef);
      POp s = combine(*exact_divide(sg.front().coef, common), sf,
                      *exact_divide(sf.front().coef, common), sg);
      POp h = normal_form(std::move(s), active_basis(), nullptr);
      if (h.empty()) {
        ++stats_.zero_reductions;
        continue;
      }
      if (add(std::move(h))) return unit_result();
    }
    std::vector<POp> minimal;
    for (std::size_t k = 0; k < store.size(); ++k)
      if (active[k]) minimal.push_back(store[k]);
    std::sort(minimal.begin(), minimal.end(), [](const POp& a, const POp& b) {
      return beta_cmp(a.front().beta, b.front().beta) < 0;
    });
    std::vector<POp> reduced;
    for (std::size_t k = 0; k < minimal.size(); ++k) {
      std::vector<const POp*> others;
      for (std::size_t m = 0; m < minimal.size(); ++m)
        if (m != k) others.push_back(&minimal[m]);
      POp tail(minimal[k].begin() + 1, minimal[k].end());
      RationalFunction scale = RationalFunction::constant(n_, 1);
      POp rt = normal_form(std::move(tail), others, &scale);
      // head + (1/scale) * rt, scaled by the denominator data of `scale`.
      const MultiPoly& sn = scale.numerator();
      const MultiPoly& sd = scale.denominator();
      POp whole{PTerm{minimal[k].front().beta, minimal[k].front().coef * sn}};
      for (auto& t : rt) whole.push_back({t.beta, t.coef * sd});
      POp empty;
      remove_content(whole, empty, n_);
      reduced.push_back(std::move(whole));
    }
    return reduced;
  }

 private:
  std::size_t n_;
  Deadline deadline_;
  mutable GroebnerStats stats_;
};

RationalOperator to_rational_monic(const POp& p, std::size_t n) {
  std::vector<RationalOperator::Term> terms;
  const MultiPoly& lc = p.front().coef;
  for (const auto& t : p) terms.push_back({t.beta, RationalFunction(t.coef, lc)});
  return RationalOperator::from_terms(n, std::move(terms));
}

// Polynomial ray of a rational operator together with the denominator d
// such that op = (1/d) * ray.
std::pair<POp, MultiPoly> clear_denominators(const RationalOperator& op) {
  const std::size_t n = op.nvars();
  MultiPoly d = MultiPoly::constant(n, 1);
  for (const auto& t : op.terms()) d = lcm(d, t.coef.denominator());
  POp out;
  for (const auto& t : op.terms()) {
    MultiPoly factor = *exact_divide(d, t.coef.denominator());
    out.push_back({t.beta, t.coef.numerator() * factor});
  }
  return {std::move(out), d};
}

}  // namespace

RationalOperator RationalOperator::from_terms(std::size_t nvars, std::vector<Term> terms) {
  std::map<Exponents, RationalFunction> acc;
  for (auto& t : terms) {
    if (t.beta.size() != nvars) throw UsageError("exponent length mismatch");
    auto it = acc.find(t.beta);
    if (it == acc.end())
      acc.emplace(t.beta, t.coef);
    else
      it->second += t.coef;
  }
  RationalOperator op(nvars);
  for (auto& [beta, c] : acc)
    if (!c.is_zero()) op.terms_.push_back({beta, std::move(c)});
  std::sort(op.terms_.begin(), op.terms_.end(),
            [](const Term& a, const Term& b) { return beta_cmp(a.beta, b.beta) > 0; });
  return op;
}

RationalOperator RationalOperator::from_weyl(const WeylElement& p) {
  std::vector<Term> terms;
  for (auto& [beta, c] : p.by_derivative()) terms.push_back({beta, RationalFunction(c)});
  return from_terms(p.nvars(), std::move(terms));
}

RationalOperator RationalOperator::monomial(std::size_t nvars, Exponents beta) {
  return from_terms(nvars, {{std::move(beta), RationalFunction::constant(nvars, 1)}});
}

RationalFunction RationalOperator::coefficient(const Exponents& beta) const {
  for (const auto& t : terms_)
    if (t.beta == beta) return t.coef;
  return RationalFunction(nvars_);
}

std::string RationalOperator::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (std::size_t k = 0; k < terms_.size(); ++k) {
    if (k) s += " + ";
    std::string mono;
    for (std::size_t i = 0; i < nvars_; ++i) {
      if (terms_[k].beta[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += "dx" + std::to_string(i + 1);
      if (terms_[k].beta[i] > 1) mono += "^" + std::to_string(terms_[k].beta[i]);
    }
    std::string c = "(" + terms_[k].coef.to_string() + ")";
    s += mono.empty() ? c : c + "*" + mono;
  }
  return s;
}

bool operator==(const RationalOperator& a, const RationalOperator& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i)
    if (a.terms_[i].beta != b.terms_[i].beta || !(a.terms_[i].coef == b.terms_[i].coef))
      return false;
  return true;
}

std::vector<RationalOperator> rational_weyl_gb(const DIdeal& ideal, const Deadline& deadline) {
  const std::size_t n = ideal.nvars();
  std::vector<POp> input;
  for (const auto& g : ideal.generators()) input.push_back(from_weyl_element(g));
  RationalWeylEngine engine(n, deadline);
  auto basis = engine.run(std::move(input));
  std::vector<RationalOperator> out;
  for (const auto& b : basis) out.push_back(to_rational_monic(b, n));
  return out;
}

RationalOperator rational_normal_form(const RationalOperator& p,
                                      const std::vector<RationalOperator>& basis) {
  const std::size_t n = p.nvars();
  if (p.is_zero()) return p;
  std::vector<POp> pb;
  for (const auto& b : basis) pb.push_back(clear_denominators(b).first);
  std::vector<const POp*> ptrs;
  for (const auto& b : pb) ptrs.push_back(&b);
  auto [ray, d] = clear_denominators(p);
  RationalFunction scale(d);
  RationalWeylEngine engine(n, Deadline::from_environment());
  POp rem = engine.normal_form(std::move(ray), ptrs, &scale);
  std::vector<RationalOperator::Term> terms;
  RationalFunction inv = RationalFunction::constant(n, 1) / scale;
  for (const auto& t : rem) terms.push_back({t.beta, RationalFunction(t.coef) * inv});
  return RationalOperator::from_terms(n, std::move(terms));
}

std::optional<std::vector<Exponents>> standard_monomials(const std::vector<RationalOperator>& basis,
                                                         std::size_t nvars) {
  std::vector<Exponents> leads;
  for (const auto& b : basis) leads.push_back(b.leading_exponent());
  std::vector<int> bound(nvars, -1);
  for (const auto& l : leads) {
    int support = 0;
    std::size_t var = 0;
    for (std::size_t i = 0; i < nvars; ++i)
      if (l[i] > 0) {
        ++support;
        var = i;
      }
    if (support == 0) return std::vector<Exponents>{};
    if (support == 1 && (bound[var] < 0 || l[var] < bound[var])) bound[var] = l[var];
  }
  for (int b : bound)
    if (b < 0) return std::nullopt;
  std::vector<Exponents> out;
  Exponents beta(nvars, 0);
  while (true) {
    bool standard = std::none_of(leads.begin(), leads.end(),
                                 [&](const Exponents& l) { return beta_divides(l, beta); });
    if (standard) out.push_back(beta);
    std::size_t i = 0;
    while (i < nvars && beta[i] + 1 == bound[i]) beta[i++] = 0;
    if (i == nvars) break;
    ++beta[i];
  }
  std::sort(out.begin(), out.end(),
            [](const Exponents& a, const Exponents& b) { return beta_cmp(a, b) < 0; });
  return out;
}

RankResult holonomic_rank(const DIdeal& ideal) {
  auto gb = rational_weyl_gb(ideal);
  auto std_monomials = standard_monomials(gb, ideal.nvars());
  if (!std_monomials) return RankResult::infinity();
  return RankResult::finite(std_monomials->size());
}

CommutativeIdeal characteristic_ideal(const DIdeal& ideal) {
  const std::size_t n = ideal.nvars();
  auto gb = ideal.groebner_basis(WeylOrderSpec::order_filtration(n));
  CommutativeIdeal ch{2 * n, {}};
  for (const auto& g : *gb) {
    MultiPoly s = principal_symbol(g).primitive();
    if (std::find(ch.generators.begin(), ch.generators.end(), s) == ch.generators.end())
      ch.generators.push_back(std::move(s));
  }
  return ch;
}

namespace {

// Ideal of the closure of the conormal bundle of the smooth part of V(f),
// in Q[x, xi].
CommutativeIdeal conormal_ideal(const MultiPoly& f) {
  const std::size_t n = f.nvars();
  std::vector<int> lift(n);
  for (std::size_t i = 0; i < n; ++i) lift[i] = static_cast<int>(i);
  std::vector<MultiPoly> grad;
  for (std::size_t i = 0; i < n; ++i) grad.push_back(f.derivative(i).remap(lift, 2 * n));
  CommutativeIdeal m{2 * n, {f.remap(lift, 2 * n)}};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      MultiPoly g = MultiPoly::variable(2 * n, n + i) * grad[j] -
                    MultiPoly::variable(2 * n, n + j) * grad[i];
      if (!g.is_zero()) m.generators.push_back(std::move(g));
    }
  bool smooth = std::any_of(grad.begin(), grad.end(),
                            [](const MultiPoly& g) { return !g.is_zero() && g.is_constant(); });
  if (smooth) return m;
  std::vector<MultiPoly> nonzero;
  for (auto& g : grad)
    if (!g.is_zero()) nonzero.push_back(g);
  return saturate(m, nonzero);
}

}  // namespace

SingularLocus singular_locus(const DIdeal& ideal) {
  const std::size_t n = ideal.nvars();
  CommutativeIdeal ch = characteristic_ideal(ideal);
  std::vector<std::size_t> xi;
  std::vector<MultiPoly> xi_polys;
  for (std::size_t i = 0; i < n; ++i) {
    xi.push_back(n + i);
    xi_polys.push_back(MultiPoly::variable(2 * n, n + i));
  }
  CommutativeIdeal away = saturate(ch, xi_polys);
  CommutativeIdeal projected2n = saturate_and_eliminate(away, {}, xi);
  std::vector<int> down(2 * n, -1);
  for (std::size_t i = 0; i < n; ++i) down[i] = static_cast<int>(i);
  SingularLocus out;
  out.projected.nvars = n;
  for (const auto& g : projected2n.generators) out.projected.generators.push_back(g.remap(down, n));
  if (out.projected.is_unit()) return out;
  if (out.projected.is_zero()) {
    out.may_have_deeper_components = true;
    return out;
  }
  MultiPoly g = gcd(out.projected.generators);
  if (!g.is_constant()) {
    for (auto& [f, m] : squarefree_factors(g)) out.codim1.push_back(f);
    std::sort(out.codim1.begin(), out.codim1.end(), [](const MultiPoly& a, const MultiPoly& b) {
      if (a.total_degree() != b.total_degree()) return a.total_degree() < b.total_degree();
      return a.to_string() < b.to_string();
    });
  }
  // Strata of the projection beyond the hypersurface part.
  std::vector<MultiPoly> rest;
  for (const auto& p : out.projected.generators) rest.push_back(*exact_divide(p, g));
  CommutativeIdeal extra{n, groebner_commutative(rest, MonomialOrder::degrevlex(n))};
  // Components of Ch lying over the hypersurface but not conormal to it
  // project into it; they survive removal of the hypersurface conormals.
  CommutativeIdeal residual = away;
  for (const auto& f : out.codim1) {
    if (residual.is_unit()) break;
    residual = saturate(residual, conormal_ideal(f).generators);
  }
  if (!residual.is_unit()) {
    CommutativeIdeal below = saturate_and_eliminate(residual, {}, xi);
    CommutativeIdeal z{n, {}};
    for (const auto& h : below.generators) z.generators.push_back(h.remap(down, n));
    extra = extra.is_unit() ? z : intersect(extra, z);
  }
  if (!extra.is_unit()) {
    out.may_have_deeper_components = true;
    out.deeper_strata = extra.generators;
  }
  return out;
}

RationalMatrix matrix_multiply(const RationalMatrix& a, const RationalMatrix& b) {
  const std::size_t r = a.size();
  const std::size_t nv = r ? a[0][0].nvars() : 0;
  RationalMatrix c(r, std::vector<RationalFunction>(r, RationalFunction(nv)));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t k = 0; k < r; ++k) {
      if (a[i][k].is_zero()) continue;
      for (std::size_t j = 0; j < r; ++j)
        if (!b[k][j].is_zero()) c[i][j] += a[i][k] * b[k][j];
    }
  return c;
}

RationalMatrix PfaffianSystem::integrability_defect(std::size_t i, std::size_t j) const {
  RationalMatrix ab = matrix_multiply(matrices[i], matrices[j]);
  RationalMatrix ba = matrix_multiply(matrices[j], matrices[i]);
  RationalMatrix d(rank, std::vector<RationalFunction>(rank, RationalFunction(nvars)));
  for (std::size_t r = 0; r < rank; ++r)
    for (std::size_t c = 0; c < rank; ++c)
      d[r][c] = matrices[j][r][c].derivative(i) - matrices[i][r][c].derivative(j) -
                (ab[r][c] - ba[r][c]);
  return d;
}

bool PfaffianSystem::is_integrable() const {
  for (std::size_t i = 0; i < nvars; ++i)
    for (std::size_t j = i + 1; j < nvars; ++j)
      for (const auto& row : integrability_defect(i, j))
        for (const auto& e : row)
          if (!e.is_zero()) return false;
  return true;
}

PfaffianSystem pfaffian_system(const DIdeal& ideal) {
  const std::size_t n = ideal.nvars();
  auto gb = rational_weyl_gb(ideal);
  auto std_monomials = standard_monomials(gb, n);
  if (!std_monomials) throw MathError("INFINITE_RANK", "not of finite rank over Q(x)");
  PfaffianSystem sys;
  sys.nvars = n;
  sys.rank = std_monomials->size();
  sys.basis = *std_monomials;
  for (std::size_t i = 0; i < n; ++i) {
    RationalMatrix a(sys.rank, std::vector<RationalFunction>(sys.rank, RationalFunction(n)));
    for (std::size_t row = 0; row < sys.rank; ++row) {
      Exponents beta = sys.basis[row];
      beta[i] += 1;
      RationalOperator nf = rational_normal_form(RationalOperator::monomial(n, beta), gb);
      for (std::size_t col = 0; col < sys.rank; ++col) a[row][col] = nf.coefficient(sys.basis[col]);
    }
    sys.matrices.push_back(std::move(a));
  }
  return sys;
}

}  // namespace dreg
