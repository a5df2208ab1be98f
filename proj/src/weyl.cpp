#include "dreg/weyl.hpp"

#include <algorithm>

#include "detail/weyl_kernel.hpp"
#include "dreg/errors.hpp"

namespace dreg {

namespace {

template <class TermT>
std::vector<TermT> canonical(std::vector<TermT> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const TermT& a, const TermT& b) { return degrevlex_compare(a.exp, b.exp) > 0; });
  std::vector<TermT> out;
  out.reserve(terms.size());
  for (auto& t : terms) {
    if (!out.empty() && out.back().exp == t.exp) {
      out.back().coef += t.coef;
      if (out.back().coef == 0) out.pop_back();
    } else if (t.coef != 0) {
      out.push_back(std::move(t));
    }
  }
  return out;
}

void check_same(std::size_t a, std::size_t b) {
  if (a != b) throw UsageError("Weyl algebra elements have different variable counts");
}

}  // namespace

WeylElement WeylElement::constant(std::size_t nvars, const Rational& c) {
  WeylElement p(nvars);
  if (c != 0) p.terms_.push_back({Exponents(2 * nvars, 0), c});
  return p;
}

WeylElement WeylElement::x(std::size_t nvars, std::size_t index) {
  if (index >= nvars) throw UsageError("variable index out of range");
  Exponents e(2 * nvars, 0);
  e[index] = 1;
  return monomial(nvars, std::move(e), 1);
}

WeylElement WeylElement::dx(std::size_t nvars, std::size_t index) {
  if (index >= nvars) throw UsageError("variable index out of range");
  Exponents e(2 * nvars, 0);
  e[nvars + index] = 1;
  return monomial(nvars, std::move(e), 1);
}

WeylElement WeylElement::monomial(std::size_t nvars, Exponents exp, const Rational& c) {
  if (exp.size() != 2 * nvars) throw UsageError("exponent length mismatch");
  WeylElement p(nvars);
  if (c != 0) p.terms_.push_back({std::move(exp), c});
  return p;
}

WeylElement WeylElement::from_terms(std::size_t nvars, std::vector<Term> terms) {
  for (const auto& t : terms)
    if (t.exp.size() != 2 * nvars) throw UsageError("exponent length mismatch");
  WeylElement p(nvars);
  p.terms_ = canonical(std::move(terms));
  return p;
}

WeylElement WeylElement::from_polynomial(const MultiPoly& f) {
  const std::size_t n = f.nvars();
  std::vector<Term> terms;
  for (const auto& t : f.terms()) {
    Exponents e(2 * n, 0);
    std::copy(t.exp.begin(), t.exp.end(), e.begin());
    terms.push_back({std::move(e), t.coef});
  }
  return from_terms(n, std::move(terms));
}

bool WeylElement::is_constant() const {
  return terms_.empty() ||
         (terms_.size() == 1 && std::all_of(terms_[0].exp.begin(), terms_[0].exp.end(),
                                            [](int e) { return e == 0; }));
}

int WeylElement::order() const {
  int best = terms_.empty() ? -1 : 0;
  for (const auto& t : terms_) {
    int d = 0;
    for (std::size_t i = 0; i < nvars_; ++i) d += t.exp[nvars_ + i];
    best = std::max(best, d);
  }
  return best;
}

WeylElement WeylElement::operator-() const {
  WeylElement r = *this;
  for (auto& t : r.terms_) t.coef = -t.coef;
  return r;
}

WeylElement& WeylElement::operator+=(const WeylElement& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  check_same(nvars_, o.nvars_);
  auto terms = terms_;
  terms.insert(terms.end(), o.terms_.begin(), o.terms_.end());
  terms_ = canonical(std::move(terms));
  return *this;
}

WeylElement& WeylElement::operator-=(const WeylElement& o) { return *this += -o; }

WeylElement& WeylElement::operator*=(const Rational& c) {
  if (c == 0) terms_.clear();
  for (auto& t : terms_) t.coef *= c;
  return *this;
}

bool operator==(const WeylElement& a, const WeylElement& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  if (a.terms_.empty()) return true;
  if (a.nvars_ != b.nvars_) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i)
    if (a.terms_[i].exp != b.terms_[i].exp || a.terms_[i].coef != b.terms_[i].coef) return false;
  return true;
}

WeylElement WeylElement::primitive() const {
  if (is_zero()) return *this;
  Integer g = 0, l = 1;
  for (const auto& t : terms_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.coef.get_num_mpz_t());
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), t.coef.get_den_mpz_t());
  }
  Rational scale(l, g);
  scale.canonicalize();
  if (terms_.front().coef < 0) scale = -scale;
  WeylElement r = *this;
  return r *= scale;
}

MultiPoly WeylElement::apply(const MultiPoly& f) const {
  if (f.nvars() != nvars_) throw UsageError("operator and polynomial differ in variable count");
  MultiPoly out(nvars_);
  for (const auto& t : terms_) {
    MultiPoly g = f;
    for (std::size_t i = 0; i < nvars_ && !g.is_zero(); ++i)
      for (int k = 0; k < t.exp[nvars_ + i]; ++k) g = g.derivative(i);
    if (g.is_zero()) continue;
    Exponents shift(t.exp.begin(), t.exp.begin() + static_cast<std::ptrdiff_t>(nvars_));
    out += g.shift_monomial(shift) * t.coef;
  }
  return out;
}

std::vector<std::pair<Exponents, MultiPoly>> WeylElement::by_derivative() const {
  std::vector<std::pair<Exponents, std::vector<MultiPoly::Term>>> groups;
  for (const auto& t : terms_) {
    Exponents beta(t.exp.begin() + static_cast<std::ptrdiff_t>(nvars_), t.exp.end());
    Exponents alpha(t.exp.begin(), t.exp.begin() + static_cast<std::ptrdiff_t>(nvars_));
    auto it = std::find_if(groups.begin(), groups.end(),
                           [&](const auto& g) { return g.first == beta; });
    if (it == groups.end()) {
      groups.emplace_back(beta, std::vector<MultiPoly::Term>{});
      it = groups.end() - 1;
    }
    it->second.push_back({std::move(alpha), t.coef});
  }
  std::vector<std::pair<Exponents, MultiPoly>> out;
  for (auto& [beta, terms] : groups)
    out.emplace_back(beta, MultiPoly::from_terms(nvars_, std::move(terms)));
  return out;
}

std::string WeylElement::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& t : terms_) {
    Rational c = t.coef;
    if (first) {
      if (c < 0) {
        s += "-";
        c = -c;
      }
    } else {
      s += c < 0 ? " - " : " + ";
      if (c < 0) c = -c;
    }
    first = false;
    std::string mono;
    for (std::size_t i = 0; i < 2 * nvars_; ++i) {
      if (t.exp[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += (i < nvars_ ? "x" : "dx") + std::to_string(i % nvars_ + 1);
      if (t.exp[i] > 1) mono += "^" + std::to_string(t.exp[i]);
    }
    if (mono.empty())
      s += dreg::to_string(c);
    else if (c == 1)
      s += mono;
    else
      s += dreg::to_string(c) + "*" + mono;
  }
  return s;
}

WeylElement weyl_multiply(const WeylElement& p, const WeylElement& q) {
  if (p.is_zero() || q.is_zero()) return WeylElement(std::max(p.nvars(), q.nvars()));
  check_same(p.nvars(), q.nvars());
  const std::size_t n = p.nvars();
  std::vector<WeylElement::Term> terms;
  std::vector<detail::ProductTerm> buf;
  for (const auto& s : p.terms()) {
    for (const auto& t : q.terms()) {
      buf.clear();
      detail::expand_weyl_product(n, s.exp, t.exp, buf);
      Rational st = s.coef * t.coef;
      for (auto& b : buf) terms.push_back({std::move(b.exp), st * Rational(b.coef)});
    }
  }
  return WeylElement::from_terms(n, std::move(terms));
}

WeylElement pow(const WeylElement& p, unsigned k) {
  WeylElement r = WeylElement::constant(p.nvars(), 1);
  for (unsigned i = 0; i < k; ++i) r = r * p;
  return r;
}

Rational term_weight(const Exponents& exp, const WeightVector& w) {
  const std::size_t n = w.size();
  Rational s = 0;
  for (std::size_t i = 0; i < n; ++i) {
    int diff = exp[n + i] - exp[i];
    if (diff != 0) s += w[i] * diff;
  }
  return s;
}

WeightData weight_data(const WeylElement& p, const WeightVector& w) {
  if (p.is_zero()) throw MathError("ZERO_OPERATOR", "zero operator has no order");
  if (w.size() != p.nvars()) throw UsageError("weight vector has the wrong length");
  Rational best = term_weight(p.terms().front().exp, w);
  for (const auto& t : p.terms()) best = std::max(best, term_weight(t.exp, w));
  std::vector<WeylElement::Term> init;
  for (const auto& t : p.terms())
    if (term_weight(t.exp, w) == best) init.push_back(t);
  return {best, WeylElement::from_terms(p.nvars(), std::move(init))};
}

WeylElement apply_affine_substitution(const WeylElement& p, std::span<const Rational> point) {
  const std::size_t n = p.nvars();
  if (point.size() != n) throw UsageError("point length does not match the variable count");
  std::vector<WeylElement::Term> terms;
  for (const auto& t : p.terms()) {
    // prod_i (x_i + p_i)^{alpha_i}, expanded binomially.
    std::vector<WeylElement::Term> partial{{t.exp, t.coef}};
    for (std::size_t i = 0; i < n; ++i) {
      int a = t.exp[i];
      if (a == 0 || point[i] == 0) continue;
      std::vector<WeylElement::Term> next;
      for (const auto& q : partial) {
        Rational pk = 1;
        for (int k = 0; k <= a; ++k) {
          // choose k factors of p_i, a-k factors of x_i
          Integer binom;
          mpz_bin_uiui(binom.get_mpz_t(), a, k);
          WeylElement::Term r = q;
          r.exp[i] = a - k;
          r.coef *= Rational(binom) * pk;
          next.push_back(std::move(r));
          pk *= point[i];
        }
      }
      partial = std::move(next);
    }
    terms.insert(terms.end(), partial.begin(), partial.end());
  }
  return WeylElement::from_terms(n, std::move(terms));
}

MultiPoly principal_symbol(const WeylElement& p) {
  const std::size_t n = p.nvars();
  int top = p.order();
  std::vector<MultiPoly::Term> terms;
  for (const auto& t : p.terms()) {
    int d = 0;
    for (std::size_t i = 0; i < n; ++i) d += t.exp[n + i];
    if (d == top) terms.push_back({t.exp, t.coef});
  }
  return MultiPoly::from_terms(2 * n, std::move(terms));
}

// ---------------------------------------------------------------------------

HomogenizedWeylElement HomogenizedWeylElement::homogenize(const WeylElement& p) {
  const std::size_t n = p.nvars();
  int top = 0;
  for (const auto& t : p.terms()) {
    int d = 0;
    for (int e : t.exp) d += e;
    top = std::max(top, d);
  }
  std::vector<Term> terms;
  for (const auto& t : p.terms()) {
    Exponents e = t.exp;
    int d = 0;
    for (int v : e) d += v;
    e.push_back(top - d);
    terms.push_back({std::move(e), t.coef});
  }
  return from_terms(n, std::move(terms));
}

HomogenizedWeylElement HomogenizedWeylElement::from_terms(std::size_t nvars,
                                                          std::vector<Term> terms) {
  for (const auto& t : terms)
    if (t.exp.size() != 2 * nvars + 1) throw UsageError("exponent length mismatch");
  HomogenizedWeylElement p(nvars);
  p.terms_ = canonical(std::move(terms));
  return p;
}

bool HomogenizedWeylElement::is_homogeneous() const {
  int deg = -1;
  for (const auto& t : terms_) {
    int d = 0;
    for (int e : t.exp) d += e;
    if (deg >= 0 && d != deg) return false;
    deg = d;
  }
  return true;
}

WeylElement HomogenizedWeylElement::dehomogenize() const {
  std::vector<WeylElement::Term> terms;
  for (const auto& t : terms_) {
    Exponents e(t.exp.begin(), t.exp.end() - 1);
    terms.push_back({std::move(e), t.coef});
  }
  return WeylElement::from_terms(nvars_, std::move(terms));
}

HomogenizedWeylElement operator*(const HomogenizedWeylElement& a,
                                 const HomogenizedWeylElement& b) {
  check_same(a.nvars_, b.nvars_);
  const std::size_t n = a.nvars_;
  std::vector<HomogenizedWeylElement::Term> terms;
  std::vector<detail::ProductTerm> buf;
  for (const auto& s : a.terms_) {
    for (const auto& t : b.terms_) {
      buf.clear();
      detail::expand_weyl_product(n, s.exp, t.exp, buf);
      for (auto& r : buf) {
        r.exp[2 * n] += 2 * r.mu_total;
        terms.push_back({std::move(r.exp), s.coef * t.coef * Rational(r.coef)});
      }
    }
  }
  return HomogenizedWeylElement::from_terms(n, std::move(terms));
}

bool operator==(const HomogenizedWeylElement& a, const HomogenizedWeylElement& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i)
    if (a.terms_[i].exp != b.terms_[i].exp || a.terms_[i].coef != b.terms_[i].coef) return false;
  return true;
}

}  // namespace dreg
