#include "dreg/multipoly.hpp"

#include <algorithm>
#include <cassert>

#include "dreg/errors.hpp"

namespace dreg {

namespace {

bool term_greater(const MultiPoly::Term& a, const MultiPoly::Term& b) {
  return degrevlex_compare(a.exp, b.exp) > 0;
}

void check_same_ring(const MultiPoly& a, const MultiPoly& b) {
  if (a.nvars() != b.nvars())
    throw UsageError("polynomials live in rings of different dimension");
}

// Merge two sorted term lists: a + sign * b.
std::vector<MultiPoly::Term> merge_terms(const std::vector<MultiPoly::Term>& a,
                                         const std::vector<MultiPoly::Term>& b,
                                         bool subtract) {
  std::vector<MultiPoly::Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    int c = i == a.size()   ? -1
            : j == b.size() ? 1
                            : degrevlex_compare(a[i].exp, b[j].exp);
    if (c > 0) {
      out.push_back(a[i++]);
    } else if (c < 0) {
      out.push_back(b[j++]);
      if (subtract) out.back().coef = -out.back().coef;
    } else {
      Rational s = subtract ? Rational(a[i].coef - b[j].coef)
                            : Rational(a[i].coef + b[j].coef);
      if (s != 0) out.push_back({a[i].exp, s});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

std::vector<std::string> default_names(std::size_t n, const std::string& stem) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back(stem + std::to_string(i + 1));
  return names;
}

MultiPoly MultiPoly::constant(std::size_t nvars, const Rational& c) {
  MultiPoly p(nvars);
  if (c != 0) p.terms_.push_back({Exponents(nvars, 0), c});
  return p;
}

MultiPoly MultiPoly::variable(std::size_t nvars, std::size_t index) {
  if (index >= nvars) throw UsageError("variable index out of range");
  Exponents e(nvars, 0);
  e[index] = 1;
  return monomial(std::move(e), 1);
}

MultiPoly MultiPoly::monomial(Exponents exp, const Rational& c) {
  MultiPoly p(exp.size());
  if (c != 0) p.terms_.push_back({std::move(exp), c});
  return p;
}

MultiPoly MultiPoly::from_terms(std::size_t nvars, std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), term_greater);
  MultiPoly p(nvars);
  for (auto& t : terms) {
    if (t.exp.size() != nvars) throw UsageError("exponent length mismatch");
    if (!p.terms_.empty() && p.terms_.back().exp == t.exp) {
      p.terms_.back().coef += t.coef;
      if (p.terms_.back().coef == 0) p.terms_.pop_back();
    } else if (t.coef != 0) {
      p.terms_.push_back(std::move(t));
    }
  }
  return p;
}

bool MultiPoly::is_constant() const {
  return terms_.empty() ||
         (terms_.size() == 1 &&
          std::all_of(terms_[0].exp.begin(), terms_[0].exp.end(),
                      [](int e) { return e == 0; }));
}

bool MultiPoly::is_one() const {
  return is_constant() && !terms_.empty() && terms_[0].coef == 1;
}

Rational MultiPoly::constant_coefficient() const {
  if (!terms_.empty() && std::all_of(terms_.back().exp.begin(),
                                     terms_.back().exp.end(),
                                     [](int e) { return e == 0; }))
    return terms_.back().coef;
  return 0;
}

int MultiPoly::total_degree() const {
  // degrevlex puts the largest total degree first.
  if (terms_.empty()) return -1;
  int d = 0;
  for (int e : terms_.front().exp) d += e;
  return d;
}

int MultiPoly::degree(std::size_t var) const {
  int d = terms_.empty() ? -1 : 0;
  for (const auto& t : terms_) d = std::max(d, t.exp[var]);
  return d;
}

int MultiPoly::min_degree(std::size_t var) const {
  if (terms_.empty()) return 0;
  int d = terms_.front().exp[var];
  for (const auto& t : terms_) d = std::min(d, t.exp[var]);
  return d;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r = *this;
  for (auto& t : r.terms_) t.coef = -t.coef;
  return r;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  check_same_ring(*this, o);
  terms_ = merge_terms(terms_, o.terms_, false);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = -o;
  check_same_ring(*this, o);
  terms_ = merge_terms(terms_, o.terms_, true);
  return *this;
}

MultiPoly& MultiPoly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.coef *= c;
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  if (a.is_zero() || b.is_zero()) return MultiPoly(std::max(a.nvars(), b.nvars()));
  check_same_ring(a, b);
  if (b.size() == 1) {
    MultiPoly r = a.shift_monomial(b.terms_[0].exp);
    return r *= b.terms_[0].coef;
  }
  if (a.size() == 1) {
    MultiPoly r = b.shift_monomial(a.terms_[0].exp);
    return r *= a.terms_[0].coef;
  }
  std::vector<MultiPoly::Term> terms;
  terms.reserve(a.size() * b.size());
  const std::size_t n = a.nvars();
  for (const auto& s : a.terms_) {
    for (const auto& t : b.terms_) {
      Exponents e(n);
      for (std::size_t i = 0; i < n; ++i) e[i] = s.exp[i] + t.exp[i];
      terms.push_back({std::move(e), s.coef * t.coef});
    }
  }
  return MultiPoly::from_terms(n, std::move(terms));
}

bool operator==(const MultiPoly& a, const MultiPoly& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  if (a.terms_.empty()) return true;
  if (a.nvars_ != b.nvars_) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i)
    if (a.terms_[i].exp != b.terms_[i].exp || a.terms_[i].coef != b.terms_[i].coef)
      return false;
  return true;
}

MultiPoly MultiPoly::pow(unsigned k) const {
  MultiPoly result = constant(nvars_, 1);
  MultiPoly base = *this;
  while (k) {
    if (k & 1u) result = result * base;
    k >>= 1u;
    if (k) base = base * base;
  }
  return result;
}

MultiPoly MultiPoly::derivative(std::size_t var) const {
  std::vector<Term> terms;
  for (const auto& t : terms_) {
    if (t.exp[var] == 0) continue;
    Term d = t;
    d.coef *= t.exp[var];
    d.exp[var] -= 1;
    terms.push_back(std::move(d));
  }
  return from_terms(nvars_, std::move(terms));
}

MultiPoly MultiPoly::shift_monomial(const Exponents& by) const {
  // Multiplying by a monomial preserves degrevlex order.
  MultiPoly r = *this;
  for (auto& t : r.terms_)
    for (std::size_t i = 0; i < by.size(); ++i) t.exp[i] += by[i];
  return r;
}

Rational MultiPoly::evaluate(std::span<const Rational> point) const {
  if (point.size() != nvars_) throw UsageError("point has wrong dimension");
  Rational sum = 0;
  for (const auto& t : terms_) {
    Rational v = t.coef;
    for (std::size_t i = 0; i < nvars_; ++i) {
      if (t.exp[i] == 0) continue;
      Rational p;
      mpz_pow_ui(p.get_num_mpz_t(), point[i].get_num_mpz_t(), t.exp[i]);
      mpz_pow_ui(p.get_den_mpz_t(), point[i].get_den_mpz_t(), t.exp[i]);
      v *= p;
    }
    sum += v;
  }
  return sum;
}

MultiPoly MultiPoly::substitute(std::size_t var, const MultiPoly& value) const {
  auto coeffs = coefficients_in(var);
  MultiPoly result(nvars_);
  // Horner in the exponent of var.
  int prev = -1;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
    if (prev >= 0) result = result * value.pow(static_cast<unsigned>(prev - it->first));
    result += it->second;
    prev = it->first;
  }
  if (prev > 0) result = result * value.pow(static_cast<unsigned>(prev));
  return result;
}

MultiPoly MultiPoly::substitute(std::size_t var, const Rational& value) const {
  std::vector<Term> terms;
  terms.reserve(terms_.size());
  for (const auto& t : terms_) {
    Term s = t;
    if (s.exp[var] > 0) {
      Rational p;
      mpz_pow_ui(p.get_num_mpz_t(), value.get_num_mpz_t(), s.exp[var]);
      mpz_pow_ui(p.get_den_mpz_t(), value.get_den_mpz_t(), s.exp[var]);
      s.coef *= p;
      s.exp[var] = 0;
    }
    terms.push_back(std::move(s));
  }
  return from_terms(nvars_, std::move(terms));
}

MultiPoly MultiPoly::compose(const std::vector<MultiPoly>& images,
                             std::size_t target_nvars) const {
  if (images.size() != nvars_) throw UsageError("compose: wrong image count");
  std::vector<std::vector<MultiPoly>> powers(nvars_);
  MultiPoly result(target_nvars);
  for (const auto& t : terms_) {
    MultiPoly m = constant(target_nvars, t.coef);
    for (std::size_t i = 0; i < nvars_; ++i) {
      int e = t.exp[i];
      if (e == 0) continue;
      auto& pw = powers[i];
      if (pw.empty()) pw.push_back(constant(target_nvars, 1));
      while (static_cast<int>(pw.size()) <= e) pw.push_back(pw.back() * images[i]);
      m = m * pw[e];
    }
    result += m;
  }
  return result;
}

std::map<int, MultiPoly> MultiPoly::coefficients_in(std::size_t var) const {
  std::map<int, std::vector<Term>> buckets;
  for (const auto& t : terms_) {
    Term s = t;
    int e = s.exp[var];
    s.exp[var] = 0;
    buckets[e].push_back(std::move(s));
  }
  std::map<int, MultiPoly> out;
  for (auto& [e, terms] : buckets) {
    // Zeroing one variable keeps the relative degrevlex order of the rest
    // only within equal exponents of var, which is what each bucket holds.
    MultiPoly p(nvars_);
    p.terms_ = std::move(terms);
    out.emplace(e, std::move(p));
  }
  return out;
}

MultiPoly MultiPoly::remap(const std::vector<int>& map, std::size_t target_nvars) const {
  std::vector<Term> terms;
  for (const auto& t : terms_) {
    Exponents e(target_nvars, 0);
    for (std::size_t i = 0; i < nvars_; ++i) {
      if (t.exp[i] == 0) continue;
      if (map[i] < 0) throw UsageError("remap drops a variable that occurs");
      e[map[i]] += t.exp[i];
    }
    terms.push_back({std::move(e), t.coef});
  }
  return from_terms(target_nvars, std::move(terms));
}

Rational rational_content(const MultiPoly& f) {
  if (f.is_zero()) return 0;
  Integer g = 0, l = 1;
  for (const auto& t : f.terms()) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.coef.get_num_mpz_t());
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), t.coef.get_den_mpz_t());
  }
  Rational c(g, l);
  c.canonicalize();
  return c;
}

MultiPoly MultiPoly::primitive() const {
  if (is_zero()) return *this;
  Rational c = rational_content(*this);
  if (terms_.front().coef < 0) c = -c;
  if (c == 1) return *this;
  MultiPoly r = *this;
  Rational inv = 1 / c;
  for (auto& t : r.terms_) t.coef *= inv;
  return r;
}

MultiPoly MultiPoly::monic() const {
  if (is_zero() || terms_.front().coef == 1) return *this;
  MultiPoly r = *this;
  Rational inv = 1 / terms_.front().coef;
  for (auto& t : r.terms_) t.coef *= inv;
  return r;
}

std::string MultiPoly::to_string(const std::vector<std::string>& names) const {
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
    for (std::size_t i = 0; i < nvars_; ++i) {
      if (t.exp[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += names.at(i);
      if (t.exp[i] > 1) mono += "^" + std::to_string(t.exp[i]);
    }
    if (mono.empty()) {
      s += dreg::to_string(c);
    } else if (c == 1) {
      s += mono;
    } else {
      s += dreg::to_string(c) + "*" + mono;
    }
  }
  return s;
}

std::string MultiPoly::to_string() const { return to_string(default_names(nvars_)); }

// ---------------------------------------------------------------------------
// Division and gcd.

std::optional<MultiPoly> exact_divide(const MultiPoly& a, const MultiPoly& b) {
  if (b.is_zero()) throw MathError("DIVISION_BY_ZERO", "division by the zero polynomial");
  if (a.is_zero()) return MultiPoly(b.nvars());
  check_same_ring(a, b);
  const std::size_t n = a.nvars();
  const auto& lb = b.leading();
  if (b.size() == 1) {
    std::vector<MultiPoly::Term> terms;
    Rational inv = 1 / lb.coef;
    for (const auto& t : a.terms()) {
      Exponents e(n);
      for (std::size_t i = 0; i < n; ++i) {
        e[i] = t.exp[i] - lb.exp[i];
        if (e[i] < 0) return std::nullopt;
      }
      terms.push_back({std::move(e), t.coef * inv});
    }
    MultiPoly q(n);
    q = MultiPoly::from_terms(n, std::move(terms));
    return q;
  }
  MultiPoly r = a;
  std::vector<MultiPoly::Term> quotient;
  while (!r.is_zero()) {
    const auto& lr = r.leading();
    Exponents e(n);
    for (std::size_t i = 0; i < n; ++i) {
      e[i] = lr.exp[i] - lb.exp[i];
      if (e[i] < 0) return std::nullopt;
    }
    Rational c = lr.coef / lb.coef;
    MultiPoly step = b.shift_monomial(e);
    step *= c;
    r -= step;
    quotient.push_back({std::move(e), c});
  }
  return MultiPoly::from_terms(n, std::move(quotient));
}

namespace {

int main_variable(const MultiPoly& a, const MultiPoly& b) {
  for (std::size_t v = a.nvars(); v-- > 0;)
    if (a.involves(v) || b.involves(v)) return static_cast<int>(v);
  return -1;
}

MultiPoly primitive_part_in(const MultiPoly& f, std::size_t var) {
  MultiPoly c = content_in(f, var);
  if (c.is_constant()) return f.primitive();
  return exact_divide(f, c)->primitive();
}

// Sparse pseudo-remainder of a by b in `var`; a scalar (in the other
// variables) multiple of the classical one, sufficient for gcd purposes.
MultiPoly pseudo_remainder(MultiPoly a, const MultiPoly& b, std::size_t var) {
  const int db = b.degree(var);
  MultiPoly lb = b.coefficients_in(var).rbegin()->second;
  while (!a.is_zero() && a.degree(var) >= db) {
    auto ca = a.coefficients_in(var);
    int da = ca.rbegin()->first;
    const MultiPoly& la = ca.rbegin()->second;
    MultiPoly g = gcd(la, lb);
    MultiPoly fa = *exact_divide(lb, g);
    MultiPoly fb = *exact_divide(la, g);
    Exponents shift(a.nvars(), 0);
    shift[var] = da - db;
    a = fa * a - fb * b.shift_monomial(shift);
    a = a.primitive();
  }
  return a;
}

}  // namespace

MultiPoly content_in(const MultiPoly& f, std::size_t var) {
  if (f.is_zero()) return f;
  auto coeffs = f.coefficients_in(var);
  // Fold smallest first: small polys make the running gcd collapse early.
  std::vector<const MultiPoly*> order;
  for (const auto& [e, c] : coeffs) order.push_back(&c);
  std::sort(order.begin(), order.end(),
            [](const MultiPoly* a, const MultiPoly* b) { return a->size() < b->size(); });
  MultiPoly g(f.nvars());
  for (const MultiPoly* c : order) {
    g = gcd(g, *c);
    if (g.is_constant()) return MultiPoly::constant(f.nvars(), 1);
  }
  return g;
}

MultiPoly gcd(const MultiPoly& a, const MultiPoly& b) {
  if (a.is_zero()) return b.primitive();
  if (b.is_zero()) return a.primitive();
  check_same_ring(a, b);
  const std::size_t n = a.nvars();
  if (a.is_constant() || b.is_constant()) return MultiPoly::constant(n, 1);
  if (a.size() == 1 && b.size() == 1) {
    Exponents e(n);
    for (std::size_t i = 0; i < n; ++i)
      e[i] = std::min(a.leading().exp[i], b.leading().exp[i]);
    return MultiPoly::monomial(std::move(e), 1);
  }
  MultiPoly pa = a.primitive(), pb = b.primitive();
  if (pa == pb) return pa;
  // Monomial against polynomial: only the common monomial factor survives.
  if (pa.size() == 1 || pb.size() == 1) {
    const MultiPoly& m = pa.size() == 1 ? pa : pb;
    const MultiPoly& p = pa.size() == 1 ? pb : pa;
    Exponents e(n);
    for (std::size_t i = 0; i < n; ++i) e[i] = std::min(m.leading().exp[i], p.min_degree(i));
    return MultiPoly::monomial(std::move(e), 1);
  }
  if (pa.total_degree() >= pb.total_degree()) {
    if (exact_divide(pa, pb)) return pb;
  } else if (exact_divide(pb, pa)) {
    return pa;
  }
  int v = main_variable(pa, pb);
  if (!pa.involves(v)) return gcd(pa, content_in(pb, v));
  if (!pb.involves(v)) return gcd(content_in(pa, v), pb);
  MultiPoly ca = content_in(pa, v), cb = content_in(pb, v);
  MultiPoly c = gcd(ca, cb);
  MultiPoly f = ca.is_constant() ? pa : *exact_divide(pa, ca);
  MultiPoly g = cb.is_constant() ? pb : *exact_divide(pb, cb);
  if (f.degree(v) < g.degree(v)) std::swap(f, g);
  while (true) {
    MultiPoly r = pseudo_remainder(f, g, v);
    if (r.is_zero()) break;
    if (!r.involves(v)) {
      g = MultiPoly::constant(n, 1);
      break;
    }
    f = std::move(g);
    g = primitive_part_in(r, v);
  }
  g = primitive_part_in(g, v);
  return (c * g).primitive();
}

MultiPoly gcd(const std::vector<MultiPoly>& polys) {
  if (polys.empty()) return MultiPoly();
  MultiPoly g(polys.front().nvars());
  for (const auto& p : polys) {
    g = gcd(g, p);
    if (!g.is_zero() && g.is_constant()) return g;
  }
  return g;
}

MultiPoly lcm(const MultiPoly& a, const MultiPoly& b) {
  if (a.is_zero() || b.is_zero()) return MultiPoly(a.nvars());
  MultiPoly g = gcd(a, b);
  return (*exact_divide(a, g) * b).primitive();
}

}  // namespace dreg
