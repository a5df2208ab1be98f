#include "dreg/commutative.hpp"

#include <algorithm>

#include "detail/groebner_engine.hpp"
#include "dreg/errors.hpp"

namespace dreg {

namespace {

using detail::IPoly;

struct CommutativeAlgebra {
  const MonomialOrder& order;
  int compare(const Exponents& a, const Exponents& b) const { return order.compare(a, b); }
  IPoly mul_monomial(const Exponents& m, const IPoly& g) const {
    IPoly r = g;
    for (auto& t : r)
      for (std::size_t i = 0; i < m.size(); ++i) t.exp[i] += m[i];
    return r;
  }
  bool commutative() const { return true; }
};

IPoly to_ipoly(const MultiPoly& f, const MonomialOrder& order) {
  MultiPoly p = f.primitive();
  IPoly out;
  out.reserve(p.size());
  for (const auto& t : p.terms()) out.push_back({t.exp, t.coef.get_num()});
  std::sort(out.begin(), out.end(), [&](const detail::ITerm& a, const detail::ITerm& b) {
    return order.compare(a.exp, b.exp) > 0;
  });
  return out;
}

MultiPoly to_multipoly(const IPoly& p, std::size_t nvars, bool monic) {
  std::vector<MultiPoly::Term> terms;
  Rational scale = 1;
  if (monic && !p.empty()) scale = Rational(1) / Rational(p.front().coef);
  for (const auto& t : p) terms.push_back({t.exp, Rational(t.coef) * scale});
  return MultiPoly::from_terms(nvars, std::move(terms));
}

void check_ring(const std::vector<MultiPoly>& gens, std::size_t n) {
  for (const auto& g : gens)
    if (!g.is_zero() && g.nvars() != n)
      throw UsageError("generators live in rings of different dimension");
}

}  // namespace

bool CommutativeIdeal::is_unit() const {
  for (const auto& g : generators)
    if (!g.is_zero() && g.is_constant()) return true;
  return false;
}

std::vector<MultiPoly> groebner_commutative(const std::vector<MultiPoly>& generators,
                                            const MonomialOrder& order, const Deadline& deadline,
                                            GroebnerStats* stats) {
  check_ring(generators, order.nvars());
  std::vector<IPoly> input;
  for (const auto& g : generators)
    if (!g.is_zero()) input.push_back(to_ipoly(g, order));
  CommutativeAlgebra alg{order};
  detail::GroebnerEngine engine(alg, deadline, "commutative Groebner basis");
  auto basis = engine.run(std::move(input));
  if (stats) *stats = engine.stats();
  std::vector<MultiPoly> out;
  for (const auto& b : basis) out.push_back(to_multipoly(b, order.nvars(), true));
  return out;
}

MultiPoly reduce_primitive(const MultiPoly& f, const std::vector<MultiPoly>& basis,
                           const MonomialOrder& order) {
  if (f.is_zero()) return f;
  std::vector<IPoly> ib;
  for (const auto& b : basis) ib.push_back(to_ipoly(b, order));
  std::vector<const IPoly*> ptrs;
  for (const auto& b : ib) ptrs.push_back(&b);
  CommutativeAlgebra alg{order};
  detail::GroebnerEngine engine(alg, Deadline(), "normal form");
  return to_multipoly(engine.normal_form(to_ipoly(f, order), ptrs), f.nvars(), false);
}

bool ideal_contains(const std::vector<MultiPoly>& groebner_basis, const MultiPoly& f,
                    const MonomialOrder& order) {
  return reduce_primitive(f, groebner_basis, order).is_zero();
}

Exponents leading_exponent(const MultiPoly& f, const MonomialOrder& order) {
  const MultiPoly::Term* best = nullptr;
  for (const auto& t : f.terms())
    if (best == nullptr || order.compare(t.exp, best->exp) > 0) best = &t;
  if (best == nullptr) throw MathError("ZERO_POLYNOMIAL", "zero polynomial has no leading term");
  return best->exp;
}

namespace {

std::vector<MultiPoly> eliminate_block(const std::vector<MultiPoly>& gens, std::size_t n,
                                       const std::vector<bool>& drop) {
  auto order = MonomialOrder::elimination(drop);
  auto gb = groebner_commutative(gens, order);
  std::vector<MultiPoly> kept;
  for (const auto& g : gb) {
    bool free = true;
    for (std::size_t v = 0; v < n && free; ++v)
      if (drop[v] && g.involves(v)) free = false;
    if (free) kept.push_back(g);
  }
  return kept;
}

std::vector<int> identity_map(std::size_t n) {
  std::vector<int> m(n);
  for (std::size_t i = 0; i < n; ++i) m[i] = static_cast<int>(i);
  return m;
}

CommutativeIdeal reduced_degrevlex(std::size_t n, const std::vector<MultiPoly>& gens) {
  CommutativeIdeal out{n, groebner_commutative(gens, MonomialOrder::degrevlex(n))};
  return out;
}

}  // namespace

CommutativeIdeal intersect(const CommutativeIdeal& a, const CommutativeIdeal& b) {
  const std::size_t n = a.nvars;
  if (a.is_unit()) return b;
  if (b.is_unit()) return a;
  if (a.is_zero() || b.is_zero()) return CommutativeIdeal{n, {}};
  // Variable t is appended as index n.
  auto lift = identity_map(n);
  MultiPoly t = MultiPoly::variable(n + 1, n);
  MultiPoly one_minus_t = MultiPoly::constant(n + 1, 1) - t;
  std::vector<MultiPoly> gens;
  for (const auto& g : a.generators) gens.push_back(t * g.remap(lift, n + 1));
  for (const auto& g : b.generators) gens.push_back(one_minus_t * g.remap(lift, n + 1));
  std::vector<bool> drop(n + 1, false);
  drop[n] = true;
  auto kept = eliminate_block(gens, n + 1, drop);
  std::vector<int> down = identity_map(n + 1);
  down[n] = -1;
  std::vector<MultiPoly> res;
  for (const auto& g : kept) res.push_back(g.remap(down, n));
  return reduced_degrevlex(n, res);
}

CommutativeIdeal saturate_and_eliminate(const CommutativeIdeal& ideal,
                                        const std::vector<std::size_t>& saturate_by,
                                        const std::vector<std::size_t>& eliminate) {
  const std::size_t n = ideal.nvars;
  check_ring(ideal.generators, n);
  for (auto v : saturate_by)
    if (v >= n) throw UsageError("saturation variable out of range");
  for (auto v : eliminate)
    if (v >= n) throw UsageError("elimination variable out of range");

  std::vector<bool> drop(n + 1, false);
  for (auto v : eliminate) drop[v] = true;

  if (saturate_by.empty()) {
    std::vector<bool> d(drop.begin(), drop.end() - 1);
    return reduced_degrevlex(n, eliminate_block(ideal.generators, n, d));
  }

  // (I : <v_1..v_k>^inf) = intersection of (I : v_i^inf), and
  // (I : v^inf) ∩ subring = (I + <1 - t v>) ∩ subring.
  auto lift = identity_map(n);
  std::vector<int> down = identity_map(n + 1);
  down[n] = -1;
  drop[n] = true;
  CommutativeIdeal result{n, {MultiPoly::constant(n, 1)}};
  for (auto v : saturate_by) {
    std::vector<MultiPoly> gens;
    for (const auto& g : ideal.generators)
      if (!g.is_zero()) gens.push_back(g.remap(lift, n + 1));
    gens.push_back(MultiPoly::constant(n + 1, 1) -
                   MultiPoly::variable(n + 1, n) * MultiPoly::variable(n + 1, v));
    auto kept = eliminate_block(gens, n + 1, drop);
    CommutativeIdeal part{n, {}};
    for (const auto& g : kept) part.generators.push_back(g.remap(down, n));
    result = intersect(result, part);
  }
  return reduced_degrevlex(n, result.generators);
}

CommutativeIdeal saturate(const CommutativeIdeal& ideal, const std::vector<MultiPoly>& by) {
  const std::size_t n = ideal.nvars;
  check_ring(ideal.generators, n);
  check_ring(by, n);
  std::vector<bool> drop(n + 1, false);
  drop[n] = true;
  auto lift = identity_map(n);
  std::vector<int> down = identity_map(n + 1);
  down[n] = -1;
  CommutativeIdeal result{n, {MultiPoly::constant(n, 1)}};
  bool any = false;
  for (const auto& h : by) {
    if (h.is_zero()) continue;
    any = true;
    if (h.is_constant()) return reduced_degrevlex(n, ideal.generators);
    std::vector<MultiPoly> gens;
    for (const auto& g : ideal.generators)
      if (!g.is_zero()) gens.push_back(g.remap(lift, n + 1));
    gens.push_back(MultiPoly::constant(n + 1, 1) -
                   MultiPoly::variable(n + 1, n) * h.remap(lift, n + 1));
    auto kept = eliminate_block(gens, n + 1, drop);
    CommutativeIdeal part{n, {}};
    for (const auto& g : kept) part.generators.push_back(g.remap(down, n));
    result = intersect(result, part);
  }
  if (!any) return CommutativeIdeal{n, {MultiPoly::constant(n, 1)}};
  return reduced_degrevlex(n, result.generators);
}

}  // namespace dreg
