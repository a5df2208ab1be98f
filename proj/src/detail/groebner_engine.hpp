#pragma once

// Buchberger machinery shared by the commutative and Weyl engines.
// Polynomials are integer-coefficient term lists sorted descending under the
// algebra's order; every stored polynomial is primitive.

#include <algorithm>
#include <vector>

#include "dreg/budget.hpp"
#include "dreg/monomial_order.hpp"
#include "dreg/rational.hpp"

namespace dreg::detail {

struct ITerm {
  Exponents exp;
  Integer coef;
};
using IPoly = std::vector<ITerm>;

inline bool divides(const Exponents& a, const Exponents& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

inline Exponents exp_lcm(const Exponents& a, const Exponents& b) {
  Exponents l(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) l[i] = std::max(a[i], b[i]);
  return l;
}

inline Exponents exp_sub(const Exponents& a, const Exponents& b) {
  Exponents d(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) d[i] = a[i] - b[i];
  return d;
}

inline bool coprime(const Exponents& a, const Exponents& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > 0 && b[i] > 0) return false;
  return true;
}

// Divide out the integer content; leading coefficient made positive.
inline void make_primitive(IPoly& p) {
  if (p.empty()) return;
  Integer g = 0;
  for (const auto& t : p) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.coef.get_mpz_t());
    if (g == 1) break;
  }
  if (p.front().coef < 0) g = -g;
  if (g == 1) return;
  for (auto& t : p) mpz_divexact(t.coef.get_mpz_t(), t.coef.get_mpz_t(), g.get_mpz_t());
}

template <class Compare>
void sort_and_merge(IPoly& p, const Compare& cmp) {
  std::sort(p.begin(), p.end(),
            [&](const ITerm& a, const ITerm& b) { return cmp(a.exp, b.exp) > 0; });
  IPoly out;
  out.reserve(p.size());
  for (auto& t : p) {
    if (!out.empty() && out.back().exp == t.exp) {
      out.back().coef += t.coef;
      if (out.back().coef == 0) out.pop_back();
    } else if (t.coef != 0) {
      out.push_back(std::move(t));
    }
  }
  p = std::move(out);
}

// a*p - b*q for sorted p, q.
template <class Compare>
IPoly combine(const Integer& a, const IPoly& p, const Integer& b, const IPoly& q,
              const Compare& cmp) {
  IPoly out;
  out.reserve(p.size() + q.size());
  std::size_t i = 0, j = 0;
  while (i < p.size() || j < q.size()) {
    int c = i == p.size()   ? -1
            : j == q.size() ? 1
                            : cmp(p[i].exp, q[j].exp);
    if (c > 0) {
      out.push_back({p[i].exp, a * p[i].coef});
      ++i;
    } else if (c < 0) {
      out.push_back({q[j].exp, -b * q[j].coef});
      ++j;
    } else {
      Integer s = a * p[i].coef - b * q[j].coef;
      if (s != 0) out.push_back({p[i].exp, std::move(s)});
      ++i;
      ++j;
    }
  }
  return out;
}

// Critical pair bookkeeping with the Gebauer–Möller criteria. The product
// criterion is only sound for commutative rings and is switched off
// otherwise; the chain criteria hold in the Weyl algebra too.
class PairSet {
 public:
  struct Pair {
    std::size_t i, j;
    Exponents lcm;
  };

  explicit PairSet(bool product_criterion) : product_criterion_(product_criterion) {}

  bool empty() const { return pairs_.empty(); }
  std::size_t size() const { return pairs_.size(); }

  // Register element h (already appended to `leads`) against the active
  // elements, pruning pairs, and deactivate elements made redundant by h.
  void update(std::size_t h, const std::vector<Exponents>& leads,
              std::vector<bool>& active, GroebnerStats& stats) {
    const Exponents& lh = leads[h];
    std::vector<Pair> c;
    for (std::size_t g = 0; g < h; ++g)
      if (active[g]) c.push_back({g, h, exp_lcm(leads[g], lh)});
    std::vector<Pair> d;
    for (std::size_t k = 0; k < c.size(); ++k) {
      bool keep = product_criterion_ && coprime(leads[c[k].i], lh);
      if (!keep) {
        keep = true;
        for (std::size_t m = k + 1; m < c.size() && keep; ++m)
          if (divides(c[m].lcm, c[k].lcm)) keep = false;
        for (std::size_t m = 0; m < d.size() && keep; ++m)
          if (divides(d[m].lcm, c[k].lcm)) keep = false;
      }
      if (keep) d.push_back(std::move(c[k]));
    }
    std::vector<Pair> kept;
    for (auto& p : pairs_) {
      bool drop = divides(lh, p.lcm) && exp_lcm(leads[p.i], lh) != p.lcm &&
                  exp_lcm(leads[p.j], lh) != p.lcm;
      if (!drop) kept.push_back(std::move(p));
    }
    for (auto& p : d) {
      if (product_criterion_ && coprime(leads[p.i], lh)) continue;
      kept.push_back(std::move(p));
      ++stats.pairs_created;
    }
    pairs_ = std::move(kept);
    for (std::size_t g = 0; g < h; ++g)
      if (active[g] && divides(lh, leads[g])) active[g] = false;
    active[h] = true;
  }

  // Normal selection strategy: smallest lcm first, ties by index.
  template <class Compare>
  Pair pop_min(const Compare& cmp) {
    std::size_t best = 0;
    for (std::size_t k = 1; k < pairs_.size(); ++k) {
      int c = cmp(pairs_[k].lcm, pairs_[best].lcm);
      if (c < 0 || (c == 0 && std::tie(pairs_[k].i, pairs_[k].j) <
                                  std::tie(pairs_[best].i, pairs_[best].j)))
        best = k;
    }
    Pair p = std::move(pairs_[best]);
    pairs_.erase(pairs_.begin() + static_cast<std::ptrdiff_t>(best));
    return p;
  }

 private:
  bool product_criterion_;
  std::vector<Pair> pairs_;
};

// Algebra requirements:
//   int compare(const Exponents&, const Exponents&) const;
//   IPoly mul_monomial(const Exponents& m, const IPoly& g) const;  (left)
//   bool commutative() const;
template <class Algebra>
class GroebnerEngine {
 public:
  GroebnerEngine(const Algebra& alg, const Deadline& deadline, const char* stage)
      : alg_(alg), deadline_(deadline), stage_(stage) {}

  // Full fraction-free normal form of p modulo `basis`; the result is
  // primitive. Only the ray of p is meaningful.
  IPoly normal_form(IPoly p, const std::vector<const IPoly*>& basis) const {
    auto cmp = [this](const Exponents& a, const Exponents& b) { return alg_.compare(a, b); };
    IPoly rem;
    std::size_t steps = 0;
    while (!p.empty()) {
      const IPoly* red = nullptr;
      for (const IPoly* g : basis)
        if (divides(g->front().exp, p.front().exp)) {
          red = g;
          break;
        }
      if (red == nullptr) {
        rem.push_back(std::move(p.front()));
        p.erase(p.begin());
        continue;
      }
      IPoly q = alg_.mul_monomial(exp_sub(p.front().exp, red->front().exp), *red);
      Integer a = q.front().coef, c = p.front().coef, g;
      mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), c.get_mpz_t());
      a /= g;
      c /= g;
      p = combine(a, p, c, q, cmp);
      if (a != 1)
        for (auto& t : rem) t.coef *= a;
      if (++steps % 8 == 0) {
        IPoly both = rem;
        both.insert(both.end(), p.begin(), p.end());
        Integer content = 0;
        for (const auto& t : both) mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), t.coef.get_mpz_t());
        if (content > 1) {
          for (auto& t : p) mpz_divexact(t.coef.get_mpz_t(), t.coef.get_mpz_t(), content.get_mpz_t());
          for (auto& t : rem) mpz_divexact(t.coef.get_mpz_t(), t.coef.get_mpz_t(), content.get_mpz_t());
        }
        deadline_.check(stage_, stats_);
      }
    }
    make_primitive(rem);
    return rem;
  }

  // Reduced Gröbner basis, each element primitive, sorted by leading
  // monomial ascending. The unit ideal yields {1}; no input yields {}.
  std::vector<IPoly> run(std::vector<IPoly> input) {
    auto cmp = [this](const Exponents& a, const Exponents& b) { return alg_.compare(a, b); };
    std::vector<IPoly> store;
    std::vector<Exponents> leads;
    std::vector<bool> active;
    PairSet pairs(alg_.commutative());

    auto active_basis = [&] {
      std::vector<const IPoly*> b;
      for (std::size_t k = 0; k < store.size(); ++k)
        if (active[k]) b.push_back(&store[k]);
      return b;
    };
    auto add = [&](IPoly h) -> bool {
      make_primitive(h);
      bool unit = true;
      for (int e : h.front().exp)
        if (e) unit = false;
      store.push_back(std::move(h));
      leads.push_back(store.back().front().exp);
      active.push_back(true);
      stats_.basis_size = store.size();
      pairs.update(store.size() - 1, leads, active, stats_);
      return unit;
    };

    for (auto& f : input) {
      sort_and_merge(f, cmp);
      if (f.empty()) continue;
      IPoly h = normal_form(std::move(f), active_basis());
      if (h.empty()) continue;
      if (add(std::move(h))) return {unit_poly(leads.back().size())};
    }
    while (!pairs.empty()) {
      deadline_.check(stage_, stats_);
      auto p = pairs.pop_min(cmp);
      ++stats_.pairs_reduced;
      const IPoly& f = store[p.i];
      const IPoly& g = store[p.j];
      IPoly sf = alg_.mul_monomial(exp_sub(p.lcm, f.front().exp), f);
      IPoly sg = alg_.mul_monomial(exp_sub(p.lcm, g.front().exp), g);
      Integer a = sg.front().coef, b = sf.front().coef, gg;
      mpz_gcd(gg.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
      IPoly s = combine(Integer(a / gg), sf, Integer(b / gg), sg, cmp);
      IPoly h = normal_form(std::move(s), active_basis());
      if (h.empty()) {
        ++stats_.zero_reductions;
        continue;
      }
      if (add(std::move(h))) return {unit_poly(leads.back().size())};
    }

    // Interreduce the minimal basis.
    std::vector<IPoly> minimal;
    for (std::size_t k = 0; k < store.size(); ++k)
      if (active[k]) minimal.push_back(store[k]);
    std::sort(minimal.begin(), minimal.end(),
              [&](const IPoly& a, const IPoly& b) { return cmp(a.front().exp, b.front().exp) < 0; });
    std::vector<IPoly> reduced;
    for (std::size_t k = 0; k < minimal.size(); ++k) {
      std::vector<const IPoly*> others;
      for (std::size_t m = 0; m < minimal.size(); ++m)
        if (m != k) others.push_back(&minimal[m]);
      IPoly head{minimal[k].front()};
      IPoly tail(minimal[k].begin() + 1, minimal[k].end());
      IPoly t = tail_reduce(std::move(head), std::move(tail), others);
      reduced.push_back(std::move(t));
    }
    for (std::size_t k = 0; k < reduced.size(); ++k) minimal[k] = reduced[k];
    return reduced;
  }

  const GroebnerStats& stats() const { return stats_; }

 private:
  static IPoly unit_poly(std::size_t width) { return {ITerm{Exponents(width, 0), Integer(1)}}; }

  // Reduce the tail of head+tail (leading term kept) modulo others.
  IPoly tail_reduce(IPoly head, IPoly tail, const std::vector<const IPoly*>& others) const {
    auto cmp = [this](const Exponents& a, const Exponents& b) { return alg_.compare(a, b); };
    Integer scale = 1;
    IPoly rem;
    IPoly p = std::move(tail);
    while (!p.empty()) {
      const IPoly* red = nullptr;
      for (const IPoly* g : others)
        if (divides(g->front().exp, p.front().exp)) {
          red = g;
          break;
        }
      if (red == nullptr) {
        rem.push_back(std::move(p.front()));
        p.erase(p.begin());
        continue;
      }
      IPoly q = alg_.mul_monomial(exp_sub(p.front().exp, red->front().exp), *red);
      Integer a = q.front().coef, c = p.front().coef, g;
      mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), c.get_mpz_t());
      a /= g;
      c /= g;
      p = combine(a, p, c, q, cmp);
      for (auto& t : rem) t.coef *= a;
      scale *= a;
    }
    for (auto& t : head) t.coef *= scale;
    head.insert(head.end(), rem.begin(), rem.end());
    make_primitive(head);
    return head;
  }

  const Algebra& alg_;
  Deadline deadline_;
  const char* stage_;
  mutable GroebnerStats stats_;
};

}  // namespace dreg::detail
