#include "dreg/factor.hpp"

#include <algorithm>
#include <limits>

#include "dreg/errors.hpp"

namespace dreg {

namespace {

using FactorList = std::vector<std::pair<MultiPoly, int>>;

// Yun's squarefree decomposition of f (primitive in var, char 0).
FactorList yun(const MultiPoly& f, std::size_t var) {
  FactorList out;
  MultiPoly df = f.derivative(var);
  MultiPoly a = gcd(f, df);
  MultiPoly b = *exact_divide(f, a);
  MultiPoly c = *exact_divide(df, a);
  MultiPoly d = c - b.derivative(var);
  int i = 1;
  while (!b.is_constant()) {
    MultiPoly ai = gcd(b, d);
    if (!ai.is_constant()) out.emplace_back(ai, i);
    MultiPoly nb = *exact_divide(b, ai);
    MultiPoly nc = *exact_divide(d, ai);
    d = nc - nb.derivative(var);
    b = std::move(nb);
    ++i;
  }
  return out;
}

void split(MultiPoly f, int mult, FactorList& out) {
  f = f.primitive();
  if (f.is_constant()) return;
  const std::size_t n = f.nvars();
  for (std::size_t v = 0; v < n; ++v) {
    int k = f.min_degree(v);
    if (k == 0) continue;
    out.emplace_back(MultiPoly::variable(n, v), mult * k);
    Exponents e(n, 0);
    e[v] = k;
    f = *exact_divide(f, MultiPoly::monomial(e, 1));
  }
  if (f.is_constant()) return;
  for (std::size_t v = 0; v < n; ++v) {
    if (!f.involves(v)) continue;
    MultiPoly c = content_in(f, v);
    if (!c.is_constant()) {
      split(c, mult, out);
      split(*exact_divide(f, c), mult, out);
      return;
    }
  }
  std::size_t main = n;
  for (std::size_t v = n; v-- > 0;)
    if (f.involves(v)) {
      main = v;
      break;
    }
  FactorList parts = yun(f, main);
  if (parts.size() == 1 && parts[0].second == 1) {
    out.emplace_back(parts[0].first.primitive(), mult);
    return;
  }
  for (auto& [p, m] : parts) split(p, mult * m, out);
}

}  // namespace

std::vector<std::pair<MultiPoly, int>> squarefree_factors(const MultiPoly& f) {
  if (f.is_zero()) throw MathError("ZERO_POLYNOMIAL", "zero polynomial");
  FactorList raw;
  split(f, 1, raw);
  // Merge repeated factors (possible only for identical pieces).
  FactorList out;
  for (auto& [p, m] : raw) {
    auto it = std::find_if(out.begin(), out.end(), [&](const auto& q) { return q.first == p; });
    if (it != out.end())
      it->second += m;
    else
      out.emplace_back(p, m);
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.second != b.second) return a.second > b.second;
    int da = a.first.total_degree(), db = b.first.total_degree();
    if (da != db) return da < db;
    return a.first.to_string() < b.first.to_string();
  });
  return out;
}

MultiPoly squarefree_part(const MultiPoly& f) {
  MultiPoly p = MultiPoly::constant(f.nvars(), 1);
  for (const auto& [q, m] : squarefree_factors(f)) p = p * q;
  return p;
}

bool has_linear_variable(const MultiPoly& f) {
  for (std::size_t v = 0; v < f.nvars(); ++v)
    if (f.degree(v) == 1) return true;
  return false;
}

namespace {

constexpr unsigned long kMaxDivisorTarget = 1ul << 40;

std::vector<Integer> positive_divisors(const Integer& m) {
  Integer a = abs(m);
  if (a == 0) return {};
  if (a > kMaxDivisorTarget)
    throw ResourceError("rational root search: coefficient too large to factor");
  unsigned long x = a.get_ui();
  std::vector<std::pair<unsigned long, int>> primes;
  for (unsigned long p = 2; p * p <= x; ++p) {
    if (x % p) continue;
    int e = 0;
    while (x % p == 0) {
      x /= p;
      ++e;
    }
    primes.emplace_back(p, e);
  }
  if (x > 1) primes.emplace_back(x, 1);
  std::vector<Integer> divs{1};
  for (auto [p, e] : primes) {
    std::size_t count = divs.size();
    Integer pk = 1;
    for (int k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < count; ++i) divs.push_back(divs[i] * pk);
    }
  }
  std::sort(divs.begin(), divs.end());
  return divs;
}

}  // namespace

std::vector<Rational> rational_roots(const MultiPoly& f) {
  if (f.is_zero()) throw MathError("ZERO_POLYNOMIAL", "zero polynomial");
  int var = -1;
  for (std::size_t v = 0; v < f.nvars(); ++v) {
    if (!f.involves(v)) continue;
    if (var >= 0) throw UsageError("rational_roots expects a univariate polynomial");
    var = static_cast<int>(v);
  }
  if (var < 0) return {};
  // Dense integer coefficients, lowest degree first.
  MultiPoly p = squarefree_part(f).primitive();
  int deg = p.degree(var);
  std::vector<Integer> c(deg + 1, 0);
  for (const auto& t : p.terms()) c[t.exp[var]] = t.coef.get_num();
  std::vector<Rational> roots;
  int low = 0;
  while (c[low] == 0) ++low;
  if (low > 0) roots.push_back(0);
  if (deg - low >= 1) {
    auto horner = [&](const Rational& x) {
      Rational v = 0;
      for (int k = deg; k >= low; --k) v = v * x + Rational(c[k]);
      return v;
    };
    auto nums = positive_divisors(c[low]);
    auto dens = positive_divisors(c[deg]);
    for (const auto& q : dens)
      for (const auto& pn : nums)
        for (int sign : {1, -1}) {
          Rational x(pn * sign, q);
          x.canonicalize();
          if (horner(x) == 0 && std::find(roots.begin(), roots.end(), x) == roots.end())
            roots.push_back(x);
        }
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

}  // namespace dreg
