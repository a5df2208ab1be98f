#pragma once

// Normal ordering of a product of two Weyl monomials:
//   x^a d^b * x^c d^d = sum_mu prod_i C(b_i,mu_i) C(c_i,mu_i) mu_i!
//                       * x^(a+c-mu) d^(b+d-mu)
// Exponent vectors hold x-exponents in [0, n) and d-exponents in [n, 2n);
// anything beyond 2n is copied from `left` + `right` untouched.

#include <vector>

#include "dreg/monomial_order.hpp"
#include "dreg/rational.hpp"

namespace dreg::detail {

struct ProductTerm {
  Exponents exp;
  int mu_total;
  Integer coef;
};

inline void expand_weyl_product(std::size_t n, const Exponents& left, const Exponents& right,
                                std::vector<ProductTerm>& out) {
  Exponents base(left.size());
  for (std::size_t i = 0; i < left.size(); ++i) base[i] = left[i] + right[i];
  // Per-variable choices of mu_i with their integer weights.
  bool trivial = true;
  for (std::size_t i = 0; i < n; ++i)
    if (left[n + i] > 0 && right[i] > 0) trivial = false;
  if (trivial) {
    out.push_back({std::move(base), 0, Integer(1)});
    return;
  }
  struct Frame {
    std::size_t var;
    Exponents exp;
    int mu_total;
    Integer coef;
  };
  std::vector<Frame> stack;
  stack.push_back({0, base, 0, Integer(1)});
  while (!stack.empty()) {
    Frame f = std::move(stack.back());
    stack.pop_back();
    if (f.var == n) {
      out.push_back({std::move(f.exp), f.mu_total, std::move(f.coef)});
      continue;
    }
    const std::size_t i = f.var;
    const int b = left[n + i], c = right[i];
    const int top = std::min(b, c);
    Integer factorial = 1;
    for (int mu = 0; mu <= top; ++mu) {
      if (mu > 0) factorial *= mu;
      Integer w;
      Integer bc;
      mpz_bin_uiui(w.get_mpz_t(), b, mu);
      mpz_bin_uiui(bc.get_mpz_t(), c, mu);
      w *= bc * factorial;
      Frame g{i + 1, f.exp, f.mu_total + mu, f.coef * w};
      g.exp[i] -= mu;
      g.exp[n + i] -= mu;
      stack.push_back(std::move(g));
    }
  }
}

}  // namespace dreg::detail
