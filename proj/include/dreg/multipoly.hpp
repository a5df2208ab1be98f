#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "dreg/monomial_order.hpp"
#include "dreg/rational.hpp"

namespace dreg {

// Sparse multivariate polynomial over Q. Terms are kept sorted in
// degrevlex-descending order with no zero coefficients, so structural
// equality is polynomial equality.
class MultiPoly {
 public:
  struct Term {
    Exponents exp;
    Rational coef;
  };

  MultiPoly() = default;
  explicit MultiPoly(std::size_t nvars) : nvars_(nvars) {}

  static MultiPoly constant(std::size_t nvars, const Rational& c);
  static MultiPoly variable(std::size_t nvars, std::size_t index);
  static MultiPoly monomial(Exponents exp, const Rational& c);
  // Sorts, merges equal monomials and drops zeros.
  static MultiPoly from_terms(std::size_t nvars, std::vector<Term> terms);

  std::size_t nvars() const { return nvars_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_one() const;
  // Leading term under degrevlex; requires a nonzero polynomial.
  const Term& leading() const { return terms_.front(); }
  Rational constant_coefficient() const;

  int total_degree() const;
  int degree(std::size_t var) const;
  // Smallest exponent of `var` over all terms (the power of var dividing f).
  int min_degree(std::size_t var) const;
  bool involves(std::size_t var) const { return degree(var) > 0; }

  MultiPoly operator-() const;
  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }
  MultiPoly& operator*=(const Rational& c);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(MultiPoly a, const Rational& c) { return a *= c; }
  friend MultiPoly operator*(const Rational& c, MultiPoly a) { return a *= c; }
  friend bool operator==(const MultiPoly& a, const MultiPoly& b);

  MultiPoly pow(unsigned k) const;
  MultiPoly derivative(std::size_t var) const;
  MultiPoly shift_monomial(const Exponents& by) const;

  Rational evaluate(std::span<const Rational> point) const;
  // Replace variable `var` by `value` (a polynomial in the same ring).
  MultiPoly substitute(std::size_t var, const MultiPoly& value) const;
  MultiPoly substitute(std::size_t var, const Rational& value) const;
  // Simultaneous substitution x_i -> images[i]; images live in a ring of
  // `target_nvars` variables.
  MultiPoly compose(const std::vector<MultiPoly>& images,
                    std::size_t target_nvars) const;
  // Coefficients with respect to `var`, keyed by its exponent; the keys
  // present are exactly the exponents that occur.
  std::map<int, MultiPoly> coefficients_in(std::size_t var) const;
  // Re-index into a ring of `target_nvars` variables: variable i goes to
  // position map[i]. Throws if a mapped-out variable (map[i] < 0) occurs.
  MultiPoly remap(const std::vector<int>& map, std::size_t target_nvars) const;

  // Positive leading coefficient, integer coefficients with gcd 1.
  MultiPoly primitive() const;
  // Leading coefficient 1.
  MultiPoly monic() const;

  std::string to_string(const std::vector<std::string>& names) const;
  // Default names x1..xn.
  std::string to_string() const;

 private:
  std::size_t nvars_ = 0;
  std::vector<Term> terms_;
};

std::vector<std::string> default_names(std::size_t n, const std::string& stem = "x");

// Exact quotient a / b, or nullopt when b does not divide a.
std::optional<MultiPoly> exact_divide(const MultiPoly& a, const MultiPoly& b);

// Greatest common divisor, normalized to MultiPoly::primitive() form; the
// gcd of two zero polynomials is zero.
MultiPoly gcd(const MultiPoly& a, const MultiPoly& b);
MultiPoly gcd(const std::vector<MultiPoly>& polys);
MultiPoly lcm(const MultiPoly& a, const MultiPoly& b);

// gcd of the coefficients of f viewed as a polynomial in `var`.
MultiPoly content_in(const MultiPoly& f, std::size_t var);

// Integer content and integer-lcm-of-denominators helpers.
Rational rational_content(const MultiPoly& f);

}  // namespace dreg
