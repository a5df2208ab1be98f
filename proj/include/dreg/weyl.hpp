#pragma once

#include <span>
#include <string>
#include <vector>

#include "dreg/multipoly.hpp"
#include "dreg/rational.hpp"

namespace dreg {

// Element of the Weyl algebra D_n = Q<x_1..x_n, dx_1..dx_n> in normal order
// (every x to the left of every dx). A term's exponent vector has length 2n:
// the x-exponents followed by the dx-exponents. Terms are sorted
// degrevlex-descending over (x_1..x_n, dx_1..dx_n), so the representation is
// unique.
class WeylElement {
 public:
  struct Term {
    Exponents exp;
    Rational coef;
  };

  WeylElement() = default;
  explicit WeylElement(std::size_t nvars) : nvars_(nvars) {}

  static WeylElement constant(std::size_t nvars, const Rational& c);
  static WeylElement x(std::size_t nvars, std::size_t index);   // 0-based
  static WeylElement dx(std::size_t nvars, std::size_t index);  // 0-based
  static WeylElement monomial(std::size_t nvars, Exponents exp, const Rational& c);
  static WeylElement from_terms(std::size_t nvars, std::vector<Term> terms);
  // Polynomial coefficient (a MultiPoly in x_1..x_n) as an operator.
  static WeylElement from_polynomial(const MultiPoly& f);

  std::size_t nvars() const { return nvars_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  // Largest total dx-degree of a term.
  int order() const;

  WeylElement operator-() const;
  WeylElement& operator+=(const WeylElement& o);
  WeylElement& operator-=(const WeylElement& o);
  WeylElement& operator*=(const Rational& c);
  friend WeylElement operator+(WeylElement a, const WeylElement& b) { return a += b; }
  friend WeylElement operator-(WeylElement a, const WeylElement& b) { return a -= b; }
  friend WeylElement operator*(WeylElement a, const Rational& c) { return a *= c; }
  friend WeylElement operator*(const Rational& c, WeylElement a) { return a *= c; }
  friend bool operator==(const WeylElement& a, const WeylElement& b);

  // Integer coefficients with gcd 1 and a positive first term.
  WeylElement primitive() const;

  // Action on polynomials: sum c * x^alpha * d^beta(f).
  MultiPoly apply(const MultiPoly& f) const;

  // Terms grouped by their dx-exponent: coefficient polynomials in x.
  std::vector<std::pair<Exponents, MultiPoly>> by_derivative() const;

  std::string to_string() const;

 private:
  std::size_t nvars_ = 0;
  std::vector<Term> terms_;
};

// Normal-ordered product P*Q using d_i x_i = x_i d_i + 1.
WeylElement weyl_multiply(const WeylElement& p, const WeylElement& q);
inline WeylElement operator*(const WeylElement& p, const WeylElement& q) {
  return weyl_multiply(p, q);
}
WeylElement pow(const WeylElement& p, unsigned k);

using WeightVector = std::vector<Rational>;

struct WeightData {
  Rational order;
  WeylElement initial;
};

// (-w, w)-order (max of w.(beta - alpha) over the terms) and initial form.
// Throws MathError("ZERO_OPERATOR") for P = 0.
WeightData weight_data(const WeylElement& p, const WeightVector& w);
// Weight of a single (alpha, beta) exponent under (-w, w).
Rational term_weight(const Exponents& exp, const WeightVector& w);

// Image under the automorphism x_i -> x_i + p_i, dx_i -> dx_i.
WeylElement apply_affine_substitution(const WeylElement& p, std::span<const Rational> point);

// Principal symbol for the order filtration: the terms of top dx-degree as a
// commutative polynomial in (x_1..x_n, xi_1..xi_n).
MultiPoly principal_symbol(const WeylElement& p);

// Element of the homogenized Weyl algebra D^(h) with central h and
// d_i x_i = x_i d_i + h^2. Exponent vectors have length 2n+1 (h last).
class HomogenizedWeylElement {
 public:
  struct Term {
    Exponents exp;
    Rational coef;
  };

  HomogenizedWeylElement() = default;
  explicit HomogenizedWeylElement(std::size_t nvars) : nvars_(nvars) {}

  // Pads each term with h so all terms have the element's top total degree.
  static HomogenizedWeylElement homogenize(const WeylElement& p);
  static HomogenizedWeylElement from_terms(std::size_t nvars, std::vector<Term> terms);

  std::size_t nvars() const { return nvars_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_homogeneous() const;
  // Substitute h = 1.
  WeylElement dehomogenize() const;

  friend HomogenizedWeylElement operator*(const HomogenizedWeylElement& a,
                                          const HomogenizedWeylElement& b);
  friend bool operator==(const HomogenizedWeylElement& a, const HomogenizedWeylElement& b);

 private:
  std::size_t nvars_ = 0;
  std::vector<Term> terms_;
};

}  // namespace dreg
