#pragma once

#include <span>
#include <string>

#include "dreg/multipoly.hpp"

namespace dreg {

// Element of Q(x_1..x_n) kept in lowest terms with a denominator whose
// degrevlex leading coefficient is 1. Equal fractions have identical
// stored numerator and denominator.
class RationalFunction {
 public:
  RationalFunction() = default;
  explicit RationalFunction(std::size_t nvars)
      : num_(nvars), den_(MultiPoly::constant(nvars, 1)) {}
  explicit RationalFunction(MultiPoly num);
  RationalFunction(MultiPoly num, MultiPoly den);

  static RationalFunction constant(std::size_t nvars, const Rational& c) {
    return RationalFunction(MultiPoly::constant(nvars, c));
  }

  std::size_t nvars() const { return num_.nvars(); }
  const MultiPoly& numerator() const { return num_; }
  const MultiPoly& denominator() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_constant(); }

  RationalFunction operator-() const;
  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
  RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
  RationalFunction& operator-=(const RationalFunction& o) { return *this = *this - o; }
  RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }
  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  RationalFunction derivative(std::size_t var) const;
  // Simultaneous substitution of polynomial images (see MultiPoly::compose).
  // Throws MathError("POLE") if the denominator maps to zero.
  RationalFunction compose(const std::vector<MultiPoly>& images,
                           std::size_t target_nvars) const;
  Rational evaluate(std::span<const Rational> point) const;

  std::string to_string(const std::vector<std::string>& names) const;
  std::string to_string() const { return to_string(default_names(nvars())); }

 private:
  void normalize();

  MultiPoly num_;
  MultiPoly den_;
};

}  // namespace dreg
