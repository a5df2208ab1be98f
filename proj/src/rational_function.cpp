#include "dreg/rational_function.hpp"

#include "dreg/errors.hpp"

namespace dreg {

RationalFunction::RationalFunction(MultiPoly num)
    : num_(std::move(num)), den_(MultiPoly::constant(num_.nvars(), 1)) {}

RationalFunction::RationalFunction(MultiPoly num, MultiPoly den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw MathError("DIVISION_BY_ZERO", "zero denominator");
  normalize();
}

void RationalFunction::normalize() {
  if (num_.is_zero()) {
    den_ = MultiPoly::constant(num_.nvars(), 1);
    return;
  }
  if (!den_.is_constant()) {
    MultiPoly g = gcd(num_, den_);
    if (!g.is_constant()) {
      num_ = *exact_divide(num_, g);
      den_ = *exact_divide(den_, g);
    }
  }
  Rational lc = den_.leading().coef;
  if (lc != 1) {
    Rational inv = 1 / lc;
    num_ *= inv;
    den_ *= inv;
  }
}

RationalFunction RationalFunction::operator-() const {
  RationalFunction r = *this;
  r.num_ = -r.num_;
  return r;
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.den_ == b.den_) return RationalFunction(a.num_ + b.num_, a.den_);
  MultiPoly g = gcd(a.den_, b.den_);
  MultiPoly ag = *exact_divide(a.den_, g), bg = *exact_divide(b.den_, g);
  return RationalFunction(a.num_ * bg + b.num_ * ag, a.den_ * bg);
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
  return a + (-b);
}

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
  if (a.is_zero() || b.is_zero()) return RationalFunction(std::max(a.nvars(), b.nvars()));
  if (a.is_polynomial() && b.is_polynomial()) {
    return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
  }
  // Cross-cancel first to keep the products small.
  MultiPoly g1 = gcd(a.num_, b.den_), g2 = gcd(b.num_, a.den_);
  MultiPoly an = *exact_divide(a.num_, g1), bd = *exact_divide(b.den_, g1);
  MultiPoly bn = *exact_divide(b.num_, g2), ad = *exact_divide(a.den_, g2);
  RationalFunction r;
  r.num_ = an * bn;
  r.den_ = ad * bd;
  Rational lc = r.den_.leading().coef;
  if (lc != 1) {
    r.num_ *= 1 / lc;
    r.den_ *= 1 / lc;
  }
  return r;
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
  if (b.is_zero()) throw MathError("DIVISION_BY_ZERO", "division by zero rational function");
  RationalFunction inv;
  inv.num_ = b.den_;
  inv.den_ = b.num_;
  Rational lc = inv.den_.leading().coef;
  inv.num_ *= 1 / lc;
  inv.den_ *= 1 / lc;
  return a * inv;
}

RationalFunction RationalFunction::derivative(std::size_t var) const {
  if (is_polynomial()) return RationalFunction(num_.derivative(var) * (1 / den_.leading().coef));
  return RationalFunction(num_.derivative(var) * den_ - num_ * den_.derivative(var),
                          den_ * den_);
}

RationalFunction RationalFunction::compose(const std::vector<MultiPoly>& images,
                                           std::size_t target_nvars) const {
  MultiPoly d = den_.compose(images, target_nvars);
  if (d.is_zero()) throw MathError("POLE", "denominator vanishes identically");
  return RationalFunction(num_.compose(images, target_nvars), std::move(d));
}

Rational RationalFunction::evaluate(std::span<const Rational> point) const {
  Rational d = den_.evaluate(point);
  if (d == 0) throw MathError("POLE", "rational function has a pole at the point");
  return num_.evaluate(point) / d;
}

std::string RationalFunction::to_string(const std::vector<std::string>& names) const {
  if (is_polynomial()) return num_.to_string(names);
  return "(" + num_.to_string(names) + ")/(" + den_.to_string(names) + ")";
}

}  // namespace dreg
