#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "dreg/rank.hpp"

namespace dreg {

// P = sum_i a_i(t) d^i with univariate rational-function coefficients.
class ScalarODEOperator {
 public:
  // a_0..a_r; trailing zeros are dropped, a_r must remain nonzero.
  explicit ScalarODEOperator(std::vector<RationalFunction> coefficients);
  static ScalarODEOperator from_weyl(const WeylElement& p);

  std::size_t order() const { return coefs_.size() - 1; }
  const std::vector<RationalFunction>& coefficients() const { return coefs_; }
  // Polynomial coefficients with integer gcd 1 and positive leading term.
  ScalarODEOperator cleared() const;
  // Requires polynomial coefficients (see cleared()).
  WeylElement to_weyl() const;
  std::string to_string() const;

 private:
  std::vector<RationalFunction> coefs_;
};

// Order of vanishing of a nonzero univariate polynomial at t = p.
int order_at(const MultiPoly& f, const Rational& p);
int order_at(const RationalFunction& f, const Rational& p);

// Fuchs' criterion: ord_p(a_i / a_r) >= -(r - i) for every i.
bool fuchs_order_test(const ScalarODEOperator& op, const Rational& p);

struct GrRank1D {
  std::size_t gr_rank = 0;
  bool regular = false;
};

// Rank of in_{(-1,1)}<P> against the rank of <P>, for P in D_1.
GrRank1D gr_rank_1d(const WeylElement& p);

struct LineRestriction {
  Point base;
  std::vector<Rational> direction;
  // d/dt u = A(t) u along t -> base + t * direction.
  RationalMatrix matrix;
};

// Throws MathError("LINE_IN_POLAR_LOCUS") if an entry has a pole along the
// whole line.
LineRestriction restrict_to_line(const PfaffianSystem& system, const Point& base,
                                 const std::vector<Rational>& direction);

// Scalar equation satisfied by c . u for a cyclic row vector c. Basis
// vectors are tried first, then seeded random vectors with entries affine
// in t; throws
// MathError("NO_CYCLIC_VECTOR") when all attempts fail.
ScalarODEOperator cyclic_vector_scalarize(const LineRestriction& line, std::uint64_t seed = 0,
                                          int attempts = 32);

struct LineOracleResult {
  bool regular = false;
  std::vector<Rational> direction;
  ScalarODEOperator scalar{std::vector<RationalFunction>{RationalFunction::constant(1, 1)}};
};

// Regularity at t = 0 of the system restricted to the line through p with
// direction v. When the line lies in the polar locus, fresh seeded
// directions are tried; with `component` given they must stay transversal
// to it at p.
LineOracleResult line_regularity_oracle(const DIdeal& ideal, const Point& p,
                                        const std::vector<Rational>& v,
                                        const MultiPoly* component = nullptr,
                                        std::uint64_t seed = 0, int attempts = 16);

// Same, reusing an already computed Pfaffian system.
LineOracleResult line_regularity_oracle(const PfaffianSystem& system, const Point& p,
                                        const std::vector<Rational>& v,
                                        const MultiPoly* component = nullptr,
                                        std::uint64_t seed = 0, int attempts = 16);

}  // namespace dreg
