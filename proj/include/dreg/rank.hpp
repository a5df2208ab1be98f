#pragma once

#include <optional>
#include <vector>

#include "dreg/commutative.hpp"
#include "dreg/rational_function.hpp"
#include "dreg/weyl_groebner.hpp"

namespace dreg {

// Element of the rational Weyl algebra R_n = Q(x)<dx>: sum of a_beta(x) dx^beta
// with coefficients written left of the derivatives. Terms sorted by
// degrevlex-descending dx-exponent.
class RationalOperator {
 public:
  struct Term {
    Exponents beta;
    RationalFunction coef;
  };

  RationalOperator() = default;
  explicit RationalOperator(std::size_t nvars) : nvars_(nvars) {}
  static RationalOperator from_terms(std::size_t nvars, std::vector<Term> terms);
  static RationalOperator from_weyl(const WeylElement& p);
  static RationalOperator monomial(std::size_t nvars, Exponents beta);

  std::size_t nvars() const { return nvars_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  const Exponents& leading_exponent() const { return terms_.front().beta; }
  // Coefficient of dx^beta (zero if absent).
  RationalFunction coefficient(const Exponents& beta) const;

  std::string to_string() const;
  friend bool operator==(const RationalOperator& a, const RationalOperator& b);

 private:
  std::size_t nvars_ = 0;
  std::vector<Term> terms_;
};

// Reduced Gröbner basis of R_n * I with dx-monomials under degrevlex;
// leading coefficients are 1, elements sorted by leading exponent ascending.
std::vector<RationalOperator> rational_weyl_gb(const DIdeal& ideal,
                                               const Deadline& deadline = Deadline::from_environment());

// Exact normal form of p modulo a basis returned by rational_weyl_gb.
RationalOperator rational_normal_form(const RationalOperator& p,
                                      const std::vector<RationalOperator>& basis);

struct RankResult {
  bool infinite = false;
  std::size_t value = 0;

  static RankResult finite(std::size_t v) { return {false, v}; }
  static RankResult infinity() { return {true, 0}; }
  std::string to_string() const { return infinite ? "INFINITE" : std::to_string(value); }
  friend bool operator==(const RankResult&, const RankResult&) = default;
};

// Standard dx-monomials of a basis (ascending degrevlex), or nullopt when
// there are infinitely many.
std::optional<std::vector<Exponents>> standard_monomials(const std::vector<RationalOperator>& basis,
                                                         std::size_t nvars);

RankResult holonomic_rank(const DIdeal& ideal);

// Principal-symbol ideal in Q[x_1..x_n, xi_1..xi_n] (2n variables).
CommutativeIdeal characteristic_ideal(const DIdeal& ideal);

struct SingularLocus {
  // Squarefree factors of the hypersurface part, sorted.
  std::vector<MultiPoly> codim1;
  // Set when the projected ideal is not just the hypersurface: there may be
  // singular strata of codimension at least two.
  bool may_have_deeper_components = false;
  // Generators cutting out the extra strata (empty unless flagged).
  std::vector<MultiPoly> deeper_strata;
  // The projection of Ch(M) minus the zero section, as an ideal in Q[x].
  CommutativeIdeal projected;
};

SingularLocus singular_locus(const DIdeal& ideal);

using RationalMatrix = std::vector<std::vector<RationalFunction>>;

// d/dx_i u = A_i u for u = (s_1 f, ..., s_r f), s the standard monomials.
struct PfaffianSystem {
  std::size_t nvars = 0;
  std::size_t rank = 0;
  std::vector<Exponents> basis;
  std::vector<RationalMatrix> matrices;

  // d_i(A_j) - d_j(A_i) - (A_i A_j - A_j A_i) for the pair (i, j).
  RationalMatrix integrability_defect(std::size_t i, std::size_t j) const;
  bool is_integrable() const;
};

// Throws MathError("INFINITE_RANK") when the rank is not finite.
PfaffianSystem pfaffian_system(const DIdeal& ideal);

RationalMatrix matrix_multiply(const RationalMatrix& a, const RationalMatrix& b);

}  // namespace dreg
