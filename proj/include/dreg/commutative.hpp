#pragma once

#include <vector>

#include "dreg/budget.hpp"
#include "dreg/monomial_order.hpp"
#include "dreg/multipoly.hpp"

namespace dreg {

struct CommutativeIdeal {
  std::size_t nvars = 0;
  std::vector<MultiPoly> generators;

  bool is_unit() const;
  bool is_zero() const { return generators.empty(); }
};

// Reduced Gröbner basis (monic under `order`, sorted by leading monomial
// ascending). The empty generator list is the zero ideal and returns {}.
std::vector<MultiPoly> groebner_commutative(const std::vector<MultiPoly>& generators,
                                            const MonomialOrder& order,
                                            const Deadline& deadline = Deadline::from_environment(),
                                            GroebnerStats* stats = nullptr);

// Primitive representative of the normal form of f modulo a Gröbner basis
// (only the ray is determined: zero iff f lies in the ideal).
MultiPoly reduce_primitive(const MultiPoly& f, const std::vector<MultiPoly>& basis,
                           const MonomialOrder& order);

bool ideal_contains(const std::vector<MultiPoly>& groebner_basis, const MultiPoly& f,
                    const MonomialOrder& order);

// Leading monomial of f under `order`.
Exponents leading_exponent(const MultiPoly& f, const MonomialOrder& order);

// Generators of (ideal : <saturate_by>^infinity) intersected with the
// subring free of the `eliminate` variables, returned as a reduced degrevlex
// basis in the original ring. Variables are 0-based indices.
CommutativeIdeal saturate_and_eliminate(const CommutativeIdeal& ideal,
                                        const std::vector<std::size_t>& saturate_by,
                                        const std::vector<std::size_t>& eliminate);

// (ideal : <by>^infinity). Saturating by the zero ideal gives the unit ideal.
CommutativeIdeal saturate(const CommutativeIdeal& ideal, const std::vector<MultiPoly>& by);

CommutativeIdeal intersect(const CommutativeIdeal& a, const CommutativeIdeal& b);

}  // namespace dreg
