#pragma once

#include <utility>
#include <vector>

#include "dreg/multipoly.hpp"

namespace dreg {

// Pairwise coprime squarefree factors with multiplicities whose product is f
// up to a rational unit. Factors are primitive with positive leading
// coefficient, sorted by multiplicity (descending), then total degree, then
// printed form. Splitting uses monomial extraction, contents with respect to
// each variable and Yun's algorithm; factors are not certified irreducible.
// Throws MathError("ZERO_POLYNOMIAL") for f = 0; constants give {}.
std::vector<std::pair<MultiPoly, int>> squarefree_factors(const MultiPoly& f);

// Product of the distinct squarefree factors.
MultiPoly squarefree_part(const MultiPoly& f);

// Distinct rational roots, ascending, of a polynomial involving at most one
// variable. Throws ResourceError if a coefficient is too large to enumerate
// divisors of.
std::vector<Rational> rational_roots(const MultiPoly& f);

// True when f is linear in some variable that it involves (then V(f) is
// irreducible exactly when f is).
bool has_linear_variable(const MultiPoly& f);

}  // namespace dreg
