#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "dreg/rational.hpp"

namespace dreg {

using Exponents = std::vector<int>;

// Total degree, then reverse lexicographic from the last variable.
int degrevlex_compare(const Exponents& a, const Exponents& b);

// A monomial order given by a weight matrix: monomials are compared by the
// successive row dot products. Every constructor below yields a matrix whose
// rows determine the monomial, so the order is total.
class MonomialOrder {
 public:
  MonomialOrder() = default;

  static MonomialOrder degrevlex(std::size_t n);
  static MonomialOrder lex(std::size_t n);
  // Block order: the variables flagged in `eliminate` (degrevlex among
  // themselves) dominate the rest (degrevlex among themselves).
  static MonomialOrder elimination(const std::vector<bool>& eliminate);
  // Compare by the (rational) weight first, then by `tiebreak`.
  static MonomialOrder weighted(const std::vector<Rational>& weight,
                                const MonomialOrder& tiebreak);
  static MonomialOrder from_rows(std::vector<std::vector<std::int64_t>> rows);

  std::size_t nvars() const { return nvars_; }
  const std::vector<std::vector<std::int64_t>>& rows() const { return rows_; }

  // <0, 0, >0 as a is smaller, equal, larger than b.
  int compare(const Exponents& a, const Exponents& b) const;
  bool greater(const Exponents& a, const Exponents& b) const {
    return compare(a, b) > 0;
  }

  // Stable textual key, used to index Gröbner basis caches.
  std::string key() const;

 private:
  std::size_t nvars_ = 0;
  bool plain_degrevlex_ = false;
  std::vector<std::vector<std::int64_t>> rows_;
};

// Integer multiple of a rational weight vector with the same ordering.
std::vector<std::int64_t> integer_weight(const std::vector<Rational>& w);

}  // namespace dreg
