#pragma once

#include <string>
#include <string_view>

#include "dreg/parser.hpp"
#include "dreg/random.hpp"
#include "dreg/weyl_groebner.hpp"

#ifndef DREG_CORPUS_DIR
#define DREG_CORPUS_DIR "corpus"
#endif

namespace dreg::test {

inline WeylElement op(std::string_view text, std::size_t n) { return parse_operator(text, n); }
inline MultiPoly poly(std::string_view text, std::size_t n) { return parse_polynomial(text, n); }

inline DIdeal ideal(std::string_view text) { return parse_ideal(text).ideal(); }

inline std::string corpus(const std::string& name) {
  return std::string(DREG_CORPUS_DIR) + "/" + name;
}

inline DIdeal corpus_ideal(const std::string& name) {
  return parse_problem_file(corpus(name)).ideal();
}

// Random polynomial with at most `terms` terms of degree <= deg, coefficients
// of height <= height.
inline MultiPoly random_poly(Rng& rng, std::size_t n, int deg, int terms, std::int64_t height) {
  std::vector<MultiPoly::Term> out;
  for (int t = 0; t < terms; ++t) {
    Exponents e(n, 0);
    int budget = static_cast<int>(rng.integer(0, deg));
    for (int k = 0; k < budget; ++k) e[rng.integer(0, static_cast<std::int64_t>(n) - 1)]++;
    out.push_back({e, rng.rational(height)});
  }
  return MultiPoly::from_terms(n, std::move(out));
}

// Random operator with x- and dx-degree bounded by deg.
inline WeylElement random_operator(Rng& rng, std::size_t n, int deg, int terms, std::int64_t height) {
  std::vector<WeylElement::Term> out;
  for (int t = 0; t < terms; ++t) {
    Exponents e(2 * n, 0);
    for (auto& k : e) k = static_cast<int>(rng.integer(0, deg));
    out.push_back({e, rng.rational(height)});
  }
  return WeylElement::from_terms(n, std::move(out));
}

}  // namespace dreg::test
