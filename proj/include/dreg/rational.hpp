#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace dreg {

// mpq_class keeps gcd(num, den) = 1 and den > 0 after canonicalize(), and
// every arithmetic operator returns canonical values.
using Rational = mpq_class;
using Integer = mpz_class;

using Point = std::vector<Rational>;

// "p/q", or "p" when q = 1.
std::string to_string(const Rational& r);

// Accepts "p", "-p", "p/q". Throws UsageError on malformed input or q = 0.
Rational parse_rational(const std::string& text);

// Comma separated list of rationals, e.g. "0,1,1/2".
std::vector<Rational> parse_rational_list(const std::string& text);

std::string to_string(const Point& p);

}  // namespace dreg
