#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dreg/errors.hpp"
#include "dreg/weyl_groebner.hpp"

namespace dreg {

// Contents of a .dreg file. Statements end with ';' and '#' starts a
// comment. `vars n;` comes first; every other statement is either a
// generator expression or one of
//   component <poly>;  avoid <poly>;  point a,b,..;  weight w1,..;
//   charts k,..;  seed N;  height N;  points N;  budget MS;
struct ProblemFile {
  std::size_t nvars = 0;
  std::vector<WeylElement> generators;
  std::vector<MultiPoly> components;
  std::vector<MultiPoly> avoid;
  std::vector<Point> points;
  std::vector<WeightVector> weights;
  std::vector<std::size_t> charts;
  std::optional<std::uint64_t> seed;
  std::optional<std::int64_t> height_bound;
  std::optional<std::size_t> points_per_component;
  std::optional<std::int64_t> budget_ms;

  DIdeal ideal() const { return DIdeal(nvars, generators); }
};

class ParseError : public UsageError {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& message);
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

ProblemFile parse_ideal(std::string_view text);
ProblemFile parse_problem_file(const std::string& path);

// A single expression over D_n (products are normal-ordered).
WeylElement parse_operator(std::string_view text, std::size_t nvars);
// Same, rejecting derivatives.
MultiPoly parse_polynomial(std::string_view text, std::size_t nvars);

// Canonical text that parse_ideal maps back to the same problem.
std::string print_problem(const ProblemFile& problem);

}  // namespace dreg
