#include "dreg/fuchs.hpp"

#include <algorithm>

#include "dreg/errors.hpp"
#include "dreg/random.hpp"

namespace dreg {

namespace {

MultiPoly t_var() { return MultiPoly::variable(1, 0); }

// Solve M b = rhs over Q(t); nullopt when M is singular.
std::optional<std::vector<RationalFunction>> solve(RationalMatrix m, std::vector<RationalFunction> rhs) {
  const std::size_t r = m.size();
  for (std::size_t col = 0; col < r; ++col) {
    std::size_t piv = col;
    while (piv < r && m[piv][col].is_zero()) ++piv;
    if (piv == r) return std::nullopt;
    std::swap(m[piv], m[col]);
    std::swap(rhs[piv], rhs[col]);
    RationalFunction inv = RationalFunction::constant(1, 1) / m[col][col];
    for (std::size_t j = col; j < r; ++j) m[col][j] = m[col][j] * inv;
    rhs[col] = rhs[col] * inv;
    for (std::size_t row = 0; row < r; ++row) {
      if (row == col || m[row][col].is_zero()) continue;
      RationalFunction f = m[row][col];
      for (std::size_t j = col; j < r; ++j) m[row][j] -= f * m[col][j];
      rhs[row] -= f * rhs[col];
    }
  }
  return rhs;
}

std::optional<ScalarODEOperator> scalarize_with(const RationalMatrix& a,
                                                std::vector<RationalFunction> c0) {
  const std::size_t r = a.size();
  std::vector<std::vector<RationalFunction>> c{std::move(c0)};
  for (std::size_t k = 0; k < r; ++k) {
    const auto& prev = c.back();
    std::vector<RationalFunction> next(r, RationalFunction(1));
    for (std::size_t j = 0; j < r; ++j) {
      RationalFunction s = prev[j].derivative(0);
      for (std::size_t m = 0; m < r; ++m)
        if (!prev[m].is_zero() && !a[m][j].is_zero()) s += prev[m] * a[m][j];
      next[j] = std::move(s);
    }
    c.push_back(std::move(next));
  }
  // Columns of the system are the vectors c_0..c_{r-1}.
  RationalMatrix m(r, std::vector<RationalFunction>(r, RationalFunction(1)));
  for (std::size_t j = 0; j < r; ++j)
    for (std::size_t k = 0; k < r; ++k) m[j][k] = c[k][j];
  auto b = solve(std::move(m), c[r]);
  if (!b) return std::nullopt;
  std::vector<RationalFunction> coefs;
  for (std::size_t k = 0; k < r; ++k) coefs.push_back(-(*b)[k]);
  coefs.push_back(RationalFunction::constant(1, 1));
  return ScalarODEOperator(std::move(coefs)).cleared();
}

Rational dot_gradient(const MultiPoly& f, const Point& p, const std::vector<Rational>& v) {
  Rational s = 0;
  for (std::size_t i = 0; i < v.size(); ++i) s += v[i] * f.derivative(i).evaluate(p);
  return s;
}

}  // namespace

ScalarODEOperator::ScalarODEOperator(std::vector<RationalFunction> coefficients)
    : coefs_(std::move(coefficients)) {
  while (!coefs_.empty() && coefs_.back().is_zero()) coefs_.pop_back();
  if (coefs_.empty()) throw MathError("ZERO_OPERATOR", "zero operator has no order");
  for (const auto& c : coefs_)
    if (c.nvars() != 1) throw UsageError("scalar operator coefficients must be univariate");
}

ScalarODEOperator ScalarODEOperator::from_weyl(const WeylElement& p) {
  if (p.nvars() != 1) throw UsageError("scalar operator needs a one-variable Weyl element");
  if (p.is_zero()) throw MathError("ZERO_OPERATOR", "zero operator has no order");
  std::vector<RationalFunction> coefs(static_cast<std::size_t>(p.order()) + 1, RationalFunction(1));
  for (auto& [beta, c] : p.by_derivative()) coefs[static_cast<std::size_t>(beta[0])] = RationalFunction(c);
  return ScalarODEOperator(std::move(coefs));
}

ScalarODEOperator ScalarODEOperator::cleared() const {
  MultiPoly d = MultiPoly::constant(1, 1);
  for (const auto& c : coefs_) d = lcm(d, c.denominator());
  std::vector<MultiPoly> nums;
  for (const auto& c : coefs_) nums.push_back(c.numerator() * *exact_divide(d, c.denominator()));
  MultiPoly g = gcd(nums);
  Rational sign = nums.back().leading().coef < 0 ? -1 : 1;
  std::vector<RationalFunction> out;
  for (const auto& n : nums) {
    MultiPoly q = n.is_zero() ? n : *exact_divide(n, g);
    out.emplace_back(q * sign);
  }
  // gcd() is primitive, so the quotients may still carry a rational content.
  Integer num = 0, den = 1;
  for (const auto& c : out)
    for (const auto& t : c.numerator().terms()) {
      mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), t.coef.get_num_mpz_t());
      mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), t.coef.get_den_mpz_t());
    }
  Rational scale(den, num);
  scale.canonicalize();
  for (auto& c : out) c = c * RationalFunction::constant(1, scale);
  return ScalarODEOperator(std::move(out));
}

WeylElement ScalarODEOperator::to_weyl() const {
  std::vector<WeylElement::Term> terms;
  for (std::size_t i = 0; i < coefs_.size(); ++i) {
    if (!coefs_[i].is_polynomial()) throw UsageError("operator has non-polynomial coefficients");
    Rational inv = 1 / coefs_[i].denominator().constant_coefficient();
    for (const auto& t : coefs_[i].numerator().terms())
      terms.push_back({Exponents{t.exp[0], static_cast<int>(i)}, t.coef * inv});
  }
  return WeylElement::from_terms(1, std::move(terms));
}

std::string ScalarODEOperator::to_string() const {
  std::string s;
  for (std::size_t i = coefs_.size(); i-- > 0;) {
    if (coefs_[i].is_zero()) continue;
    if (!s.empty()) s += " + ";
    s += "(" + coefs_[i].to_string({"t"}) + ")";
    if (i > 0) s += "*dt" + (i > 1 ? "^" + std::to_string(i) : std::string());
  }
  return s;
}

int order_at(const MultiPoly& f, const Rational& p) {
  if (f.is_zero()) throw MathError("ZERO_POLYNOMIAL", "order of the zero polynomial");
  MultiPoly shifted = f.substitute(0, t_var() + MultiPoly::constant(1, p));
  return shifted.min_degree(0);
}

int order_at(const RationalFunction& f, const Rational& p) {
  return order_at(f.numerator(), p) - order_at(f.denominator(), p);
}

bool fuchs_order_test(const ScalarODEOperator& op, const Rational& p) {
  const auto& a = op.coefficients();
  const int r = static_cast<int>(op.order());
  const int lead = order_at(a.back(), p);
  for (int i = 0; i < r; ++i) {
    if (a[static_cast<std::size_t>(i)].is_zero()) continue;
    if (order_at(a[static_cast<std::size_t>(i)], p) - lead < -(r - i)) return false;
  }
  return true;
}

GrRank1D gr_rank_1d(const WeylElement& p) {
  DIdeal ideal(1, {p});
  RankResult full = holonomic_rank(ideal);
  RankResult gr = holonomic_rank(initial_ideal(ideal, {Rational(1)}));
  return {gr.value, !gr.infinite && !full.infinite && gr.value == full.value};
}

LineRestriction restrict_to_line(const PfaffianSystem& system, const Point& base,
                                 const std::vector<Rational>& direction) {
  const std::size_t n = system.nvars;
  if (base.size() != n || direction.size() != n)
    throw UsageError("point and direction must have one entry per variable");
  if (std::all_of(direction.begin(), direction.end(), [](const Rational& v) { return v == 0; }))
    throw UsageError("direction must be nonzero");
  std::vector<MultiPoly> images;
  for (std::size_t i = 0; i < n; ++i)
    images.push_back(MultiPoly::constant(1, base[i]) + t_var() * direction[i]);
  LineRestriction out{base, direction,
                      RationalMatrix(system.rank, std::vector<RationalFunction>(system.rank, RationalFunction(1)))};
  try {
    // every A_i must be defined along the line, even when v_i = 0
    for (std::size_t i = 0; i < n; ++i) {
      RationalFunction vi = RationalFunction::constant(1, direction[i]);
      for (std::size_t r = 0; r < system.rank; ++r)
        for (std::size_t c = 0; c < system.rank; ++c) {
          const auto& e = system.matrices[i][r][c];
          if (e.is_zero()) continue;
          RationalFunction restricted = e.compose(images, 1);
          if (direction[i] != 0) out.matrix[r][c] += vi * restricted;
        }
    }
  } catch (const MathError& e) {
    if (e.code() != "POLE") throw;
    throw MathError("LINE_IN_POLAR_LOCUS", "a coefficient has a pole along the whole line");
  }
  return out;
}

ScalarODEOperator cyclic_vector_scalarize(const LineRestriction& line, std::uint64_t seed,
                                          int attempts) {
  const std::size_t r = line.matrix.size();
  if (r == 0) throw UsageError("empty system");
  for (std::size_t k = 0; k < r; ++k) {
    std::vector<RationalFunction> c0(r, RationalFunction(1));
    c0[k] = RationalFunction::constant(1, 1);
    if (auto op = scalarize_with(line.matrix, std::move(c0))) return *op;
  }
  Rng rng(derive_seed(seed, {0xc1c1u}));
  for (int a = 0; a < attempts; ++a) {
    // Constant vectors cannot be cyclic for scalar systems such as
    // A = (b/t) I, so entries are affine in t.
    std::vector<RationalFunction> c0;
    for (std::size_t k = 0; k < r; ++k) {
      MultiPoly e = MultiPoly::constant(1, Rational(static_cast<long>(rng.integer(-5, 5)))) +
                    t_var() * Rational(static_cast<long>(rng.integer(-5, 5)));
      c0.push_back(RationalFunction(e));
    }
    if (std::all_of(c0.begin(), c0.end(), [](const RationalFunction& c) { return c.is_zero(); }))
      continue;
    if (auto op = scalarize_with(line.matrix, std::move(c0))) return *op;
  }
  throw MathError("NO_CYCLIC_VECTOR", "no cyclic vector found within the attempt budget");
}

LineOracleResult line_regularity_oracle(const PfaffianSystem& system, const Point& p,
                                        const std::vector<Rational>& v, const MultiPoly* component,
                                        std::uint64_t seed, int attempts) {
  const std::size_t n = system.nvars;
  if (component) {
    bool singular = true;
    for (std::size_t i = 0; i < n && singular; ++i)
      if (component->derivative(i).evaluate(p) != 0) singular = false;
    if (singular) throw MathError("NOT_TRANSVERSAL", "component is singular at the base point");
    if (dot_gradient(*component, p, v) == 0)
      throw MathError("NOT_TRANSVERSAL", "direction is tangent to the component");
  }
  Rng rng(derive_seed(seed, {0x11e5u}));
  std::vector<Rational> dir = v;
  for (int a = 0;; ++a) {
    try {
      LineRestriction line = restrict_to_line(system, p, dir);
      LineOracleResult out;
      out.direction = dir;
      out.scalar = cyclic_vector_scalarize(line, seed);
      out.regular = fuchs_order_test(out.scalar, Rational(0));
      return out;
    } catch (const MathError& e) {
      if (e.code() != "LINE_IN_POLAR_LOCUS" || a + 1 >= attempts) throw;
    }
    do {
      for (auto& d : dir) d = Rational(static_cast<long>(rng.integer(-5, 5)));
    } while (std::all_of(dir.begin(), dir.end(), [](const Rational& d) { return d == 0; }) ||
             (component && dot_gradient(*component, p, dir) == 0));
  }
}

LineOracleResult line_regularity_oracle(const DIdeal& ideal, const Point& p,
                                        const std::vector<Rational>& v, const MultiPoly* component,
                                        std::uint64_t seed, int attempts) {
  return line_regularity_oracle(pfaffian_system(ideal), p, v, component, seed, attempts);
}

}  // namespace dreg
