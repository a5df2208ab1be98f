#include "dreg/monomial_order.hpp"

#include <numeric>

#include "dreg/errors.hpp"

namespace dreg {

int degrevlex_compare(const Exponents& a, const Exponents& b) {
  long da = 0, db = 0;
  for (int e : a) da += e;
  for (int e : b) db += e;
  if (da != db) return da < db ? -1 : 1;
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
  }
  return 0;
}

namespace {

std::vector<std::vector<std::int64_t>> degrevlex_rows(std::size_t n) {
  std::vector<std::vector<std::int64_t>> rows;
  rows.emplace_back(n, 1);
  for (std::size_t i = n; i-- > 1;) {
    std::vector<std::int64_t> r(n, 0);
    r[i] = -1;
    rows.push_back(std::move(r));
  }
  return rows;
}

}  // namespace

MonomialOrder MonomialOrder::from_rows(
    std::vector<std::vector<std::int64_t>> rows) {
  MonomialOrder o;
  o.nvars_ = rows.empty() ? 0 : rows.front().size();
  for (const auto& r : rows)
    if (r.size() != o.nvars_) throw UsageError("ragged weight matrix");
  o.rows_ = std::move(rows);
  return o;
}

MonomialOrder MonomialOrder::degrevlex(std::size_t n) {
  MonomialOrder o = from_rows(degrevlex_rows(n));
  o.nvars_ = n;
  o.plain_degrevlex_ = true;
  return o;
}

MonomialOrder MonomialOrder::lex(std::size_t n) {
  std::vector<std::vector<std::int64_t>> rows;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<std::int64_t> r(n, 0);
    r[i] = 1;
    rows.push_back(std::move(r));
  }
  MonomialOrder o = from_rows(std::move(rows));
  o.nvars_ = n;
  return o;
}

MonomialOrder MonomialOrder::elimination(const std::vector<bool>& eliminate) {
  const std::size_t n = eliminate.size();
  std::vector<std::vector<std::int64_t>> rows;
  for (bool block : {true, false}) {
    std::vector<std::size_t> vars;
    for (std::size_t i = 0; i < n; ++i)
      if (eliminate[i] == block) vars.push_back(i);
    if (vars.empty()) continue;
    std::vector<std::int64_t> total(n, 0);
    for (auto v : vars) total[v] = 1;
    rows.push_back(total);
    for (std::size_t k = vars.size(); k-- > 1;) {
      std::vector<std::int64_t> r(n, 0);
      r[vars[k]] = -1;
      rows.push_back(std::move(r));
    }
  }
  MonomialOrder o = from_rows(std::move(rows));
  o.nvars_ = n;
  return o;
}

std::vector<std::int64_t> integer_weight(const std::vector<Rational>& w) {
  Integer l = 1;
  for (const auto& q : w) {
    Integer d = q.get_den();
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
  }
  std::vector<std::int64_t> out;
  for (const auto& q : w) {
    Integer v = q.get_num() * (l / q.get_den());
    if (!v.fits_slong_p()) throw ResourceError("weight entry too large");
    out.push_back(v.get_si());
  }
  return out;
}

MonomialOrder MonomialOrder::weighted(const std::vector<Rational>& weight,
                                      const MonomialOrder& tiebreak) {
  if (weight.size() != tiebreak.nvars())
    throw UsageError("weight length does not match the tiebreak order");
  auto rows = tiebreak.rows();
  rows.insert(rows.begin(), integer_weight(weight));
  MonomialOrder o = from_rows(std::move(rows));
  o.nvars_ = tiebreak.nvars();
  return o;
}

int MonomialOrder::compare(const Exponents& a, const Exponents& b) const {
  if (plain_degrevlex_) return degrevlex_compare(a, b);
  for (const auto& row : rows_) {
    std::int64_t da = 0, db = 0;
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (row[i] == 0) continue;
      da += row[i] * a[i];
      db += row[i] * b[i];
    }
    if (da != db) return da < db ? -1 : 1;
  }
  return 0;
}

std::string MonomialOrder::key() const {
  std::string k;
  for (const auto& row : rows_) {
    for (auto v : row) k += std::to_string(v) + ",";
    k += ";";
  }
  return k;
}

}  // namespace dreg
