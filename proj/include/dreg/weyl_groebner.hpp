#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "dreg/budget.hpp"
#include "dreg/weyl.hpp"

namespace dreg {

// Order used for a Weyl-algebra Gröbner basis: weights u on x and v on dx,
// refined by degrevlex on (x, dx). With `homogenized` set the computation
// runs in D^(h) under (total degree, (u,v)-weight, degrevlex) and
// dehomogenizes at h = 1; this is how weights with negative x-entries are
// handled. Without it (u,v) must give a term order (u + v > 0 or both 0).
struct WeylOrderSpec {
  std::vector<Rational> x_weight;
  std::vector<Rational> d_weight;
  bool homogenized = false;

  // (-w, w) through the homogenized algebra.
  static WeylOrderSpec v_filtration(const WeightVector& w);
  // (0, e): the order filtration; a term order, no homogenization.
  static WeylOrderSpec order_filtration(std::size_t n);
  static WeylOrderSpec degrevlex(std::size_t n);

  std::size_t nvars() const { return x_weight.size(); }
  std::string key() const;
};

// Finitely generated left ideal of D_n. Values are immutable; the Gröbner
// basis cache is shared between copies and filled atomically per order.
class DIdeal {
 public:
  DIdeal() = default;
  DIdeal(std::size_t nvars, std::vector<WeylElement> generators);

  std::size_t nvars() const { return nvars_; }
  const std::vector<WeylElement>& generators() const { return generators_; }

  // Gröbner basis for the given order (cached).
  std::shared_ptr<const std::vector<WeylElement>> groebner_basis(const WeylOrderSpec& order) const;
  // Reduced Gröbner basis under degrevlex; a canonical presentation.
  std::vector<WeylElement> reduced_basis() const;
  bool contains(const WeylElement& p) const;
  bool is_unit() const;
  // Each generator of `other` lies in this ideal and vice versa.
  bool same_ideal(const DIdeal& other) const;

  std::size_t cache_size() const;

 private:
  struct Cache {
    std::mutex mutex;
    std::map<std::string, std::shared_ptr<const std::vector<WeylElement>>> bases;
  };

  std::size_t nvars_ = 0;
  std::vector<WeylElement> generators_;
  std::shared_ptr<Cache> cache_ = std::make_shared<Cache>();
};

// Gröbner basis of `ideal` for `order`. For homogenized orders the elements
// are the dehomogenized basis of the homogenized ideal; their initial forms
// generate the initial ideal for the order's weight. Elements are primitive.
std::vector<WeylElement> weyl_buchberger(const DIdeal& ideal, const WeylOrderSpec& order,
                                         const Deadline& deadline = Deadline::from_environment(),
                                         GroebnerStats* stats = nullptr);

// Normal form ray of p modulo a Gröbner basis under a non-homogenized order;
// zero iff p is in the ideal.
WeylElement weyl_reduce(const WeylElement& p, const std::vector<WeylElement>& basis,
                        const WeylOrderSpec& order);

// init_{(-w,w)}(I), generated by the initial forms of a (-w,w) basis.
DIdeal initial_ideal(const DIdeal& ideal, const WeightVector& w);

// Translate every generator by x -> x + p.
DIdeal translate(const DIdeal& ideal, std::span<const Rational> point);

// Pullback to the k-th standard affine chart of P^n (k is 1-based):
// x_k = 1/y_k, x_j = y_j/y_k. Each generator is mapped through the chain
// rule and multiplied on the left by the least power of y_k clearing its
// denominators. The chart coordinates reuse the names x_1..x_n.
WeylElement chart_pullback(const WeylElement& p, std::size_t chart);
DIdeal chart_pullback(const DIdeal& ideal, std::size_t chart);

// Transport a hypersurface equation f(x) of the affine chart into chart k:
// numerator of f(y/y_k, 1/y_k) after clearing the power of y_k.
MultiPoly chart_transport(const MultiPoly& f, std::size_t chart);

}  // namespace dreg
