#pragma once

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "schemegb/exactmath.hpp"

namespace schemegb {

// Exponent vector of x_0^e_0 ... x_n^e_n.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
  explicit Monomial(std::vector<unsigned> exps) : exps_(std::move(exps)) {}
  static Monomial variable(std::size_t nvars, std::size_t var, unsigned power = 1);

  std::size_t size() const { return exps_.size(); }
  unsigned operator[](std::size_t i) const { return exps_[i]; }
  unsigned degree() const;
  bool is_one() const { return degree() == 0; }
  const std::vector<unsigned>& exponents() const { return exps_; }

  bool divides(const Monomial& other) const;
  // Requires divides(other).
  Monomial quotient_of(const Monomial& other) const;
  Monomial lcm(const Monomial& other) const;
  bool coprime(const Monomial& other) const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  // Storage order only; use MonomialOrder for term orders.
  friend auto operator<=>(const Monomial&, const Monomial&) = default;

  std::string to_string() const;

 private:
  std::vector<unsigned> exps_;
};

// Pure lex or degree-lex with respect to a variable priority: priority[0] is
// the greatest variable.
class MonomialOrder {
 public:
  enum class Kind { kLex, kDegLex };

  MonomialOrder(Kind kind, std::vector<std::size_t> priority);
  static MonomialOrder lex(std::size_t nvars);
  static MonomialOrder deglex(std::size_t nvars);
  // Lex with `smallest` the least variable and the others in index order.
  static MonomialOrder lex_smallest(std::size_t nvars, std::size_t smallest);

  Kind kind() const { return kind_; }
  const std::vector<std::size_t>& priority() const { return priority_; }
  std::size_t nvars() const { return priority_.size(); }
  std::size_t smallest_variable() const { return priority_.back(); }

  // Throws DimensionMismatch on monomials of the wrong size.
  std::strong_ordering compare(const Monomial& a, const Monomial& b) const;
  bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }

  std::string to_string() const;

  friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;

 private:
  Kind kind_;
  std::vector<std::size_t> priority_;
};

// Sparse polynomial over Q; no stored coefficient is zero.
class MPoly {
 public:
  using Terms = std::map<Monomial, Rational>;

  MPoly() = default;
  explicit MPoly(std::size_t nvars) : nvars_(nvars) {}
  static MPoly constant(std::size_t nvars, const Rational& c);
  static MPoly variable(std::size_t nvars, std::size_t var);
  static MPoly term(const Monomial& m, const Rational& c);

  std::size_t nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  const Terms& terms() const { return terms_; }
  Rational coefficient(const Monomial& m) const;
  void add_term(const Monomial& m, const Rational& c);
  unsigned total_degree() const;
  // Variables that occur with a nonzero exponent.
  std::vector<std::size_t> support() const;

  Monomial leading_monomial(const MonomialOrder& order) const;
  Rational leading_coefficient(const MonomialOrder& order) const;
  MPoly monic(const MonomialOrder& order) const;

  Rational evaluate(const std::vector<Rational>& point) const;
  Interval evaluate(const std::vector<Interval>& point) const;
  // Requires every occurring variable to be `var`.
  UniPoly to_univariate(std::size_t var) const;
  static MPoly from_univariate(std::size_t nvars, std::size_t var, const UniPoly& p);
  // Replace x_var by the polynomial `value`.
  MPoly substitute(std::size_t var, const MPoly& value) const;

  friend MPoly operator+(const MPoly& a, const MPoly& b);
  friend MPoly operator-(const MPoly& a, const MPoly& b);
  friend MPoly operator*(const MPoly& a, const MPoly& b);
  friend MPoly operator*(const Rational& c, const MPoly& a);
  friend MPoly operator*(const Monomial& m, const MPoly& a);
  friend bool operator==(const MPoly& a, const MPoly& b) { return a.terms_ == b.terms_; }

  // Terms descending in `order`, variables x0..xn, coefficients p/q.
  std::string to_string(const MonomialOrder& order) const;

 private:
  std::size_t nvars_ = 0;
  Terms terms_;
};

// Generators with monic leading terms in `order`.
class PolyBasis {
 public:
  PolyBasis(std::vector<MPoly> generators, MonomialOrder order);

  const std::vector<MPoly>& generators() const { return generators_; }
  const MonomialOrder& order() const { return order_; }
  const std::vector<Monomial>& leading_monomials() const { return leading_; }
  std::size_t size() const { return generators_.size(); }

 private:
  std::vector<MPoly> generators_;
  std::vector<Monomial> leading_;
  MonomialOrder order_;
};

// Remainder of multivariate division: repeatedly reduces the greatest
// reducible term by the first generator whose leading monomial divides it.
MPoly normal_form(const MPoly& f, const PolyBasis& basis);

MPoly s_polynomial(const MPoly& f, const MPoly& g, const MonomialOrder& order);

struct GroebnerCheck {
  bool is_groebner = true;
  // A nonzero reduced S-polynomial when is_groebner is false.
  std::optional<MPoly> witness;
};

// Buchberger's criterion: every S-polynomial reduces to zero. Pairs with
// coprime leading monomials are skipped.
GroebnerCheck is_groebner(const PolyBasis& basis);

// Monomials divisible by no leading monomial, ascending in the basis order.
// Empty when more than `limit` exist (the ideal is not zero-dimensional).
std::vector<Monomial> normal_set(const PolyBasis& basis, std::size_t limit = 100000);

// Matrix of multiplication by x_var on the quotient with basis `normal_set`:
// column c holds the coordinates of normal_form(x_var * normal_set[c]).
QMatrix multiplication_matrix(const PolyBasis& basis, const std::vector<Monomial>& normal_set, std::size_t var);

}  // namespace schemegb
