#pragma once

#include <functional>
#include <vector>

#include "schemegb/polyring.hpp"
#include "schemegb/structure_ideal.hpp"

namespace schemegb {

// Multiplication by each variable on a finite-dimensional quotient, in a
// fixed vector-space basis. `one` holds the coordinates of 1.
struct MultiplicationTable {
  std::vector<QMatrix> matrices;
  std::vector<Rational> one;

  std::size_t nvars() const { return matrices.size(); }
  std::size_t dimension() const { return one.size(); }
};

MultiplicationTable multiplication_table(const StructureBasis& sb);

// Linear change of coordinates: variable `var` becomes sum_k form[k] x_k.
MultiplicationTable with_linear_form(const MultiplicationTable& table, std::size_t var,
                                     const std::vector<Rational>& form);

// A reduced Groebner basis (monic generators sorted by ascending leading
// monomial) together with its normal set.
struct ReducedGB {
  PolyBasis basis;
  std::vector<Monomial> normal_set;

  const MonomialOrder& order() const { return basis.order(); }
  // The generator whose leading monomial is a pure power of the smallest
  // variable, as a univariate polynomial. Lex orders only.
  UniPoly eliminant() const;
  // g with x_var - g(others) in the basis and the support of g inside
  // `allowed`; nullopt when no such generator exists.
  std::optional<MPoly> expression_for(std::size_t var, const std::vector<std::size_t>& allowed) const;
};

// FGLM: walks monomials upward in `target`, computing each normal-form
// vector from an already visited divisor with one matrix product, and
// records linear dependencies as new basis elements.
ReducedGB fglm_convert(const MultiplicationTable& table, const MonomialOrder& target);
ReducedGB fglm_convert(const StructureBasis& sb, const MonomialOrder& target);

struct VarietyPoint {
  std::vector<RealRoot> coordinates;

  friend bool operator==(const VarietyPoint&, const VarietyPoint&) = default;
};

// Locates an algebraic value among the real roots `candidates` of a
// polynomial known to vanish at it. `enclose(w)` must return an interval
// containing the value, computed from inputs of width at most w, that
// shrinks as w does. Throws InternalInvariantViolation if none matches.
RealRoot pin_value(const std::function<Interval(const Rational&)>& enclose, std::vector<RealRoot> candidates,
                   const Rational& precision);

// Real points of a radical ideal from its lex basis: roots of the eliminant,
// extended one variable at a time. Rational points are checked exactly
// against the basis, irrational ones to residual width 1. Throws
// NotTriangularEnough when an irrational partial solution meets a
// non-linear generator.
std::vector<VarietyPoint> solve_triangular(const ReducedGB& gb, const Rational& precision);

// Certifies that every generator vanishes on `point`: exactly for rational
// points, otherwise by interval enclosures containing 0 refined below `bound`.
bool certify_residuals(const std::vector<MPoly>& generators, const VarietyPoint& point, const Rational& bound);

// Independent check: the characteristic polynomial of each multiplication
// matrix vanishes at the matching coordinate of every point, and there are
// d+1 points.
bool moller_stetter_check(const StructureBasis& sb, const std::vector<VarietyPoint>& points);

}  // namespace schemegb
