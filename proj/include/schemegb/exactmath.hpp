#pragma once

// Exact rational arithmetic: dense matrices, univariate polynomials and
// certified real roots.

#include <compare>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace schemegb {

using Integer = mpz_class;
using Rational = mpq_class;

// "p/q", or "p" for integers.
std::string to_string(const Rational& q);
Rational parse_rational(const std::string& text);
// Rounded decimal expansion with `digits` digits after the point.
std::string to_decimal(const Rational& q, int digits);
// 10^-digits
Rational decimal_precision(int digits);

// Closed interval with rational endpoints, lo <= hi.
struct Interval {
  Rational lo;
  Rational hi;

  static Interval point(const Rational& q) { return {q, q}; }

  Rational width() const { return hi - lo; }
  bool contains(const Rational& q) const { return lo <= q && q <= hi; }
  bool intersects(const Interval& o) const { return lo <= o.hi && o.lo <= hi; }
};

Interval operator+(const Interval& a, const Interval& b);
Interval operator-(const Interval& a, const Interval& b);
Interval operator*(const Interval& a, const Interval& b);
Interval operator*(const Rational& c, const Interval& a);
Interval pow(const Interval& a, unsigned e);

class QMatrix {
 public:
  QMatrix() = default;
  QMatrix(std::size_t rows, std::size_t cols);
  static QMatrix identity(std::size_t n);
  static QMatrix from_rows(const std::vector<std::vector<Rational>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  QMatrix transpose() const;
  std::vector<Rational> apply(const std::vector<Rational>& v) const;
  Rational trace() const;
  bool is_zero() const;

  friend QMatrix operator+(const QMatrix& a, const QMatrix& b);
  friend QMatrix operator-(const QMatrix& a, const QMatrix& b);
  friend QMatrix operator*(const QMatrix& a, const QMatrix& b);
  friend QMatrix operator*(const Rational& c, const QMatrix& a);
  friend bool operator==(const QMatrix& a, const QMatrix& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

struct RrefResult {
  QMatrix reduced;
  std::vector<std::size_t> pivots;
};

RrefResult rref(const QMatrix& m);
std::size_t rank(const QMatrix& m);
// Throws SingularMatrix when m is not invertible, DimensionMismatch when not square.
QMatrix inverse(const QMatrix& m);

// Dense univariate polynomial; coefficient i multiplies x^i. The stored
// leading coefficient is never zero, the zero polynomial has no coefficients.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Rational> coefficients);
  UniPoly(std::initializer_list<Rational> coefficients)
      : UniPoly(std::vector<Rational>(coefficients)) {}

  static UniPoly constant(const Rational& c);
  static UniPoly monomial(const Rational& c, std::size_t degree);
  static UniPoly linear_root(const Rational& r);  // x - r

  bool is_zero() const { return coeffs_.empty(); }
  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Rational>& coefficients() const { return coeffs_; }
  Rational coeff(std::size_t i) const;
  const Rational& leading() const { return coeffs_.back(); }

  Rational operator()(const Rational& x) const;
  Interval operator()(const Interval& x) const;
  int sign_at(const Rational& x) const;

  UniPoly derivative() const;
  UniPoly monic() const;
  // Integer coefficients with gcd 1 and positive leading coefficient.
  std::vector<Integer> primitive_integer_form() const;

  friend UniPoly operator+(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator-(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator-(const UniPoly& a);
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(const Rational& c, const UniPoly& a);
  friend bool operator==(const UniPoly& a, const UniPoly& b) = default;

  std::string to_string(const std::string& var = "x") const;

 private:
  void normalize();
  std::vector<Rational> coeffs_;
};

// Euclidean division; throws ZeroPolynomial on a zero divisor.
std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b);
UniPoly operator%(const UniPoly& a, const UniPoly& b);
UniPoly operator/(const UniPoly& a, const UniPoly& b);
// Monic gcd; gcd(0, 0) = 0.
UniPoly gcd(const UniPoly& a, const UniPoly& b);
// p / gcd(p, p'), monic. Throws ZeroPolynomial.
UniPoly squarefree_part(const UniPoly& p);
// det(x I - m), monic.
UniPoly characteristic_polynomial(const QMatrix& m);
// p(m)
QMatrix evaluate(const UniPoly& p, const QMatrix& m);

// Sturm chain of p (each member rescaled by a positive constant).
class SturmSequence {
 public:
  explicit SturmSequence(const UniPoly& p);
  // Number of distinct real roots in the half-open interval (a, b].
  int count(const Rational& a, const Rational& b) const;
  int variations(const Rational& x) const;

 private:
  std::vector<std::vector<Integer>> chain_;  // positive integer multiples
};

// A real algebraic number. Either an exact rational, or a root of a
// squarefree polynomial with no rational roots isolated in an open interval
// (lo, hi): the polynomial has opposite nonzero signs at lo and hi and
// exactly one root in between.
class RealRoot {
 public:
  static RealRoot exact(const Rational& value);
  // Checks the isolation invariant; throws InternalInvariantViolation.
  static RealRoot isolated(UniPoly poly, Rational lo, Rational hi);

  bool is_exact() const { return exact_; }
  const Rational& value() const { return lo_; }  // exact roots only
  const Rational& lower() const { return lo_; }
  const Rational& upper() const { return hi_; }
  // x - value for exact roots.
  UniPoly minimal_polynomial() const;
  const UniPoly& defining_polynomial() const { return poly_; }

  Interval enclosure() const { return {lo_, hi_}; }
  Rational width() const { return hi_ - lo_; }
  RealRoot refined(const Rational& max_width) const;
  // In-place variant of refined(); only narrows the isolating interval.
  void refine(const Rational& max_width);
  RealRoot scaled(const Rational& c) const;

  // p vanishes at this number (exact, via gcd with the defining polynomial).
  bool is_root_of(const UniPoly& p) const;

  std::string to_decimal(int digits) const;

  friend bool operator==(const RealRoot& a, const RealRoot& b);
  friend std::strong_ordering operator<=>(const RealRoot& a, const RealRoot& b);
  friend std::vector<RealRoot> real_roots(const UniPoly& p, const Rational& precision);

 private:
  RealRoot() = default;
  static RealRoot trusted(UniPoly poly, Rational lo, Rational hi);
  void bisect();
  int sign_at(const Rational& x) const;

  bool exact_ = true;
  int lo_sign_ = 0;
  Rational lo_;
  Rational hi_;
  UniPoly poly_;
  std::vector<Integer> integer_poly_;  // primitive integer form of poly_
};

// All real roots of a squarefree polynomial, ascending. Rational roots are
// returned exactly; the rest are isolated below `precision`.
std::vector<RealRoot> real_roots(const UniPoly& p, const Rational& precision);

}  // namespace schemegb
