#include <algorithm>
#include <sstream>

#include "schemegb/errors.hpp"
#include "integer_poly.hpp"
#include "schemegb/exactmath.hpp"

namespace schemegb {

UniPoly::UniPoly(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) {
  normalize();
}

void UniPoly::normalize() {
  while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

UniPoly UniPoly::constant(const Rational& c) { return UniPoly(std::vector<Rational>{c}); }

UniPoly UniPoly::monomial(const Rational& c, std::size_t degree) {
  std::vector<Rational> v(degree + 1, Rational(0));
  v[degree] = c;
  return UniPoly(std::move(v));
}

UniPoly UniPoly::linear_root(const Rational& r) {
  return UniPoly(std::vector<Rational>{-r, Rational(1)});
}

Rational UniPoly::coeff(std::size_t i) const {
  return i < coeffs_.size() ? coeffs_[i] : Rational(0);
}

Rational UniPoly::operator()(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Interval UniPoly::operator()(const Interval& x) const {
  Interval acc = Interval::point(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + Interval::point(*it);
  return acc;
}

int UniPoly::sign_at(const Rational& x) const { return sgn((*this)(x)); }

UniPoly UniPoly::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Rational> d(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * static_cast<unsigned long>(i);
  return UniPoly(std::move(d));
}

UniPoly UniPoly::monic() const {
  if (is_zero()) return {};
  const Rational inv = 1 / leading();
  return inv * *this;
}

std::vector<Integer> UniPoly::primitive_integer_form() const {
  Integer den = 1;
  for (const auto& c : coeffs_) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
  std::vector<Integer> out;
  Integer content = 0;
  for (const auto& c : coeffs_) {
    Integer v = c.get_num() * (den / c.get_den());
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v.get_mpz_t());
    out.push_back(v);
  }
  if (content == 0) return out;
  if (sgn(out.back()) < 0) content = -content;
  for (auto& v : out) v /= content;
  return out;
}

UniPoly operator+(const UniPoly& a, const UniPoly& b) {
  std::vector<Rational> s(std::max(a.coeffs_.size(), b.coeffs_.size()), Rational(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) s[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) s[i] += b.coeffs_[i];
  return UniPoly(std::move(s));
}

UniPoly operator-(const UniPoly& a) { return Rational(-1) * a; }

UniPoly operator-(const UniPoly& a, const UniPoly& b) { return a + (-b); }

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> p(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (sgn(a.coeffs_[i]) == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) p[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return UniPoly(std::move(p));
}

UniPoly operator*(const Rational& c, const UniPoly& a) {
  if (sgn(c) == 0) return {};
  std::vector<Rational> s = a.coeffs_;
  for (auto& q : s) q *= c;
  return UniPoly(std::move(s));
}

std::string UniPoly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const Rational& c = coeffs_[static_cast<std::size_t>(i)];
    if (sgn(c) == 0) continue;
    Rational mag = abs(c);
    if (first) {
      if (sgn(c) < 0) os << "-";
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0) {
      os << schemegb::to_string(mag);
      continue;
    }
    if (mag != 1) os << schemegb::to_string(mag) << "*";
    os << var;
    if (i > 1) os << "^" << i;
  }
  return os.str();
}

std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b) {
  if (b.is_zero()) throw ZeroPolynomial("polynomial division");
  std::vector<Rational> rem = a.coefficients();
  const int db = b.degree();
  if (a.degree() < db) return {UniPoly(), a};
  std::vector<Rational> quot(static_cast<std::size_t>(a.degree() - db + 1), Rational(0));
  const Rational inv = 1 / b.leading();
  for (int i = a.degree(); i >= db; --i) {
    const Rational q = rem[static_cast<std::size_t>(i)] * inv;
    if (sgn(q) == 0) continue;
    quot[static_cast<std::size_t>(i - db)] = q;
    for (int j = 0; j <= db; ++j)
      rem[static_cast<std::size_t>(i - db + j)] -= q * b.coefficients()[static_cast<std::size_t>(j)];
  }
  rem.resize(static_cast<std::size_t>(db));
  return {UniPoly(std::move(quot)), UniPoly(std::move(rem))};
}

UniPoly operator%(const UniPoly& a, const UniPoly& b) { return divmod(a, b).second; }

UniPoly operator/(const UniPoly& a, const UniPoly& b) { return divmod(a, b).first; }

UniPoly gcd(const UniPoly& a, const UniPoly& b) {
  UniPoly x = a.monic();
  UniPoly y = b.monic();
  while (!y.is_zero()) {
    UniPoly r = (x % y).monic();
    x = std::move(y);
    y = std::move(r);
  }
  return x;
}

UniPoly squarefree_part(const UniPoly& p) {
  if (p.is_zero()) throw ZeroPolynomial("squarefree_part");
  return (p / gcd(p, p.derivative())).monic();
}

UniPoly characteristic_polynomial(const QMatrix& a) {
  if (!a.is_square()) throw DimensionMismatch("characteristic polynomial of a non-square matrix");
  const std::size_t n = a.rows();
  // Reduce to upper Hessenberg form by similarity transforms.
  QMatrix h = a;
  for (std::size_t m = 1; m + 1 < n; ++m) {
    std::size_t i = m;
    while (i < n && sgn(h(i, m - 1)) == 0) ++i;
    if (i == n) continue;
    if (i != m) {
      for (std::size_t c = 0; c < n; ++c) std::swap(h(i, c), h(m, c));
      for (std::size_t r = 0; r < n; ++r) std::swap(h(r, i), h(r, m));
    }
    const Rational pivot = h(m, m - 1);
    for (std::size_t r = m + 1; r < n; ++r) {
      if (sgn(h(r, m - 1)) == 0) continue;
      const Rational u = h(r, m - 1) / pivot;
      for (std::size_t c = 0; c < n; ++c)
        if (sgn(h(m, c)) != 0) h(r, c) -= u * h(m, c);
      for (std::size_t rr = 0; rr < n; ++rr)
        if (sgn(h(rr, r)) != 0) h(rr, m) += u * h(rr, r);
    }
  }
  // p_{m+1} = (x - h_mm) p_m - sum_i h_{m-i,m} (prod_{j=m-i+1}^{m} h_{j,j-1}) p_{m-i}
  std::vector<UniPoly> p{UniPoly::constant(1)};
  const UniPoly x = UniPoly::monomial(1, 1);
  for (std::size_t m = 0; m < n; ++m) {
    UniPoly next = (x - UniPoly::constant(h(m, m))) * p[m];
    Rational prod = 1;
    for (std::size_t i = 1; i <= m; ++i) {
      prod *= h(m - i + 1, m - i);
      if (sgn(prod) == 0) break;
      const Rational t = h(m - i, m) * prod;
      if (sgn(t) != 0) next = next - t * p[m - i];
    }
    p.push_back(std::move(next));
  }
  return p[n];
}

QMatrix evaluate(const UniPoly& p, const QMatrix& m) {
  if (!m.is_square()) throw DimensionMismatch("polynomial of a non-square matrix");
  QMatrix acc(m.rows(), m.cols());
  const auto& c = p.coefficients();
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    acc = acc * m;
    for (std::size_t i = 0; i < m.rows(); ++i) acc(i, i) += *it;
  }
  return acc;
}

SturmSequence::SturmSequence(const UniPoly& p) {
  if (p.is_zero()) throw ZeroPolynomial("Sturm sequence");
  std::vector<UniPoly> chain{p};
  UniPoly d = p.derivative();
  if (!d.is_zero()) {
    chain.push_back(d);
    while (true) {
      UniPoly r = -(chain[chain.size() - 2] % chain.back());
      if (r.is_zero()) break;
      chain.push_back(Rational(1) / abs(r.leading()) * r);
    }
  }
  for (const UniPoly& q : chain) chain_.push_back(detail::integer_multiple(q));
}

int SturmSequence::variations(const Rational& x) const {
  int changes = 0;
  int last = 0;
  for (const auto& q : chain_) {
    const int s = detail::integer_sign(q, x);
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

int SturmSequence::count(const Rational& a, const Rational& b) const {
  return variations(a) - variations(b);
}

namespace detail {

std::vector<Integer> integer_multiple(const UniPoly& p) {
  Integer den = 1;
  for (const auto& c : p.coefficients()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
  std::vector<Integer> out;
  Integer content = 0;
  for (const auto& c : p.coefficients()) {
    Integer v = c.get_num() * (den / c.get_den());
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v.get_mpz_t());
    out.push_back(std::move(v));
  }
  if (content > 1)
    for (auto& v : out) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), content.get_mpz_t());
  return out;
}

int integer_sign(const std::vector<Integer>& p, const Rational& x) {
  if (p.empty()) return 0;
  const mpz_class& n = x.get_num();
  const mpz_class& q = x.get_den();
  Integer acc = p.back();
  Integer qpow = 1;
  for (std::size_t i = p.size() - 1; i-- > 0;) {
    qpow *= q;
    acc *= n;
    acc += p[i] * qpow;
  }
  return sgn(acc);
}

}  // namespace detail

}  // namespace schemegb
