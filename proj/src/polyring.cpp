#include "schemegb/polyring.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "schemegb/errors.hpp"

namespace schemegb {

Monomial Monomial::variable(std::size_t nvars, std::size_t var, unsigned power) {
  Monomial m(nvars);
  m.exps_.at(var) = power;
  return m;
}

unsigned Monomial::degree() const { return std::accumulate(exps_.begin(), exps_.end(), 0u); }

bool Monomial::divides(const Monomial& other) const {
  if (exps_.size() != other.exps_.size()) throw DimensionMismatch("monomials from different rings");
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] > other.exps_[i]) return false;
  return true;
}

Monomial Monomial::quotient_of(const Monomial& other) const {
  Monomial q = other;
  for (std::size_t i = 0; i < exps_.size(); ++i) q.exps_[i] -= exps_[i];
  return q;
}

Monomial Monomial::lcm(const Monomial& other) const {
  Monomial l = *this;
  for (std::size_t i = 0; i < exps_.size(); ++i) l.exps_[i] = std::max(exps_[i], other.exps_[i]);
  return l;
}

bool Monomial::coprime(const Monomial& other) const {
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] > 0 && other.exps_[i] > 0) return false;
  return true;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  if (a.exps_.size() != b.exps_.size()) throw DimensionMismatch("monomials from different rings");
  Monomial p = a;
  for (std::size_t i = 0; i < a.exps_.size(); ++i) p.exps_[i] += b.exps_[i];
  return p;
}

std::string Monomial::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] == 0) continue;
    if (!first) os << "*";
    first = false;
    os << "x" << i;
    if (exps_[i] > 1) os << "^" << exps_[i];
  }
  return first ? "1" : os.str();
}

// ---------------------------------------------------------------------------

MonomialOrder::MonomialOrder(Kind kind, std::vector<std::size_t> priority)
    : kind_(kind), priority_(std::move(priority)) {
  std::vector<std::size_t> sorted = priority_;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i)
    if (sorted[i] != i) throw DimensionMismatch("variable priority must be a permutation");
}

MonomialOrder MonomialOrder::lex(std::size_t nvars) {
  std::vector<std::size_t> p(nvars);
  std::iota(p.begin(), p.end(), 0);
  return {Kind::kLex, p};
}

MonomialOrder MonomialOrder::deglex(std::size_t nvars) {
  std::vector<std::size_t> p(nvars);
  std::iota(p.begin(), p.end(), 0);
  return {Kind::kDegLex, p};
}

MonomialOrder MonomialOrder::lex_smallest(std::size_t nvars, std::size_t smallest) {
  if (smallest >= nvars) throw DimensionMismatch("smallest variable out of range");
  std::vector<std::size_t> p;
  for (std::size_t i = 0; i < nvars; ++i)
    if (i != smallest) p.push_back(i);
  p.push_back(smallest);
  return {Kind::kLex, p};
}

std::strong_ordering MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  if (a.size() != priority_.size() || b.size() != priority_.size())
    throw DimensionMismatch("monomial size does not match the order");
  if (kind_ == Kind::kDegLex) {
    const unsigned da = a.degree();
    const unsigned db = b.degree();
    if (da != db) return da <=> db;
  }
  for (std::size_t v : priority_)
    if (a[v] != b[v]) return a[v] <=> b[v];
  return std::strong_ordering::equal;
}

std::string MonomialOrder::to_string() const {
  std::ostringstream os;
  os << (kind_ == Kind::kLex ? "lex" : "deglex") << "(";
  for (std::size_t i = 0; i < priority_.size(); ++i) os << (i ? " > " : "") << "x" << priority_[i];
  os << ")";
  return os.str();
}

// ---------------------------------------------------------------------------

MPoly MPoly::constant(std::size_t nvars, const Rational& c) {
  MPoly p(nvars);
  p.add_term(Monomial(nvars), c);
  return p;
}

MPoly MPoly::variable(std::size_t nvars, std::size_t var) {
  return term(Monomial::variable(nvars, var), 1);
}

MPoly MPoly::term(const Monomial& m, const Rational& c) {
  MPoly p(m.size());
  p.add_term(m, c);
  return p;
}

Rational MPoly::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

void MPoly::add_term(const Monomial& m, const Rational& c) {
  if (m.size() != nvars_) throw DimensionMismatch("term from a different ring");
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

unsigned MPoly::total_degree() const {
  unsigned d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
  return d;
}

std::vector<std::size_t> MPoly::support() const {
  std::vector<std::size_t> vars;
  for (std::size_t v = 0; v < nvars_; ++v)
    for (const auto& [m, c] : terms_)
      if (m[v] > 0) {
        vars.push_back(v);
        break;
      }
  return vars;
}

Monomial MPoly::leading_monomial(const MonomialOrder& order) const {
  if (terms_.empty()) throw ZeroPolynomial("leading monomial");
  auto best = terms_.begin();
  for (auto it = std::next(best); it != terms_.end(); ++it)
    if (order.less(best->first, it->first)) best = it;
  return best->first;
}

Rational MPoly::leading_coefficient(const MonomialOrder& order) const {
  return terms_.at(leading_monomial(order));
}

MPoly MPoly::monic(const MonomialOrder& order) const {
  if (is_zero()) return *this;
  return Rational(1) / leading_coefficient(order) * *this;
}

Rational MPoly::evaluate(const std::vector<Rational>& point) const {
  if (point.size() != nvars_) throw DimensionMismatch("evaluation point size");
  Rational sum = 0;
  for (const auto& [m, c] : terms_) {
    Rational t = c;
    for (std::size_t v = 0; v < nvars_; ++v)
      for (unsigned e = 0; e < m[v]; ++e) t *= point[v];
    sum += t;
  }
  return sum;
}

Interval MPoly::evaluate(const std::vector<Interval>& point) const {
  if (point.size() != nvars_) throw DimensionMismatch("evaluation point size");
  std::vector<std::vector<Interval>> powers(nvars_, {Interval::point(1)});
  for (const auto& [m, c] : terms_)
    for (std::size_t v = 0; v < nvars_; ++v)
      while (powers[v].size() <= m[v]) powers[v].push_back(powers[v].back() * point[v]);
  Interval sum = Interval::point(0);
  for (const auto& [m, c] : terms_) {
    Interval t = Interval::point(c);
    for (std::size_t v = 0; v < nvars_; ++v)
      if (m[v] > 0) t = t * powers[v][m[v]];
    sum = sum + t;
  }
  return sum;
}

UniPoly MPoly::to_univariate(std::size_t var) const {
  std::vector<Rational> coeffs;
  for (const auto& [m, c] : terms_) {
    if (m.degree() != m[var]) throw DimensionMismatch("polynomial is not univariate in x" + std::to_string(var));
    if (coeffs.size() <= m[var]) coeffs.resize(m[var] + 1, Rational(0));
    coeffs[m[var]] = c;
  }
  return UniPoly(std::move(coeffs));
}

MPoly MPoly::from_univariate(std::size_t nvars, std::size_t var, const UniPoly& p) {
  MPoly out(nvars);
  for (std::size_t e = 0; e < p.coefficients().size(); ++e)
    out.add_term(Monomial::variable(nvars, var, static_cast<unsigned>(e)), p.coefficients()[e]);
  return out;
}

MPoly MPoly::substitute(std::size_t var, const MPoly& value) const {
  std::vector<MPoly> powers{constant(nvars_, 1)};
  MPoly out(nvars_);
  for (const auto& [m, c] : terms_) {
    while (powers.size() <= m[var]) powers.push_back(powers.back() * value);
    std::vector<unsigned> rest = m.exponents();
    const unsigned e = rest[var];
    rest[var] = 0;
    out = out + (Monomial(rest) * (c * powers[e]));
  }
  return out;
}

MPoly operator+(const MPoly& a, const MPoly& b) {
  if (a.nvars_ != b.nvars_) throw DimensionMismatch("polynomials from different rings");
  MPoly s = a;
  for (const auto& [m, c] : b.terms_) s.add_term(m, c);
  return s;
}

MPoly operator-(const MPoly& a, const MPoly& b) { return a + Rational(-1) * b; }

MPoly operator*(const MPoly& a, const MPoly& b) {
  if (a.nvars_ != b.nvars_) throw DimensionMismatch("polynomials from different rings");
  MPoly p(a.nvars_);
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) p.add_term(ma * mb, ca * cb);
  return p;
}

MPoly operator*(const Rational& c, const MPoly& a) {
  MPoly p(a.nvars_);
  if (sgn(c) == 0) return p;
  p.terms_ = a.terms_;
  for (auto& [m, x] : p.terms_) x *= c;
  return p;
}

MPoly operator*(const Monomial& m, const MPoly& a) {
  MPoly p(a.nvars_);
  for (const auto& [ma, c] : a.terms_) p.terms_.emplace(m * ma, c);
  return p;
}

std::string MPoly::to_string(const MonomialOrder& order) const {
  if (terms_.empty()) return "0";
  std::vector<std::pair<Monomial, Rational>> sorted(terms_.begin(), terms_.end());
  std::sort(sorted.begin(), sorted.end(),
            [&](const auto& a, const auto& b) { return order.less(b.first, a.first); });
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : sorted) {
    if (first) {
      if (sgn(c) < 0) os << "-";
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    const Rational mag = abs(c);
    if (m.is_one()) {
      os << schemegb::to_string(mag);
    } else {
      if (mag != 1) os << schemegb::to_string(mag) << "*";
      os << m.to_string();
    }
  }
  return os.str();
}

// ---------------------------------------------------------------------------

PolyBasis::PolyBasis(std::vector<MPoly> generators, MonomialOrder order) : order_(std::move(order)) {
  for (auto& g : generators) {
    if (g.is_zero()) throw Error("basis generators must be nonzero");
    if (g.nvars() != order_.nvars()) throw DimensionMismatch("generator ring does not match the order");
    MPoly m = g.monic(order_);
    if (std::find(generators_.begin(), generators_.end(), m) != generators_.end()) continue;
    leading_.push_back(m.leading_monomial(order_));
    generators_.push_back(std::move(m));
  }
}

namespace {

struct OrderLess {
  const MonomialOrder* order;
  bool operator()(const Monomial& a, const Monomial& b) const { return order->less(a, b); }
};

}  // namespace

MPoly normal_form(const MPoly& f, const PolyBasis& basis) {
  const MonomialOrder& order = basis.order();
  std::map<Monomial, Rational, OrderLess> pending(OrderLess{&order});
  for (const auto& [m, c] : f.terms()) pending.emplace(m, c);
  MPoly rem(f.nvars());
  const auto& lead = basis.leading_monomials();
  while (!pending.empty()) {
    auto top = std::prev(pending.end());
    const Monomial lt = top->first;
    const Rational c = top->second;
    std::size_t g = 0;
    while (g < lead.size() && !lead[g].divides(lt)) ++g;
    if (g == lead.size()) {
      rem.add_term(lt, c);
      pending.erase(top);
      continue;
    }
    // Generators are monic, so subtracting c * q * g cancels the top term.
    const Monomial q = lead[g].quotient_of(lt);
    pending.erase(top);
    for (const auto& [m, a] : basis.generators()[g].terms()) {
      if (m == lead[g]) continue;
      Monomial key = q * m;
      auto [it, inserted] = pending.emplace(std::move(key), Rational(0));
      it->second -= c * a;
      if (sgn(it->second) == 0) pending.erase(it);
    }
  }
  return rem;
}

MPoly s_polynomial(const MPoly& f, const MPoly& g, const MonomialOrder& order) {
  const Monomial lf = f.leading_monomial(order);
  const Monomial lg = g.leading_monomial(order);
  const Monomial l = lf.lcm(lg);
  return (Rational(1) / f.coefficient(lf)) * (lf.quotient_of(l) * f) -
         (Rational(1) / g.coefficient(lg)) * (lg.quotient_of(l) * g);
}

GroebnerCheck is_groebner(const PolyBasis& basis) {
  const auto& gens = basis.generators();
  const auto& lead = basis.leading_monomials();
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      if (lead[i].coprime(lead[j])) continue;
      MPoly r = normal_form(s_polynomial(gens[i], gens[j], basis.order()), basis);
      if (!r.is_zero()) return {false, std::move(r)};
    }
  return {};
}

std::vector<Monomial> normal_set(const PolyBasis& basis, std::size_t limit) {
  const std::size_t n = basis.order().nvars();
  const auto& lead = basis.leading_monomials();
  auto reducible = [&](const Monomial& m) {
    return std::any_of(lead.begin(), lead.end(), [&](const Monomial& l) { return l.divides(m); });
  };
  std::set<Monomial> found;
  std::vector<Monomial> frontier;
  Monomial one(n);
  if (!reducible(one)) {
    found.insert(one);
    frontier.push_back(one);
  }
  while (!frontier.empty()) {
    Monomial m = frontier.back();
    frontier.pop_back();
    for (std::size_t v = 0; v < n; ++v) {
      Monomial next = m * Monomial::variable(n, v);
      if (reducible(next) || found.count(next)) continue;
      if (found.size() >= limit) return {};
      found.insert(next);
      frontier.push_back(std::move(next));
    }
  }
  std::vector<Monomial> out(found.begin(), found.end());
  std::sort(out.begin(), out.end(), [&](const Monomial& a, const Monomial& b) { return basis.order().less(a, b); });
  return out;
}

QMatrix multiplication_matrix(const PolyBasis& basis, const std::vector<Monomial>& normal_set, std::size_t var) {
  const std::size_t n = normal_set.size();
  const std::size_t nvars = basis.order().nvars();
  std::map<Monomial, std::size_t> position;
  for (std::size_t i = 0; i < n; ++i) position.emplace(normal_set[i], i);
  QMatrix m(n, n);
  const Monomial x = Monomial::variable(nvars, var);
  for (std::size_t c = 0; c < n; ++c) {
    const MPoly r = normal_form(MPoly::term(x * normal_set[c], 1), basis);
    for (const auto& [mono, coeff] : r.terms()) {
      auto it = position.find(mono);
      if (it == position.end())
        throw InternalInvariantViolation("normal form leaves the normal set: " + mono.to_string());
      m(it->second, c) = coeff;
    }
  }
  return m;
}

}  // namespace schemegb
