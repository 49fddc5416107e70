#include <algorithm>

#include "schemegb/errors.hpp"
#include "schemegb/exactmath.hpp"
#include "integer_poly.hpp"

namespace schemegb {

RealRoot RealRoot::exact(const Rational& value) {
  RealRoot r;
  r.exact_ = true;
  r.lo_ = value;
  r.hi_ = value;
  r.poly_ = UniPoly::linear_root(value);
  return r;
}

RealRoot RealRoot::trusted(UniPoly poly, Rational lo, Rational hi) {
  RealRoot r;
  r.exact_ = false;
  r.integer_poly_ = detail::integer_multiple(poly);
  r.lo_sign_ = r.sign_at(lo);
  r.lo_ = std::move(lo);
  r.hi_ = std::move(hi);
  r.poly_ = std::move(poly);
  return r;
}

RealRoot RealRoot::isolated(UniPoly poly, Rational lo, Rational hi) {
  if (poly.degree() < 1 || lo >= hi)
    throw InternalInvariantViolation("isolating interval must be nonempty for a nonconstant polynomial");
  const int slo = poly.sign_at(lo);
  const int shi = poly.sign_at(hi);
  if (slo == 0 || shi == 0 || slo == shi)
    throw InternalInvariantViolation("polynomial must change sign across the isolating interval");
  if (SturmSequence(poly).count(lo, hi) != 1)
    throw InternalInvariantViolation("interval does not isolate a single root");
  return trusted(std::move(poly), std::move(lo), std::move(hi));
}

UniPoly RealRoot::minimal_polynomial() const { return poly_; }

int RealRoot::sign_at(const Rational& x) const { return detail::integer_sign(integer_poly_, x); }

void RealRoot::bisect() {
  Rational mid = (lo_ + hi_) / 2;
  const int s = sign_at(mid);
  if (s == 0) throw InternalInvariantViolation("rational root inside an irrational isolating interval");
  if (s == lo_sign_)
    lo_ = std::move(mid);
  else
    hi_ = std::move(mid);
}

void RealRoot::refine(const Rational& max_width) {
  if (exact_) return;
  while (hi_ - lo_ > max_width) bisect();
}

RealRoot RealRoot::refined(const Rational& max_width) const {
  RealRoot r = *this;
  r.refine(max_width);
  return r;
}

RealRoot RealRoot::scaled(const Rational& c) const {
  if (exact_ || sgn(c) == 0) return exact(sgn(c) == 0 ? Rational(0) : c * lo_);
  // q(x) = p(x / c) has root c * alpha.
  std::vector<Rational> coeffs = poly_.coefficients();
  Rational factor = 1;
  const Rational inv = 1 / c;
  for (auto& a : coeffs) {
    a *= factor;
    factor *= inv;
  }
  UniPoly q = UniPoly(std::move(coeffs)).monic();
  Rational lo = c * lo_;
  Rational hi = c * hi_;
  if (lo > hi) std::swap(lo, hi);
  return trusted(std::move(q), std::move(lo), std::move(hi));
}

bool RealRoot::is_root_of(const UniPoly& p) const {
  if (exact_) return sgn(p(lo_)) == 0;
  if (p.is_zero()) return true;
  UniPoly g = gcd(p, poly_);
  if (g.degree() < 1) return false;
  // g divides the defining polynomial, so it has at most one (simple) root
  // in the interval and is nonzero at both endpoints.
  return g.sign_at(lo_) != g.sign_at(hi_);
}

std::string RealRoot::to_decimal(int digits) const {
  if (exact_) return schemegb::to_decimal(lo_, digits);
  RealRoot r = refined(decimal_precision(digits + 2));
  return schemegb::to_decimal((r.lo_ + r.hi_) / 2, digits);
}

bool operator==(const RealRoot& a, const RealRoot& b) {
  if (a.exact_ || b.exact_) return a.exact_ == b.exact_ && a.lo_ == b.lo_;
  if (a.hi_ <= b.lo_ || b.hi_ <= a.lo_) return false;
  const UniPoly g = gcd(a.poly_, b.poly_);
  if (g.degree() < 1 || !a.is_root_of(g) || !b.is_root_of(g)) return false;
  const SturmSequence sturm(g);
  RealRoot x = a;
  RealRoot y = b;
  while (true) {
    if (x.hi_ <= y.lo_ || y.hi_ <= x.lo_) return false;
    const Rational lo = std::min(x.lo_, y.lo_);
    const Rational hi = std::max(x.hi_, y.hi_);
    if (sturm.count(lo, hi) == 1) return true;
    x.bisect();
    y.bisect();
  }
}

std::strong_ordering operator<=>(const RealRoot& a, const RealRoot& b) {
  if (a.exact_ && b.exact_) return cmp(a.lo_, b.lo_) <=> 0;
  if (a == b) return std::strong_ordering::equal;
  RealRoot x = a;
  RealRoot y = b;
  while (true) {
    // Touching endpoints separate: an irrational root is strictly interior.
    if (x.hi_ <= y.lo_) return std::strong_ordering::less;
    if (y.hi_ <= x.lo_) return std::strong_ordering::greater;
    if (!x.exact_) x.bisect();
    if (!y.exact_) y.bisect();
  }
}

namespace {

// Cauchy bound: every root has absolute value below the result.
Rational root_bound(const UniPoly& p) {
  Rational m = 0;
  for (int i = 0; i < p.degree(); ++i)
    m = std::max(m, Rational(abs(p.coefficients()[static_cast<std::size_t>(i)] / p.leading())));
  return m + 2;
}

struct Slot {
  Rational lo;
  Rational hi;
};

// vlo and vhi are the sign variations of the chain at lo and hi.
void isolate(const SturmSequence& s, const Rational& lo, const Rational& hi, int vlo, int vhi,
             std::vector<Slot>& out) {
  const int count = vlo - vhi;
  if (count == 0) return;
  if (count == 1) {
    out.push_back({lo, hi});
    return;
  }
  const Rational mid = (lo + hi) / 2;
  const int vmid = s.variations(mid);
  isolate(s, lo, mid, vlo, vmid, out);
  isolate(s, mid, hi, vmid, vhi, out);
}

}  // namespace

std::vector<RealRoot> real_roots(const UniPoly& p, const Rational& precision) {
  if (p.is_zero()) throw ZeroPolynomial("real_roots");
  std::vector<RealRoot> roots;
  if (p.degree() < 1) return roots;
  const UniPoly sq = squarefree_part(p);
  const SturmSequence sturm(sq);
  const std::vector<Integer> sq_int = detail::integer_multiple(sq);
  const auto sign = [&sq_int](const Rational& x) { return detail::integer_sign(sq_int, x); };
  const Rational bound = root_bound(sq);
  std::vector<Slot> slots;
  isolate(sturm, -bound, bound, sturm.variations(-bound), sturm.variations(bound), slots);

  const Integer lead = sq.primitive_integer_form().back();
  const Rational grid(Integer(1), lead);  // rational roots are multiples of 1/lead

  std::vector<Slot> irrational;
  std::vector<bool> is_exact;
  for (Slot slot : slots) {
    // Root lies in (lo, hi].
    if (sign(slot.hi) == 0) {
      roots.push_back(RealRoot::exact(slot.hi));
      is_exact.push_back(true);
      continue;
    }
    bool found = false;
    // Move the left end off a neighbouring root.
    while (sign(slot.lo) == 0) {
      const Rational mid = (slot.lo + slot.hi) / 2;
      if (sign(mid) == 0) {
        roots.push_back(RealRoot::exact(mid));
        found = true;
        break;
      }
      if (sturm.count(slot.lo, mid) == 1)
        slot.hi = mid;
      else
        slot.lo = mid;
    }
    if (found) {
      is_exact.push_back(true);
      continue;
    }
    const int slo = sign(slot.lo);
    while (slot.hi - slot.lo >= grid) {
      const Rational mid = (slot.lo + slot.hi) / 2;
      const int s = sign(mid);
      if (s == 0) {
        roots.push_back(RealRoot::exact(mid));
        found = true;
        break;
      }
      if (s == slo)
        slot.lo = mid;
      else
        slot.hi = mid;
    }
    if (!found) {
      // At most one multiple of 1/lead lies strictly inside the slot.
      Rational scaled = slot.hi * lead;
      Integer k;
      mpz_fdiv_q(k.get_mpz_t(), scaled.get_num_mpz_t(), scaled.get_den_mpz_t());
      Rational candidate(k, lead);
      candidate.canonicalize();
      if (candidate > slot.lo && candidate < slot.hi && sign(candidate) == 0) {
        roots.push_back(RealRoot::exact(candidate));
        found = true;
      }
    }
    if (found) {
      is_exact.push_back(true);
      continue;
    }
    irrational.push_back(slot);
    roots.push_back(RealRoot::exact(0));  // placeholder
    is_exact.push_back(false);
  }

  if (!irrational.empty()) {
    UniPoly rest = sq;
    for (std::size_t i = 0; i < roots.size(); ++i)
      if (is_exact[i]) rest = rest / UniPoly::linear_root(roots[i].value());
    std::size_t next = 0;
    for (std::size_t i = 0; i < roots.size(); ++i) {
      if (is_exact[i]) continue;
      const Slot& slot = irrational[next++];
      roots[i] = RealRoot::trusted(rest, slot.lo, slot.hi).refined(precision);
    }
  }
  return roots;
}

}  // namespace schemegb
