#include "schemegb/structure_ideal.hpp"

#include <algorithm>

#include "schemegb/errors.hpp"

namespace schemegb {

StructureBasis structure_basis(const Scheme& s) {
  const int d = s.d;
  const auto n = static_cast<std::size_t>(d + 1);
  std::vector<MPoly> gens;
  gens.push_back(MPoly::variable(n, 0) - MPoly::constant(n, 1));
  for (int i = 1; i <= d; ++i)
    for (int j = i; j <= d; ++j) {
      MPoly f = MPoly::variable(n, static_cast<std::size_t>(i)) * MPoly::variable(n, static_cast<std::size_t>(j));
      f.add_term(Monomial(n), Rational(-static_cast<long>(s.tensor(i, j, 0))));
      for (int k = 1; k <= d; ++k)
        f.add_term(Monomial::variable(n, static_cast<std::size_t>(k)), Rational(-static_cast<long>(s.tensor(i, j, k))));
      gens.push_back(std::move(f));
    }
  PolyBasis basis(std::move(gens), MonomialOrder::deglex(n));
  if (basis.size() != 1 + n * (n - 1) / 2)
    throw InternalInvariantViolation("structure basis has duplicate generators");

  const GroebnerCheck check = is_groebner(basis);
  if (!check.is_groebner)
    throw InternalInvariantViolation("structure polynomials are not a Groebner basis; S-polynomial remainder " +
                                     check.witness->to_string(basis.order()));
  std::vector<Monomial> normal{Monomial(n)};
  for (std::size_t k = 1; k < n; ++k) normal.push_back(Monomial::variable(n, k));
  std::vector<Monomial> found = normal_set(basis);
  std::sort(found.begin(), found.end());
  std::vector<Monomial> expected = normal;
  std::sort(expected.begin(), expected.end());
  if (found != expected) throw InternalInvariantViolation("unexpected normal set for the structure basis");

  StructureBasis sb{s, std::move(basis), std::move(normal), {}};
  for (std::size_t v = 0; v < n; ++v) sb.matrices.push_back(multiplication_matrix(sb.basis, sb.normal_set, v));
  return sb;
}

QMatrix multiplication_matrix(const StructureBasis& sb, std::size_t var) {
  if (var >= sb.nvars()) throw DimensionMismatch("variable index out of range");
  return sb.matrices[var];
}

std::vector<MPoly> idempotent_equations(const Scheme& s) {
  const int d = s.d;
  const auto n = static_cast<std::size_t>(d + 1);
  std::vector<MPoly> eqs;
  for (int k = 0; k <= d; ++k) {
    MPoly f(n);
    for (int i = 0; i <= d; ++i)
      for (int j = 0; j <= d; ++j) {
        const std::int64_t p = s.tensor(i, j, k);
        if (p == 0) continue;
        f.add_term(Monomial::variable(n, static_cast<std::size_t>(i)) * Monomial::variable(n, static_cast<std::size_t>(j)),
                   Rational(static_cast<long>(p)));
      }
    f.add_term(Monomial::variable(n, static_cast<std::size_t>(k)), -1);
    eqs.push_back(std::move(f));
  }
  return eqs;
}

bool verify_radical(const StructureBasis& sb) {
  for (const QMatrix& m : sb.matrices) {
    const UniPoly minimal = squarefree_part(characteristic_polynomial(m));
    if (!evaluate(minimal, m).is_zero()) return false;
  }
  return true;
}

}  // namespace schemegb
