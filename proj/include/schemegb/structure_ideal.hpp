#pragma once

#include <vector>

#include "schemegb/polyring.hpp"
#include "schemegb/scheme.hpp"

namespace schemegb {

// The structure ideal of a scheme in variables x_0..x_d:
//   x_0 - 1,  x_i x_j - p_ij^0 - sum_{k>=1} p_ij^k x_k   (1 <= i <= j <= d),
// a reduced Groebner basis for degree-lex with normal set {1, x_1, ..., x_d}.
struct StructureBasis {
  Scheme scheme;
  PolyBasis basis;
  std::vector<Monomial> normal_set;
  // Multiplication matrices of x_0..x_d over normal_set.
  std::vector<QMatrix> matrices;

  std::size_t nvars() const { return static_cast<std::size_t>(scheme.d + 1); }
};

// Throws InternalInvariantViolation if the generators fail the Groebner
// criterion or the normal set is not {1, x_1, ..., x_d}.
StructureBasis structure_basis(const Scheme& s);

QMatrix multiplication_matrix(const StructureBasis& sb, std::size_t var);

// e^2 = e for e = sum_i y_i D_i, one polynomial per k:
//   sum_{i,j} p_ij^k y_i y_j - y_k.
std::vector<MPoly> idempotent_equations(const Scheme& s);

// True iff every multiplication matrix has a squarefree minimal polynomial,
// i.e. the quotient algebra is reduced and has d+1 distinct points.
bool verify_radical(const StructureBasis& sb);

}  // namespace schemegb
