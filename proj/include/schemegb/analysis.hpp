#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "schemegb/fglm.hpp"
#include "schemegb/scheme.hpp"
#include "schemegb/structure_ideal.hpp"

namespace schemegb {

// P has one row per variety point (row 0 is the valency point, the others
// descending lexicographically) and one column per variable x_0..x_d.
// Q = v P^-1, so Q has one row per relation and one column per point.
struct CharacterTable {
  std::vector<std::vector<RealRoot>> P;
  std::vector<std::vector<RealRoot>> Q;
  std::vector<Integer> multiplicities;  // first column of Q, one per point
  std::int64_t v = 1;

  bool is_rational() const;
};

// Lex with `smallest` least and the remaining variables in index order.
MonomialOrder algorithm_order(std::size_t nvars, std::size_t smallest);

// Tries lex bases with each variable smallest, then a generic coordinate, and
// certifies the result (zero residuals, eigenvalue check, P Q = v I).
CharacterTable character_table(const Scheme& s, const Rational& precision);

// P Q = v I: exactly for rational tables, otherwise by interval enclosures
// of width at most `bound`.
bool verify_orthogonality(CharacterTable table, const Rational& bound);

enum class PPolyReason { kAccepted, kEliminantDegreeTooLow, kNotExpressible, kExpressionDegreesWrong };

std::string to_string(PPolyReason reason);

struct VariableDiagnostic {
  std::size_t variable = 0;
  PPolyReason reason = PPolyReason::kAccepted;
  int eliminant_degree = 0;
  std::string detail;
};

struct PPolyReport {
  bool is_p_polynomial = false;
  std::optional<std::size_t> generator_variable;
  // distance_relabeling[i] is the distance assigned to relation i.
  std::optional<std::vector<int>> distance_relabeling;
  std::optional<ReducedGB> witness_basis;
  std::vector<VariableDiagnostic> diagnostics;
};

// For each x_i in turn, converts to lex with x_i smallest and accepts when
// the basis is {x_0 - 1, p(x_i), x_j - q_j(x_i)} with p squarefree of degree
// d+1 and {deg q_j} = {2, ..., d}. Stops at the first success.
PPolyReport check_p_polynomial(const Scheme& s);

// The lex order putting `vars` below every other variable, with x_0 greatest
// and each group in descending index order.
MonomialOrder subset_order(std::size_t nvars, const std::vector<std::size_t>& vars);

// x_j = g_j(vars) for every j outside `vars` and j != 0. Throws
// NotExpressible naming the least inexpressible index, DimensionMismatch for
// an empty set or indices outside 1..d.
std::map<std::size_t, MPoly> express_in_terms_of(const Scheme& s, const std::vector<std::size_t>& vars);

// All subsets of 1..d of the least size that generate every relation,
// lexicographic within that size.
std::vector<std::vector<std::size_t>> minimal_generating_sets(const Scheme& s);

struct CoordinateChange {
  std::size_t added_variable = 0;
  std::int64_t coefficient = 0;
};

// A = sum_i coefficients[i] D_i whose eigenvalues separate the variety
// points. y denotes the coordinate of A.
struct GenericElement {
  std::vector<std::int64_t> coefficients;
  UniPoly eliminant;
  // expressions[j](y) = x_j on the variety.
  std::vector<UniPoly> expressions;
  std::vector<CoordinateChange> trace;
  ReducedGB basis;
};

// Starts from A = D_d and, while the lex basis with y smallest does not
// express x_0..x_{d-1} in y, replaces y by y + c x_j for the least
// inexpressible j and a pseudo-random c in [1, max_coeff].
// Throws AttemptsExhausted after max_attempts changes.
GenericElement find_generic_element(const Scheme& s, std::uint64_t rng_seed, std::int64_t max_coeff = 10,
                                    int max_attempts = 32);

// Lex basis in the coordinates where x_var is replaced by sum_k form[k] x_k,
// with that coordinate smallest.
ReducedGB lex_after_change(const StructureBasis& sb, std::size_t var, const std::vector<Rational>& form);

}  // namespace schemegb
