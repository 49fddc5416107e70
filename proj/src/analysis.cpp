#include "schemegb/analysis.hpp"

#include <algorithm>
#include <random>

#include "schemegb/errors.hpp"

namespace schemegb {

namespace {

// Narrows r in place and returns its enclosure.
Interval enclose(RealRoot& r, const Rational& w) {
  r.refine(w);
  return r.enclosure();
}

std::strong_ordering compare_points(const VarietyPoint& a, const VarietyPoint& b) {
  for (std::size_t k = 0; k < a.coordinates.size(); ++k) {
    const auto c = a.coordinates[k] <=> b.coordinates[k];
    if (c != 0) return c;
  }
  return std::strong_ordering::equal;
}

bool is_valency_point(const VarietyPoint& p, const Scheme& s) {
  for (std::size_t k = 0; k < p.coordinates.size(); ++k) {
    const RealRoot& c = p.coordinates[k];
    if (!c.is_exact() || c.value() != Rational(static_cast<long>(s.valencies[k]))) return false;
  }
  return true;
}

// Multiplicity of an eigenspace: v / sum_i p_i(j)^2 / k_i, a positive integer.
Integer multiplicity(std::vector<RealRoot> row, const Scheme& s) {
  Rational w(1, 1024);
  for (int iteration = 0; iteration < 200; ++iteration, w /= 1024) {
    Interval sum = Interval::point(0);
    for (std::size_t i = 0; i < row.size(); ++i) {
      const Interval x = enclose(row[i], w);
      sum = sum + Rational(1, static_cast<unsigned long>(s.valencies[i])) * pow(x, 2);
    }
    if (sgn(sum.lo) <= 0) continue;
    const Rational lo = Rational(static_cast<long>(s.v)) / sum.hi;
    const Rational hi = Rational(static_cast<long>(s.v)) / sum.lo;
    if (hi - lo >= Rational(1, 2)) continue;
    Integer n;
    mpz_cdiv_q(n.get_mpz_t(), lo.get_num_mpz_t(), lo.get_den_mpz_t());
    if (Rational(n) > hi) throw InternalInvariantViolation("eigenspace multiplicity is not an integer");
    return n;
  }
  throw InternalInvariantViolation("eigenspace multiplicity could not be determined");
}

std::vector<VarietyPoint> points_from_generic(const StructureBasis& sb, const GenericElement& ge,
                                              const Rational& precision) {
  std::vector<VarietyPoint> points;
  std::vector<std::vector<RealRoot>> candidates(sb.nvars());
  for (RealRoot y : real_roots(ge.eliminant, precision)) {
    VarietyPoint p;
    for (std::size_t j = 0; j < sb.nvars(); ++j) {
      const UniPoly& e = ge.expressions[j];
      if (y.is_exact()) {
        p.coordinates.push_back(RealRoot::exact(e(y.value())));
        continue;
      }
      if (candidates[j].empty())
        candidates[j] = real_roots(squarefree_part(characteristic_polynomial(sb.matrices[j])), precision);
      p.coordinates.push_back(pin_value([&](const Rational& w) { return e(enclose(y, w)); }, candidates[j], precision));
    }
    points.push_back(std::move(p));
  }
  return points;
}

}  // namespace

bool CharacterTable::is_rational() const {
  for (const auto& row : P)
    for (const RealRoot& x : row)
      if (!x.is_exact()) return false;
  return true;
}

MonomialOrder algorithm_order(std::size_t nvars, std::size_t smallest) {
  return MonomialOrder::lex_smallest(nvars, smallest);
}

CharacterTable character_table(const Scheme& s, const Rational& precision) {
  CharacterTable table;
  table.v = s.v;
  if (s.d == 0) {
    table.P = {{RealRoot::exact(1)}};
    table.Q = {{RealRoot::exact(1)}};
    table.multiplicities = {Integer(1)};
    return table;
  }
  const StructureBasis sb = structure_basis(s);
  const std::size_t n = sb.nvars();

  std::vector<VarietyPoint> points;
  bool solved = false;
  for (std::size_t i = 1; i < n && !solved; ++i) {
    try {
      points = solve_triangular(fglm_convert(sb, algorithm_order(n, i)), precision);
      solved = true;
    } catch (const NotTriangularEnough&) {
    }
  }
  if (!solved) points = points_from_generic(sb, find_generic_element(s, 0), precision);

  for (const VarietyPoint& p : points)
    if (!certify_residuals(sb.basis.generators(), p, precision))
      throw InternalInvariantViolation("variety point does not vanish on the structure basis");
  if (!moller_stetter_check(sb, points))
    throw InternalInvariantViolation("variety points disagree with the multiplication matrices");

  const auto valency = std::find_if(points.begin(), points.end(), [&s](const VarietyPoint& p) { return is_valency_point(p, s); });
  if (valency == points.end()) throw InternalInvariantViolation("valency point is missing from the variety");
  std::iter_swap(points.begin(), valency);
  std::sort(points.begin() + 1, points.end(),
            [](const VarietyPoint& a, const VarietyPoint& b) { return compare_points(a, b) > 0; });

  for (VarietyPoint& p : points) table.P.push_back(std::move(p.coordinates));

  if (table.is_rational()) {
    QMatrix p(n, n);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) p(r, c) = table.P[r][c].value();
    const QMatrix q = Rational(static_cast<long>(s.v)) * inverse(p);
    table.Q.assign(n, {});
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) table.Q[r].push_back(RealRoot::exact(q(r, c)));
    for (std::size_t c = 0; c < n; ++c) {
      const Rational& m = q(0, c);
      if (m.get_den() != 1 || sgn(m) <= 0) throw InternalInvariantViolation("eigenspace multiplicity is not a positive integer");
      table.multiplicities.push_back(m.get_num());
    }
  } else {
    for (std::size_t j = 0; j < n; ++j) table.multiplicities.push_back(multiplicity(table.P[j], s));
    table.Q.assign(n, {});
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        const Rational factor = Rational(table.multiplicities[j]) / Rational(static_cast<long>(s.valencies[i]));
        table.Q[i].push_back(table.P[j][i].scaled(factor).refined(precision));
      }
  }
  if (!verify_orthogonality(table, precision)) throw InternalInvariantViolation("P Q differs from v I");
  return table;
}

bool verify_orthogonality(CharacterTable table, const Rational& bound) {
  const std::size_t n = table.P.size();
  if (table.Q.size() != n) return false;
  const Rational v(static_cast<long>(table.v));
  const bool exact = table.is_rational() && std::all_of(table.Q.begin(), table.Q.end(), [](const auto& row) {
                       return std::all_of(row.begin(), row.end(), [](const RealRoot& x) { return x.is_exact(); });
                     });
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      const Rational target = a == b ? v : Rational(0);
      if (exact) {
        Rational sum = 0;
        for (std::size_t i = 0; i < n; ++i) sum += table.P[a][i].value() * table.Q[i][b].value();
        if (sum != target) return false;
        continue;
      }
      Rational w = bound;
      for (int iteration = 0;; ++iteration, w /= Rational(Integer(1) << 32)) {
        Interval sum = Interval::point(0);
        for (std::size_t i = 0; i < n; ++i) sum = sum + enclose(table.P[a][i], w) * enclose(table.Q[i][b], w);
        if (!sum.contains(target)) return false;
        if (sum.width() <= bound) break;
        if (iteration > 200) return false;
      }
    }
  return true;
}

std::string to_string(PPolyReason reason) {
  switch (reason) {
    case PPolyReason::kAccepted: return "accepted";
    case PPolyReason::kEliminantDegreeTooLow: return "eliminant degree too low";
    case PPolyReason::kNotExpressible: return "variable not expressible";
    case PPolyReason::kExpressionDegreesWrong: return "expression degrees wrong";
  }
  return "unknown";
}

PPolyReport check_p_polynomial(const Scheme& s) {
  PPolyReport report;
  const int d = s.d;
  if (d == 0) {
    report.is_p_polynomial = true;
    report.distance_relabeling = std::vector<int>{0};
    return report;
  }
  const StructureBasis sb = structure_basis(s);
  const std::size_t n = sb.nvars();
  for (std::size_t i = 1; i < n; ++i) {
    VariableDiagnostic diag;
    diag.variable = i;
    ReducedGB gb = fglm_convert(sb, algorithm_order(n, i));
    const UniPoly p = gb.eliminant();
    diag.eliminant_degree = p.degree();
    if (p.degree() != d + 1 || squarefree_part(p).degree() != p.degree()) {
      diag.reason = PPolyReason::kEliminantDegreeTooLow;
      diag.detail = "eliminant " + p.monic().to_string("x" + std::to_string(i)) + " has degree " +
                    std::to_string(p.degree()) + ", need " + std::to_string(d + 1);
      report.diagnostics.push_back(std::move(diag));
      continue;
    }
    std::vector<int> distance(n, 0);
    distance[i] = 1;
    std::vector<int> degrees;
    std::optional<std::size_t> missing;
    for (std::size_t j = 1; j < n; ++j) {
      if (j == i) continue;
      const auto q = gb.expression_for(j, {i});
      if (!q) {
        missing = j;
        break;
      }
      const int deg = q->is_zero() ? 0 : q->to_univariate(i).degree();
      distance[j] = deg;
      degrees.push_back(deg);
    }
    if (missing) {
      diag.reason = PPolyReason::kNotExpressible;
      diag.detail = "x" + std::to_string(*missing) + " is not a polynomial in x" + std::to_string(i);
      report.diagnostics.push_back(std::move(diag));
      continue;
    }
    std::vector<int> sorted = degrees;
    std::sort(sorted.begin(), sorted.end());
    std::vector<int> wanted;
    for (int k = 2; k <= d; ++k) wanted.push_back(k);
    if (sorted != wanted) {
      diag.reason = PPolyReason::kExpressionDegreesWrong;
      diag.detail = "expression degrees";
      for (int deg : sorted) diag.detail += " " + std::to_string(deg);
      report.diagnostics.push_back(std::move(diag));
      continue;
    }
    diag.reason = PPolyReason::kAccepted;
    report.diagnostics.push_back(std::move(diag));
    report.is_p_polynomial = true;
    report.generator_variable = i;
    report.distance_relabeling = std::move(distance);
    report.witness_basis = std::move(gb);
    break;
  }
  return report;
}

MonomialOrder subset_order(std::size_t nvars, const std::vector<std::size_t>& vars) {
  std::vector<std::size_t> priority{0};
  for (std::size_t k = nvars; k-- > 1;)
    if (std::find(vars.begin(), vars.end(), k) == vars.end()) priority.push_back(k);
  for (std::size_t k = nvars; k-- > 1;)
    if (std::find(vars.begin(), vars.end(), k) != vars.end()) priority.push_back(k);
  return MonomialOrder(MonomialOrder::Kind::kLex, std::move(priority));
}

std::map<std::size_t, MPoly> express_in_terms_of(const Scheme& s, const std::vector<std::size_t>& vars) {
  const auto n = static_cast<std::size_t>(s.d + 1);
  if (vars.empty()) throw DimensionMismatch("the generating set must be nonempty");
  for (std::size_t k : vars)
    if (k == 0 || k >= n) throw DimensionMismatch("variable x" + std::to_string(k) + " is not a relation index");
  const StructureBasis sb = structure_basis(s);
  const ReducedGB gb = fglm_convert(sb, subset_order(n, vars));
  std::map<std::size_t, MPoly> out;
  for (std::size_t j = 1; j < n; ++j) {
    if (std::find(vars.begin(), vars.end(), j) != vars.end()) continue;
    auto g = gb.expression_for(j, vars);
    if (!g) throw NotExpressible(static_cast<int>(j));
    out.emplace(j, std::move(*g));
  }
  return out;
}

namespace {

bool generates(const StructureBasis& sb, const std::vector<std::size_t>& vars) {
  const ReducedGB gb = fglm_convert(sb, subset_order(sb.nvars(), vars));
  for (std::size_t j = 1; j < sb.nvars(); ++j)
    if (std::find(vars.begin(), vars.end(), j) == vars.end() && !gb.expression_for(j, vars)) return false;
  return true;
}

// Advances `subset` (ascending indices in 1..d) to the next one of the same
// size in lexicographic order.
bool next_subset(std::vector<std::size_t>& subset, std::size_t d) {
  const std::size_t size = subset.size();
  for (std::size_t pos = size; pos-- > 0;) {
    if (subset[pos] < d - (size - 1 - pos)) {
      ++subset[pos];
      for (std::size_t q = pos + 1; q < size; ++q) subset[q] = subset[q - 1] + 1;
      return true;
    }
  }
  return false;
}

}  // namespace

std::vector<std::vector<std::size_t>> minimal_generating_sets(const Scheme& s) {
  const auto d = static_cast<std::size_t>(s.d);
  if (d == 0) return {{}};
  const StructureBasis sb = structure_basis(s);
  for (std::size_t size = 1; size <= d; ++size) {
    std::vector<std::vector<std::size_t>> found;
    std::vector<std::size_t> subset(size);
    for (std::size_t k = 0; k < size; ++k) subset[k] = k + 1;
    do {
      if (generates(sb, subset)) found.push_back(subset);
    } while (next_subset(subset, d));
    if (!found.empty()) return found;
  }
  throw InternalInvariantViolation("the full relation set does not generate the algebra");
}

ReducedGB lex_after_change(const StructureBasis& sb, std::size_t var, const std::vector<Rational>& form) {
  return fglm_convert(with_linear_form(multiplication_table(sb), var, form), algorithm_order(sb.nvars(), var));
}

GenericElement find_generic_element(const Scheme& s, std::uint64_t rng_seed, std::int64_t max_coeff,
                                    int max_attempts) {
  if (max_coeff < 1) throw DimensionMismatch("max_coeff must be positive");
  const auto n = static_cast<std::size_t>(s.d + 1);
  const std::size_t last = n - 1;
  const StructureBasis sb = structure_basis(s);
  MultiplicationTable table = multiplication_table(sb);
  std::mt19937_64 rng(rng_seed);

  std::vector<std::int64_t> coefficients(n, 0);
  coefficients[last] = 1;
  std::vector<CoordinateChange> trace;
  for (int attempt = 0;; ++attempt) {
    ReducedGB gb = fglm_convert(table, algorithm_order(n, last));
    std::optional<std::size_t> blocked;
    for (std::size_t j = 0; j < last; ++j)
      if (!gb.expression_for(j, {last})) {
        blocked = j;
        break;
      }
    if (!blocked) {
      UniPoly eliminant = gb.eliminant().monic();
      if (static_cast<std::size_t>(eliminant.degree()) != n)
        throw InternalInvariantViolation("separating coordinate with an eliminant of the wrong degree");
      std::vector<UniPoly> expressions(n);
      UniPoly own = UniPoly::monomial(1, 1);
      for (std::size_t j = 0; j < last; ++j) {
        expressions[j] = gb.expression_for(j, {last})->to_univariate(last);
        own = own - Rational(static_cast<long>(coefficients[j])) * expressions[j];
      }
      expressions[last] = own;
      return {std::move(coefficients), std::move(eliminant), std::move(expressions), std::move(trace), std::move(gb)};
    }
    if (attempt >= max_attempts)
      throw AttemptsExhausted("no separating coordinate after " + std::to_string(max_attempts) + " changes");
    const auto c = static_cast<std::int64_t>(1 + rng() % static_cast<std::uint64_t>(max_coeff));
    coefficients[*blocked] += c;
    trace.push_back({*blocked, c});
    table.matrices[last] = table.matrices[last] + Rational(static_cast<long>(c)) * sb.matrices[*blocked];
  }
}

}  // namespace schemegb
