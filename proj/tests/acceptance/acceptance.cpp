// One PASS/FAIL line per acceptance criterion.
// Usage: acceptance <path to schemegb CLI> <criterion 1..9>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>

#include "schemegb/errors.hpp"
#include "test_support.hpp"

using namespace schemegb;
using namespace schemegb::testing;

namespace {

struct Outcome {
  bool pass;
  std::string detail;
};

using Rows = std::vector<std::vector<Rational>>;

std::string cli_path;

Rows exact(const std::vector<std::vector<RealRoot>>& m) {
  Rows out;
  for (const auto& row : m) {
    out.emplace_back();
    for (const auto& x : row) out.back().push_back(x.value());
  }
  return out;
}

bool times_is_scalar(const Rows& a, const Rows& b, std::int64_t v) {
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b[0].size(); ++j) {
      Rational sum = 0;
      for (std::size_t k = 0; k < b.size(); ++k) sum += a[i][k] * b[k][j];
      if (sum != Rational(i == j ? static_cast<long>(v) : 0L)) return false;
    }
  return true;
}

std::vector<VarietyPoint> points_of(const CharacterTable& t) {
  std::vector<VarietyPoint> out;
  for (const auto& row : t.P) out.push_back(VarietyPoint{row});
  return out;
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
  return out;
}

struct Process {
  int code;
  std::string out;
};

Process run_cli_process(const std::string& args) {
  const std::string cmd = "'" + cli_path + "' " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return {-1, ""};
  std::string out;
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

Outcome criterion1() {
  const Scheme s = load("ex1.json");
  // Our orbit order puts the valency-6 class first; the reference lists {3, 6} first.
  const std::vector<int> swap{0, 2, 1};
  const StructureBasis sb = structure_basis(relabel(s, swap));
  const auto order = sb.basis.order();
  const std::vector<MPoly> reference{
      poly(3, {{1, {0, 0, 2}}, {-6, {0, 0, 0}}, {-6, {0, 1, 0}}, {-3, {0, 0, 1}}}),
      poly(3, {{1, {1, 0, 0}}, {-1, {0, 0, 0}}}),
      poly(3, {{1, {0, 2, 0}}, {-1, {0, 1, 0}}, {-2, {0, 0, 0}}}),
      poly(3, {{1, {0, 1, 1}}, {-2, {0, 0, 1}}}),
  };
  if (canonical(sb.basis.generators(), order) != canonical(reference, order))
    return {false, "structure equations differ: " + join(canonical(sb.basis.generators(), order), ", ")};
  const CharacterTable t = character_table(relabel(s, swap), decimal_precision(30));
  if (!t.is_rational()) return {false, "table is not rational"};
  const Rows expected{{1, 2, 6}, {1, 2, -3}, {1, -1, 0}};
  const Rows got = exact(t.P);
  if (std::multiset<std::vector<Rational>>(got.begin(), got.end()) !=
      std::multiset<std::vector<Rational>>(expected.begin(), expected.end()))
    return {false, "P rows differ"};
  return {true, "F matches after swapping classes 1 and 2; P = [[1,2,6],[1,2,-3],[1,-1,0]] up to row order"};
}

Outcome criterion2() {
  const PPolyReport r = check_p_polynomial(load("ex1.json"));
  if (!r.is_p_polynomial) return {false, "reported not P-polynomial"};
  const UniPoly e = r.witness_basis->eliminant().monic();
  if (e != UniPoly{0, -18, -3, 1}) return {false, "eliminant " + e.to_string()};
  return {true, "P-polynomial via x" + std::to_string(*r.generator_variable) + ", eliminant " + e.to_string()};
}

Outcome criterion3() {
  const StructureBasis sb = structure_basis(load("ex2.json"));
  const auto deg = sb.basis.order();
  const std::vector<MPoly> generators{
      poly(4, {{1, {0, 2, 0, 0}}, {-4, {0, 0, 1, 0}}, {-4, {0, 0, 0, 1}}, {-4, {0, 0, 0, 0}}}),
      poly(4, {{1, {0, 0, 0, 2}}, {-1, {0, 0, 0, 0}}}),
      poly(4, {{1, {1, 0, 0, 0}}, {-1, {0, 0, 0, 0}}}),
      poly(4, {{1, {0, 1, 1, 0}}, {-2, {0, 1, 0, 0}}}),
      poly(4, {{1, {0, 1, 0, 1}}, {-1, {0, 1, 0, 0}}}),
      poly(4, {{1, {0, 0, 2, 0}}, {-2, {0, 0, 0, 1}}, {-2, {0, 0, 0, 0}}}),
      poly(4, {{1, {0, 0, 1, 1}}, {-1, {0, 0, 1, 0}}}),
  };
  if (sb.basis.size() != 7 || canonical(sb.basis.generators(), deg) != canonical(generators, deg))
    return {false, "structure equations differ"};
  // Lex orders with x1, x2, x3 smallest; the first uses x3 > x2 > x1 as in the reference.
  const std::vector<std::pair<MonomialOrder, std::vector<MPoly>>> cases{
      {MonomialOrder(MonomialOrder::Kind::kLex, {0, 3, 2, 1}),
       {poly(4, {{4, {0, 0, 0, 1}}, {4, {0, 0, 1, 0}}, {-1, {0, 2, 0, 0}}, {4, {0, 0, 0, 0}}}),
        poly(4, {{2, {0, 0, 2, 0}}, {4, {0, 0, 1, 0}}, {-1, {0, 2, 0, 0}}}),
        poly(4, {{1, {0, 1, 1, 0}}, {-2, {0, 1, 0, 0}}}), poly(4, {{-16, {0, 1, 0, 0}}, {1, {0, 3, 0, 0}}}),
        poly(4, {{1, {1, 0, 0, 0}}, {-1, {0, 0, 0, 0}}})}},
      {MonomialOrder::lex_smallest(4, 2),
       {poly(4, {{1, {1, 0, 0, 0}}, {-1, {0, 0, 0, 0}}}),
        poly(4, {{1, {0, 2, 0, 0}}, {-4, {0, 0, 1, 0}}, {-2, {0, 0, 2, 0}}}),
        poly(4, {{1, {0, 1, 1, 0}}, {-2, {0, 1, 0, 0}}}),
        poly(4, {{-1, {0, 0, 2, 0}}, {2, {0, 0, 0, 1}}, {2, {0, 0, 0, 0}}}),
        poly(4, {{-4, {0, 0, 1, 0}}, {1, {0, 0, 3, 0}}})}},
      {MonomialOrder::lex_smallest(4, 3), generators},
  };
  for (std::size_t c = 0; c < cases.size(); ++c) {
    const auto& [order, reference] = cases[c];
    const ReducedGB gb = fglm_convert(sb, order);
    if (canonical(gb.basis.generators(), order) != canonical(reference, order))
      return {false, "lex basis " + std::to_string(c + 1) + " differs: " +
                         join(canonical(gb.basis.generators(), order), ", ")};
  }
  const PPolyReport r = check_p_polynomial(sb.scheme);
  if (r.is_p_polynomial) return {false, "reported P-polynomial"};
  return {true, "7 generators and 3 lex bases match after monic normalization; not P-polynomial"};
}

Outcome criterion4() {
  const Scheme s = load("ex2.json");
  const CharacterTable t = character_table(s, decimal_precision(30));
  if (!t.is_rational()) return {false, "table is not rational"};
  const Rows P = exact(t.P);
  const std::set<std::vector<Rational>> expected{{1, 4, 2, 1}, {1, -4, 2, 1}, {1, 0, 0, -1}, {1, 0, -2, 1}};
  if (P.size() != 4 || std::set<std::vector<Rational>>(P.begin(), P.end()) != expected)
    return {false, "variety points differ"};
  const StructureBasis sb = structure_basis(s);
  for (const auto& row : P)
    for (const MPoly& g : sb.basis.generators())
      if (g.evaluate(row) != 0) return {false, "nonzero residual"};
  if (!times_is_scalar(P, exact(t.Q), 8)) return {false, "P Q != 8 I"};
  return {true, "4 distinct points, all residuals exactly 0, P Q = 8 I"};
}

Outcome criterion5() {
  const Scheme s = load("ex2.json");
  const auto e = express_in_terms_of(s, {1, 2});
  if (e.size() != 1 || !e.count(3)) return {false, "expected exactly x3 to be expressed"};
  const CharacterTable t = character_table(s, decimal_precision(30));
  for (const auto& row : exact(t.P))
    if (e.at(3).evaluate(row) != row[3]) return {false, "x3 expression is wrong at a point"};
  return {true, "x3 = " + e.at(3).to_string(subset_order(4, {1, 2})) + " at all 4 points"};
}

Outcome criterion6() {
  const StructureBasis sb = structure_basis(load("ex2.json"));
  const ReducedGB gb = lex_after_change(sb, 3, {0, 1, 0, 1});
  const UniPoly e = gb.eliminant();
  if (e != UniPoly{15, 2, -16, -2, 1}) return {false, "eliminant " + e.to_string("y")};
  std::set<Rational> roots;
  for (const auto& r : real_roots(e, Rational(1, 10))) {
    if (!r.is_exact()) return {false, "irrational root"};
    roots.insert(r.value());
  }
  if (roots != std::set<Rational>{5, -3, 1, -1}) return {false, "roots differ"};
  std::vector<std::string> seeds;
  for (std::uint64_t seed = 0; seed <= 4; ++seed) {
    const GenericElement g = find_generic_element(sb.scheme, seed);
    if (g.eliminant.degree() != 4 || squarefree_part(g.eliminant) != g.eliminant)
      return {false, "seed " + std::to_string(seed) + " eliminant " + g.eliminant.to_string("y")};
    std::vector<std::string> c;
    for (auto x : g.coefficients) c.push_back(std::to_string(x));
    seeds.push_back("(" + join(c, ",") + ")");
  }
  return {true, "y = x3 + x1 gives " + e.to_string("y") + " with roots {5,-3,1,-1}; seeds 0..4 give A = " +
                    join(seeds, " ")};
}

Outcome criterion7() {
  const std::vector<std::pair<std::string, Scheme>> schemes{
      {"ex1", load("ex1.json")}, {"ex2", load("ex2.json")}, {"K3", load("k3.json")}, {"H(3,2)", hamming_scheme(3, 2)}};
  for (const auto& [name, s] : schemes) {
    const CharacterTable t = character_table(s, decimal_precision(30));
    if (!moller_stetter_check(structure_basis(s), points_of(t))) return {false, name + " eigenvalue check failed"};
  }
  const PPolyReport h = check_p_polynomial(schemes[3].second);
  if (!h.is_p_polynomial) return {false, "H(3,2) reported not P-polynomial"};
  if (h.witness_basis->eliminant().degree() != 4) return {false, "H(3,2) eliminant degree is not 4"};
  return {true, "eigenvalue check holds on ex1, ex2, K3, H(3,2); H(3,2) P-polynomial with eliminant " +
                    h.witness_basis->eliminant().to_string("x" + std::to_string(*h.generator_variable))};
}

std::string property_failure(const Scheme& s, std::mt19937_64& rng) {
  const StructureBasis sb = structure_basis(s);
  const auto n = sb.nvars();
  if (!is_groebner(sb.basis).is_groebner) return "structure equations are not a Groebner basis";
  if (normal_set(sb.basis).size() != n) return "normal set size is not d+1";
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (sb.matrices[i] * sb.matrices[j] != sb.matrices[j] * sb.matrices[i]) return "matrices do not commute";
  for (const MPoly& g : sb.basis.generators())
    if (g.evaluate(valency_point(s)) != 0) return "valency point is not on the variety";
  const CharacterTable t = character_table(s, decimal_precision(30));
  if (t.P.size() != n) return "wrong number of points";
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < a; ++b)
      if (t.P[a] == t.P[b]) return "repeated point";
  if (t.is_rational() ? !times_is_scalar(exact(t.P), exact(t.Q), s.v)
                      : !verify_orthogonality(t, decimal_precision(20)))
    return "P Q != v I";
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin() + 1, perm.end(), rng);
  const PPolyReport before = check_p_polynomial(s);
  const PPolyReport after = check_p_polynomial(relabel(s, perm));
  if (before.is_p_polynomial != after.is_p_polynomial) return "P-polynomial verdict changed under relabeling";
  return "";
}

Outcome criterion8() {
  std::vector<std::pair<std::string, Scheme>> schemes{
      {"ex1", load("ex1.json")}, {"ex2", load("ex2.json")}, {"K3", load("k3.json")}, {"H(3,2)", hamming_scheme(3, 2)}};
  for (const auto& [m, r] : random_orbit_parameters(20, 60, 20240601))
    schemes.emplace_back("orbit(" + std::to_string(m) + "," + std::to_string(r) + ")", orbit_scheme(m, r));
  std::mt19937_64 rng(7);
  std::size_t ppoly = 0;
  for (const auto& [name, s] : schemes) {
    const std::string why = property_failure(s, rng);
    if (!why.empty()) return {false, name + ": " + why};
    ppoly += check_p_polynomial(s).is_p_polynomial;
  }
  return {true, std::to_string(schemes.size()) + " schemes satisfy all properties (" + std::to_string(ppoly) +
                    " P-polynomial)"};
}

Outcome criterion9() {
  for (const std::string name : {"ex1.json", "ex2.json"}) {
    const Process p = run_cli_process("chartab --format json '" + data_path(name) + "'");
    if (p.code != 0) return {false, "chartab exit " + std::to_string(p.code) + " on " + name};
    const Json j = Json::parse(p.out);
    Rows P, Q;
    for (const auto& row : j["P"]) {
      P.emplace_back();
      for (const auto& x : row) P.back().push_back(rational_from_json(x));
    }
    for (const auto& row : j["Q"]) {
      Q.emplace_back();
      for (const auto& x : row) Q.back().push_back(rational_from_json(x));
    }
    const Scheme s = load(name);
    if (P != exact(character_table(s, decimal_precision(30)).P)) return {false, "P from JSON differs on " + name};
    if (!times_is_scalar(P, Q, s.v)) return {false, "P Q != v I from JSON on " + name};
  }
  for (const std::string args : {"chartab --format json", "chartab", "ppoly --format json", "generator --format json",
                                 "express --vars 1,2 --format json"}) {
    const Process a = run_cli_process(args + " '" + data_path("ex2.json") + "'");
    const Process b = run_cli_process(args + " '" + data_path("ex2.json") + "'");
    if (a.code != 0 || a.out != b.out || a.out.empty()) return {false, "output of '" + args + "' not reproducible"};
  }
  const std::vector<std::pair<std::string, int>> bad{
      {"bad_json.json", 2}, {"bad_radix.json", 3}, {"bad_asymmetric.json", 3}};
  for (const auto& [name, code] : bad) {
    const Process p = run_cli_process("validate '" + data_path(name) + "'");
    if (p.code != code)
      return {false, name + " exit " + std::to_string(p.code) + ", expected " + std::to_string(code)};
  }
  return {true, "chartab JSON round-trips exactly; output byte-identical; exit codes 2, 3, 3 on bad inputs"};
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 3) {
    std::cerr << "usage: acceptance <cli> <criterion>\n";
    return 2;
  }
  cli_path = argv[1];
  const int n = std::atoi(argv[2]);
  const std::map<int, std::function<Outcome()>> criteria{
      {1, criterion1}, {2, criterion2}, {3, criterion3}, {4, criterion4}, {5, criterion5},
      {6, criterion6}, {7, criterion7}, {8, criterion8}, {9, criterion9}};
  if (!criteria.count(n)) {
    std::cerr << "unknown criterion " << argv[2] << "\n";
    return 2;
  }
  Outcome o;
  try {
    o = criteria.at(n)();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << n << ": " << o.detail << "\n";
  return o.pass ? 0 : 1;
}
