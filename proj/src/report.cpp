#include "schemegb/report.hpp"

#include <algorithm>
#include <sstream>

#include "schemegb/errors.hpp"

namespace schemegb {

namespace {

std::int64_t get_int(const Json& doc, const char* key, std::int64_t lo, std::int64_t hi) {
  if (!doc.contains(key)) throw ParseError(std::string("missing field '") + key + "'");
  const Json& v = doc.at(key);
  if (!v.is_number_integer()) throw ParseError(std::string("field '") + key + "' must be an integer");
  const auto x = v.get<std::int64_t>();
  if (x < lo || x > hi)
    throw ParseError(std::string("field '") + key + "' = " + std::to_string(x) + " is outside [" +
                     std::to_string(lo) + ", " + std::to_string(hi) + "]");
  return x;
}

void expect_keys(const Json& doc, std::initializer_list<const char*> keys) {
  for (const auto& [k, v] : doc.items())
    if (std::none_of(keys.begin(), keys.end(), [&k](const char* a) { return k == a; }))
      throw ParseError("unexpected field '" + k + "'");
}

std::string var(std::size_t k) { return "x" + std::to_string(k); }

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
  return out;
}

std::string cell_text(const RealRoot& r, int digits) {
  return r.is_exact() ? to_string(r.value()) : "~" + r.to_decimal(digits);
}

// Right-aligned columns.
std::string table_text(const std::vector<std::vector<std::string>>& cells) {
  std::vector<std::size_t> width;
  for (const auto& row : cells)
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (width.size() <= c) width.push_back(0);
      width[c] = std::max(width[c], row[c].size());
    }
  std::ostringstream os;
  for (const auto& row : cells) {
    for (std::size_t c = 0; c < row.size(); ++c)
      os << "  " << std::string(width[c] - row[c].size(), ' ') << row[c];
    os << "\n";
  }
  return os.str();
}

std::string matrix_text(const std::string& name, const std::vector<std::vector<RealRoot>>& m, int digits) {
  std::vector<std::vector<std::string>> cells;
  for (const auto& row : m) {
    cells.emplace_back();
    for (const RealRoot& x : row) cells.back().push_back(cell_text(x, digits));
  }
  std::string out = table_text(cells);
  for (std::size_t r = 0; r < m.size(); ++r)
    for (std::size_t c = 0; c < m[r].size(); ++c) {
      const RealRoot& x = m[r][c];
      if (x.is_exact()) continue;
      const RealRoot shown = x.refined(decimal_precision(digits));
      out += "  " + name + "[" + std::to_string(r) + "][" + std::to_string(c) + "]: root of " +
             x.defining_polynomial().to_string("t") + " in (" + to_string(shown.lower()) + ", " +
             to_string(shown.upper()) + ")\n";
    }
  return out;
}

}  // namespace

Scheme parse_scheme_spec(const std::string& text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("spec must be a JSON object");
  if (!doc.contains("type") || !doc.at("type").is_string()) throw ParseError("missing string field 'type'");
  const auto type = doc.at("type").get<std::string>();
  if (type == "orbit") {
    expect_keys(doc, {"type", "m", "r"});
    const auto m = get_int(doc, "m", 0, kMaxOrbitModulus);
    const auto r = get_int(doc, "r", -kMaxOrbitModulus, kMaxOrbitModulus);
    return orbit_scheme(static_cast<int>(m), static_cast<int>(r));
  }
  if (type == "relations") {
    expect_keys(doc, {"type", "labels"});
    if (!doc.contains("labels") || !doc.at("labels").is_array()) throw ParseError("'labels' must be an array of rows");
    const Json& rows = doc.at("labels");
    const std::size_t v = rows.size();
    if (v == 0 || v > static_cast<std::size_t>(kMaxPoints))
      throw ParseError("'labels' must have between 1 and " + std::to_string(kMaxPoints) + " rows");
    RelationPartition rp;
    rp.v = static_cast<int>(v);
    for (std::size_t x = 0; x < v; ++x) {
      const Json& row = rows.at(x);
      if (!row.is_array() || row.size() != v)
        throw ParseError("row " + std::to_string(x) + " of 'labels' must have " + std::to_string(v) + " entries");
      for (const Json& cell : row) {
        if (!cell.is_number_integer()) throw ParseError("labels must be integers");
        const auto l = cell.get<std::int64_t>();
        if (l < 0 || l >= static_cast<std::int64_t>(v * v)) throw NotAPartition("label " + std::to_string(l) + " out of range");
        rp.labels.push_back(static_cast<int>(l));
      }
    }
    return scheme_from_relations(rp);
  }
  if (type == "tensor") {
    expect_keys(doc, {"type", "d", "p"});
    const auto d = get_int(doc, "d", 0, kMaxClasses);
    if (!doc.contains("p") || !doc.at("p").is_array()) throw ParseError("'p' must be a flat integer array");
    std::vector<std::int64_t> flat;
    for (const Json& x : doc.at("p")) {
      if (!x.is_number_integer()) throw ParseError("'p' entries must be integers");
      flat.push_back(x.get<std::int64_t>());
    }
    const auto n = static_cast<std::size_t>(d + 1);
    if (flat.size() != n * n * n)
      throw ParseError("'p' needs " + std::to_string(n * n * n) + " entries for d=" + std::to_string(d));
    return scheme_from_tensor(static_cast<int>(d), std::move(flat));
  }
  throw ParseError("unknown spec type '" + type + "'");
}

Json to_json(const Rational& q) { return to_string(q); }

Json to_json(const UniPoly& p) {
  Json out = Json::array();
  for (const Rational& c : p.coefficients()) out.push_back(to_json(c));
  return out;
}

Json to_json(const RealRoot& r, int digits) {
  if (r.is_exact()) return to_json(r.value());
  const RealRoot shown = r.refined(decimal_precision(digits));
  return {{"minpoly", to_json(r.defining_polynomial())},
          {"interval", {to_json(shown.lower()), to_json(shown.upper())}},
          {"approx", r.to_decimal(digits)}};
}

Rational rational_from_json(const Json& j) {
  if (!j.is_string()) throw ParseError("rational must be a string");
  return parse_rational(j.get<std::string>());
}

Json scheme_json(const Scheme& s) {
  return {{"d", s.d}, {"v", s.v}, {"valencies", s.valencies}, {"symmetric", s.symmetric}, {"commutative", true}};
}

Json character_table_json(const CharacterTable& t, int digits) {
  auto grid = [digits](const std::vector<std::vector<RealRoot>>& m) {
    Json out = Json::array();
    for (const auto& row : m) {
      Json r = Json::array();
      for (const RealRoot& x : row) r.push_back(to_json(x, digits));
      out.push_back(std::move(r));
    }
    return out;
  };
  Json mult = Json::array();
  for (const Integer& m : t.multiplicities) mult.push_back(m.get_str());
  return {{"v", t.v}, {"rational", t.is_rational()}, {"P", grid(t.P)}, {"Q", grid(t.Q)}, {"multiplicities", mult}};
}

Json basis_json(const ReducedGB& gb) {
  Json gens = Json::array();
  for (const MPoly& g : gb.basis.generators()) gens.push_back(g.to_string(gb.order()));
  Json normal = Json::array();
  for (const Monomial& m : gb.normal_set) normal.push_back(m.to_string());
  return {{"order", gb.order().to_string()}, {"basis", gens}, {"normal_set", normal}};
}

Json ppoly_json(const PPolyReport& r) {
  Json verdict = {{"is_p_polynomial", r.is_p_polynomial}};
  verdict["generator"] = r.generator_variable ? Json(*r.generator_variable) : Json(nullptr);
  verdict["distance_relabeling"] = r.distance_relabeling ? Json(*r.distance_relabeling) : Json(nullptr);
  if (r.witness_basis) {
    verdict["eliminant"] = to_json(r.witness_basis->eliminant().monic());
    verdict["basis"] = basis_json(*r.witness_basis);
  } else {
    verdict["eliminant"] = nullptr;
    verdict["basis"] = nullptr;
  }
  Json diags = Json::array();
  for (const VariableDiagnostic& d : r.diagnostics)
    diags.push_back({{"variable", d.variable},
                     {"reason", to_string(d.reason)},
                     {"eliminant_degree", d.eliminant_degree},
                     {"detail", d.detail}});
  return {{"ppoly", verdict}, {"diagnostics", diags}};
}

Json expressions_json(const std::map<std::size_t, MPoly>& expressions, const MonomialOrder& order) {
  Json out = Json::object();
  for (const auto& [j, g] : expressions) out[var(j)] = g.to_string(order);
  return out;
}

Json generator_json(const GenericElement& g) {
  Json expr = Json::object();
  for (std::size_t j = 0; j < g.expressions.size(); ++j) expr[var(j)] = g.expressions[j].to_string("y");
  Json trace = Json::array();
  for (const CoordinateChange& c : g.trace) trace.push_back({{"variable", c.added_variable}, {"coefficient", c.coefficient}});
  return {{"coefficients", g.coefficients},
          {"eliminant", to_json(g.eliminant)},
          {"eliminant_text", g.eliminant.to_string("y")},
          {"expressions", expr},
          {"trace", trace}};
}

std::string scheme_text(const Scheme& s) {
  std::vector<std::string> k;
  for (auto x : s.valencies) k.push_back(std::to_string(x));
  return "d=" + std::to_string(s.d) + " v=" + std::to_string(s.v) + " valencies " + join(k, ",") +
         "\nsymmetric: yes\ncommutative: yes\n";
}

std::string character_table_text(const CharacterTable& t, int digits) {
  std::vector<std::string> m;
  for (const Integer& x : t.multiplicities) m.push_back(x.get_str());
  return "P (rows: eigenspaces, columns: relations 0.." + std::to_string(t.P.size() - 1) + ")\n" +
         matrix_text("P", t.P, digits) + "Q (rows: relations, columns: eigenspaces)\n" + matrix_text("Q", t.Q, digits) +
         "multiplicities " + join(m, ",") + "\n";
}

std::string basis_text(const ReducedGB& gb) {
  std::string out = "order " + gb.order().to_string() + "\n";
  for (const MPoly& g : gb.basis.generators()) out += "  " + g.to_string(gb.order()) + "\n";
  std::vector<std::string> normal;
  for (const Monomial& m : gb.normal_set) normal.push_back(m.to_string());
  return out + "normal set " + join(normal, ", ") + "\n";
}

std::string ppoly_text(const PPolyReport& r) {
  std::string out;
  if (r.is_p_polynomial) {
    out += "P-polynomial";
    if (r.generator_variable) out += ", generated by " + var(*r.generator_variable);
    out += "\n";
    if (r.distance_relabeling) {
      std::vector<std::string> parts;
      for (std::size_t i = 0; i < r.distance_relabeling->size(); ++i)
        parts.push_back(var(i) + "->" + std::to_string((*r.distance_relabeling)[i]));
      out += "distances " + join(parts, ", ") + "\n";
    }
    if (r.witness_basis)
      out += "eliminant " + r.witness_basis->eliminant().monic().to_string(var(*r.generator_variable)) + "\n" +
             basis_text(*r.witness_basis);
  } else {
    out += "not P-polynomial\n";
  }
  for (const VariableDiagnostic& d : r.diagnostics)
    out += "  " + var(d.variable) + ": " + to_string(d.reason) + (d.detail.empty() ? "" : " (" + d.detail + ")") + "\n";
  return out;
}

std::string expressions_text(const std::map<std::size_t, MPoly>& expressions, const MonomialOrder& order) {
  std::string out;
  for (const auto& [j, g] : expressions) out += var(j) + " = " + g.to_string(order) + "\n";
  return out;
}

std::string generator_text(const GenericElement& g) {
  std::vector<std::string> terms;
  for (std::size_t i = 0; i < g.coefficients.size(); ++i)
    if (g.coefficients[i] != 0)
      terms.push_back((g.coefficients[i] == 1 ? "" : std::to_string(g.coefficients[i]) + "*") + "D" + std::to_string(i));
  std::string out = "A = " + join(terms, " + ") + "\n";
  out += "eliminant " + g.eliminant.to_string("y") + "\n";
  for (std::size_t j = 0; j < g.expressions.size(); ++j) out += var(j) + " = " + g.expressions[j].to_string("y") + "\n";
  std::vector<std::string> steps;
  for (const CoordinateChange& c : g.trace)
    steps.push_back("y += " + std::to_string(c.coefficient) + "*" + var(c.added_variable));
  out += "changes " + (steps.empty() ? std::string("none") : join(steps, "; ")) + "\n";
  return out;
}

}  // namespace schemegb
