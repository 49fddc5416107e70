#include "schemegb/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "schemegb/errors.hpp"
#include "schemegb/report.hpp"

namespace schemegb {

namespace {

struct Options {
  std::string spec;
  std::string format = "text";
  int precision = 10;
  std::uint64_t seed = 0;
  std::int64_t max_coeff = 10;
  int max_attempts = 32;
  std::string order = "lex";
  std::optional<std::size_t> smallest;
  std::vector<std::size_t> priority;
  std::vector<std::int64_t> linear_form;
  std::vector<std::size_t> vars;
};

std::string read_spec(const std::string& path, std::istream& in) {
  std::ostringstream buf;
  if (path == "-") {
    buf << in.rdbuf();
    return buf.str();
  }
  std::ifstream file(path);
  if (!file) throw ParseError("cannot read spec file '" + path + "'");
  buf << file.rdbuf();
  return buf.str();
}

// Root isolation is always at least 10^-30 and finer than the display.
Rational isolation_precision(int digits) { return decimal_precision(std::max(30, digits + 2)); }

void emit(std::ostream& out, const Options& o, const std::string& command, Json body, const std::string& text) {
  if (o.format == "json") {
    Json doc = {{"command", command}};
    for (auto& [k, v] : body.items()) doc[k] = std::move(v);
    out << doc.dump(2) << "\n";
  } else {
    out << text;
  }
}

MonomialOrder gb_order(const Options& o, std::size_t nvars) {
  const auto kind = o.order == "degree" ? MonomialOrder::Kind::kDegLex : MonomialOrder::Kind::kLex;
  if (!o.priority.empty()) {
    std::vector<std::size_t> sorted = o.priority;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t k = 0; k < sorted.size(); ++k)
      if (sorted.size() != nvars || sorted[k] != k)
        throw ParseError("--priority must be a permutation of 0.." + std::to_string(nvars - 1));
    return MonomialOrder(kind, o.priority);
  }
  if (kind == MonomialOrder::Kind::kDegLex) return MonomialOrder::deglex(nvars);
  return algorithm_order(nvars, o.smallest.value_or(nvars > 1 ? 1 : 0));
}

int run(const std::string& command, const Options& o, std::istream& in, std::ostream& out) {
  const Scheme s = parse_scheme_spec(read_spec(o.spec, in));
  const auto nvars = static_cast<std::size_t>(s.d + 1);
  if (command == "validate") {
    emit(out, o, command, scheme_json(s), scheme_text(s));
  } else if (command == "chartab") {
    const CharacterTable t = character_table(s, isolation_precision(o.precision));
    Json body = scheme_json(s);
    const Json table = character_table_json(t, o.precision);
    for (auto& [k, v] : table.items()) body[k] = v;
    emit(out, o, command, body, scheme_text(s) + character_table_text(t, o.precision));
  } else if (command == "ppoly") {
    const PPolyReport r = check_p_polynomial(s);
    emit(out, o, command, ppoly_json(r), ppoly_text(r));
  } else if (command == "express") {
    for (std::size_t k : o.vars)
      if (k == 0 || k >= nvars) throw ParseError("--vars entries must lie in 1.." + std::to_string(s.d));
    std::vector<std::size_t> vars = o.vars;
    std::sort(vars.begin(), vars.end());
    vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
    const auto order = subset_order(nvars, vars);
    const auto e = express_in_terms_of(s, vars);
    emit(out, o, command, {{"vars", vars}, {"expressions", expressions_json(e, order)}},
         expressions_text(e, order));
  } else if (command == "generator") {
    if (o.max_coeff < 1 || o.max_attempts < 0) throw ParseError("--max-coeff must be positive, --max-attempts non-negative");
    const GenericElement g = find_generic_element(s, o.seed, o.max_coeff, o.max_attempts);
    emit(out, o, command, {{"seed", o.seed}, {"generator", generator_json(g)}}, generator_text(g));
  } else if (command == "gb") {
    if (o.smallest && (*o.smallest >= nvars)) throw ParseError("--smallest must lie in 0.." + std::to_string(s.d));
    const MonomialOrder order = gb_order(o, nvars);
    const StructureBasis sb = structure_basis(s);
    MultiplicationTable table = multiplication_table(sb);
    if (!o.linear_form.empty()) {
      if (o.linear_form.size() != nvars) throw ParseError("--linear-form needs " + std::to_string(nvars) + " coefficients");
      std::vector<Rational> form;
      for (auto c : o.linear_form) form.emplace_back(static_cast<long>(c));
      table = with_linear_form(table, order.smallest_variable(), form);
    }
    const ReducedGB gb = fglm_convert(table, order);
    emit(out, o, command, basis_json(gb), basis_text(gb));
  }
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact character tables, P-polynomiality and generators of association schemes", "schemegb"};
  app.require_subcommand(1);
  Options o;
  auto add_common = [&o](CLI::App* sub) {
    sub->add_option("spec", o.spec, "Scheme spec file (JSON), or - for stdin")->required();
    sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  };
  auto* validate = app.add_subcommand("validate", "Check the scheme axioms");
  add_common(validate);
  auto* chartab = app.add_subcommand("chartab", "Character table P and Q = v P^-1");
  add_common(chartab);
  chartab->add_option("--precision", o.precision, "Decimal digits for irrational entries")->check(CLI::Range(1, 1000));
  auto* ppoly = app.add_subcommand("ppoly", "Decide P-polynomiality");
  add_common(ppoly);
  auto* express = app.add_subcommand("express", "Express all relations in terms of a subset");
  add_common(express);
  express->add_option("--vars", o.vars, "Relation indices, comma separated")->delimiter(',')->required();
  auto* generator = app.add_subcommand("generator", "Find A = sum c_i D_i generating the algebra");
  add_common(generator);
  generator->add_option("--seed", o.seed, "Random seed");
  generator->add_option("--max-coeff", o.max_coeff, "Largest random coefficient");
  generator->add_option("--max-attempts", o.max_attempts, "Coordinate changes before giving up");
  auto* gb = app.add_subcommand("gb", "Reduced Groebner basis of the structure ideal");
  add_common(gb);
  gb->add_option("--order", o.order, "Monomial order")->check(CLI::IsMember({"lex", "degree"}));
  gb->add_option("--smallest", o.smallest, "Smallest variable for lex");
  gb->add_option("--priority", o.priority, "Variables from greatest to least, comma separated")->delimiter(',');
  gb->add_option("--linear-form", o.linear_form,
                 "Replace the smallest variable by this combination of x0..xd, comma separated")
      ->delimiter(',');

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  try {
    return run(command, o, in, out);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const SchemeError& e) {
    err << "error: not a commutative symmetric association scheme: " << e.what() << "\n";
    return kExitScheme;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitAnalysis;
  }
}

}  // namespace schemegb
