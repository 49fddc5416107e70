#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "schemegb/analysis.hpp"
#include "schemegb/errors.hpp"
#include "schemegb/report.hpp"

namespace py = pybind11;
using namespace schemegb;

namespace {

py::object fraction(const Rational& q) {
  static py::object cls = py::module_::import("fractions").attr("Fraction");
  return cls(to_string(q));
}

py::list fractions(const UniPoly& p) {
  py::list out;
  for (const Rational& c : p.coefficients()) out.append(fraction(c));
  return out;
}

// Exact entries become Fraction, the rest stay RealNumber.
py::object entry(const RealRoot& r) { return r.is_exact() ? fraction(r.value()) : py::cast(r); }

py::list grid(const std::vector<std::vector<RealRoot>>& m) {
  py::list out;
  for (const auto& row : m) {
    py::list r;
    for (const RealRoot& x : row) r.append(entry(x));
    out.append(r);
  }
  return out;
}

Scheme from_labels(const std::vector<std::vector<int>>& labels) {
  RelationPartition rp;
  rp.v = static_cast<int>(labels.size());
  for (const auto& row : labels) {
    if (row.size() != labels.size()) throw ParseError("labels must form a square grid");
    rp.labels.insert(rp.labels.end(), row.begin(), row.end());
  }
  return scheme_from_relations(rp);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact character tables and P-polynomiality of association schemes";

  auto base = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<ParseError>(m, "ParseError", base.ptr());
  py::register_exception<SchemeError>(m, "SchemeError", base.ptr());
  py::register_exception<NotExpressible>(m, "NotExpressible", base.ptr());
  py::register_exception<AttemptsExhausted>(m, "AttemptsExhausted", base.ptr());

  py::class_<RealRoot>(m, "RealNumber")
      .def_property_readonly("minimal_polynomial", [](const RealRoot& r) { return fractions(r.minimal_polynomial()); })
      .def_property_readonly("interval", [](const RealRoot& r) { return py::make_tuple(fraction(r.lower()), fraction(r.upper())); })
      .def("refined", [](const RealRoot& r, int digits) { return r.refined(decimal_precision(digits)); }, py::arg("digits"))
      .def("to_decimal", &RealRoot::to_decimal, py::arg("digits") = 10)
      .def("__float__", [](const RealRoot& r) { return std::stod(r.refined(decimal_precision(20)).to_decimal(17)); })
      .def("__eq__", [](const RealRoot& a, const RealRoot& b) { return a == b; })
      .def("__repr__", [](const RealRoot& r) {
        return "RealNumber(root of " + r.minimal_polynomial().to_string("t") + " near " + r.to_decimal(10) + ")";
      });

  py::class_<Scheme>(m, "Scheme")
      .def_static("orbit", &orbit_scheme, py::arg("m"), py::arg("r"))
      .def_static("from_relations", &from_labels, py::arg("labels"))
      .def_static("from_spec", &parse_scheme_spec, py::arg("text"))
      .def_readonly("d", &Scheme::d)
      .def_readonly("v", &Scheme::v)
      .def_readonly("valencies", &Scheme::valencies)
      .def("intersection_number", [](const Scheme& s, int i, int j, int k) { return s.tensor(i, j, k); })
      .def("relabel", &relabel, py::arg("perm"))
      .def("__repr__", [](const Scheme& s) {
        return "Scheme(d=" + std::to_string(s.d) + ", v=" + std::to_string(s.v) + ")";
      });

  m.def("multiplicative_orbits", &multiplicative_orbits, py::arg("m"), py::arg("r"));

  m.def(
      "character_table",
      [](const Scheme& s, int digits) {
        const CharacterTable t = character_table(s, decimal_precision(std::max(30, digits + 2)));
        py::list mult;
        for (const Integer& k : t.multiplicities) mult.append(py::int_(py::str(k.get_str())));
        py::dict out;
        out["rational"] = t.is_rational();
        out["P"] = grid(t.P);
        out["Q"] = grid(t.Q);
        out["multiplicities"] = mult;
        return out;
      },
      py::arg("scheme"), py::arg("digits") = 10);

  m.def(
      "check_p_polynomial",
      [](const Scheme& s) {
        const PPolyReport r = check_p_polynomial(s);
        py::dict out;
        out["is_p_polynomial"] = r.is_p_polynomial;
        out["generator"] = r.generator_variable ? py::cast(*r.generator_variable) : py::none();
        out["distance_relabeling"] = r.distance_relabeling ? py::cast(*r.distance_relabeling) : py::none();
        out["eliminant"] = r.witness_basis ? py::object(fractions(r.witness_basis->eliminant())) : py::none();
        py::list diags;
        for (const auto& d : r.diagnostics)
          diags.append(py::make_tuple(d.variable, to_string(d.reason), d.detail));
        out["diagnostics"] = diags;
        return out;
      },
      py::arg("scheme"));

  m.def(
      "express",
      [](const Scheme& s, std::vector<std::size_t> vars) {
        const auto order = subset_order(static_cast<std::size_t>(s.d + 1), vars);
        std::map<std::size_t, std::string> out;
        for (const auto& [j, g] : express_in_terms_of(s, vars)) out[j] = g.to_string(order);
        return out;
      },
      py::arg("scheme"), py::arg("vars"));

  m.def("minimal_generating_sets", &minimal_generating_sets, py::arg("scheme"));

  m.def(
      "find_generic_element",
      [](const Scheme& s, std::uint64_t seed, std::int64_t max_coeff, int max_attempts) {
        const GenericElement g = find_generic_element(s, seed, max_coeff, max_attempts);
        py::dict out;
        out["coefficients"] = g.coefficients;
        out["eliminant"] = fractions(g.eliminant);
        py::list exprs;
        for (const UniPoly& e : g.expressions) exprs.append(fractions(e));
        out["expressions"] = exprs;
        return out;
      },
      py::arg("scheme"), py::arg("seed") = 0, py::arg("max_coeff") = 10, py::arg("max_attempts") = 32);
}
