#pragma once

#include <map>
#include <string>

#include "json.hpp"
#include "schemegb/analysis.hpp"

namespace schemegb {

using Json = nlohmann::ordered_json;

// Limits on spec files; larger inputs are rejected with ParseError.
inline constexpr int kMaxOrbitModulus = 2000;
inline constexpr int kMaxPoints = 1000;
inline constexpr int kMaxClasses = 200;

// One JSON document: {"type": "orbit", "m", "r"},
// {"type": "relations", "labels": v x v grid} or
// {"type": "tensor", "d", "p": flattened (d+1)^3 list, index (i*(d+1)+j)*(d+1)+k}.
// Throws ParseError for malformed documents, SchemeError subclasses for
// inputs that are not schemes.
Scheme parse_scheme_spec(const std::string& text);

// "p/q" strings for rationals; irrationals as
// {"minpoly": ascending coefficients, "interval": [lo, hi], "approx": decimal}.
Json to_json(const Rational& q);
Json to_json(const RealRoot& r, int digits);
Json to_json(const UniPoly& p);  // ascending coefficients
// Inverse of to_json for rationals; throws ParseError.
Rational rational_from_json(const Json& j);

Json scheme_json(const Scheme& s);
Json character_table_json(const CharacterTable& t, int digits);
Json ppoly_json(const PPolyReport& r);
Json basis_json(const ReducedGB& gb);
Json expressions_json(const std::map<std::size_t, MPoly>& expressions, const MonomialOrder& order);
Json generator_json(const GenericElement& g);

std::string scheme_text(const Scheme& s);
std::string character_table_text(const CharacterTable& t, int digits);
std::string ppoly_text(const PPolyReport& r);
std::string basis_text(const ReducedGB& gb);
std::string expressions_text(const std::map<std::size_t, MPoly>& expressions, const MonomialOrder& order);
std::string generator_text(const GenericElement& g);

}  // namespace schemegb
