#pragma once

// JSON form of Laurent polynomials:
//   {"terms":[{"coeff":"-1","monomial":{"a":"4/1"}}, ...]}
// Terms appear in canonical (descending graded-lex) order and exponents are
// always reduced fraction strings, so dump(import(dump(p))) == dump(p).

#include <string>

#include "json.hpp"
#include "knotqp/laurent.hpp"

namespace knotqp {

using Json = nlohmann::ordered_json;

Json to_json(const LaurentPoly& p);
LaurentPoly poly_from_json(const Json& j);

// Parses "num/den" (or a bare integer). Throws knotqp::Error on malformed input.
Rational parse_rational(const std::string& s);
std::string fraction_string(const Rational& r);

}  // namespace knotqp
