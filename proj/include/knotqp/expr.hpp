#pragma once

// Small expression language over the Laurent ring:
//
//   expr     := term (('+'|'-') term)*
//   term     := factor ('*' factor)* ('/' factor)?
//   factor   := ('-')? base ('^' exponent)?
//   base     := integer | variable | '(' expr ')'
//   exponent := integer | '(' integer ('/' integer)? ')'
//
// Integers in exponents may carry a leading '-', so the canonical text form
// ("t^-1", "t^(-1/2)") parses back. Fractional exponents are only accepted on
// variables and products/powers of variables.

#include <memory>
#include <string_view>
#include <utility>

#include "knotqp/laurent.hpp"

namespace knotqp {

struct Expr {
  enum class Kind { Integer, Variable, Negate, Sum, Difference, Product, Quotient, Power };

  Kind kind;
  std::size_t offset = 0;  // byte offset of the node in the source
  BigInt value;            // Integer
  char var = 0;            // Variable
  Rational exponent;       // Power
  std::unique_ptr<Expr> lhs;
  std::unique_ptr<Expr> rhs;
};

using ExprPtr = std::unique_ptr<Expr>;

// Throws SyntaxError or NonMonomialFractionalPower.
ExprPtr parse_expression(std::string_view src);

// Throws NotDivisible / DivByZero from '/' and negative powers.
LaurentPoly eval_expression(const Expr& ast);

inline LaurentPoly parse_poly(std::string_view src) { return eval_expression(*parse_expression(src)); }

// Splits "lhs == rhs" and evaluates both sides.
std::pair<LaurentPoly, LaurentPoly> parse_identity(std::string_view src);

}  // namespace knotqp
