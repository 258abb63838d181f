#include "knotqp/expr.hpp"

#include <cctype>
#include <string>

#include "knotqp/errors.hpp"

namespace knotqp {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view src) : src_(src) {}

  ExprPtr parse() {
    skip_ws();
    if (pos_ == src_.size()) throw SyntaxError(pos_, "empty expression");
    ExprPtr e = expr();
    skip_ws();
    if (pos_ != src_.size()) throw SyntaxError(pos_, std::string("unexpected '") + src_[pos_] + "'");
    return e;
  }

 private:
  void skip_ws() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }

  char peek() {
    skip_ws();
    return pos_ < src_.size() ? src_[pos_] : '\0';
  }

  void expect(char c) {
    if (peek() != c) {
      throw SyntaxError(pos_, pos_ < src_.size() ? std::string("expected '") + c + "', got '" + src_[pos_] + "'"
                                                 : std::string("expected '") + c + "' at end of input");
    }
    ++pos_;
  }

  static ExprPtr node(Expr::Kind kind, std::size_t offset, ExprPtr lhs = nullptr, ExprPtr rhs = nullptr) {
    auto e = std::make_unique<Expr>();
    e->kind = kind;
    e->offset = offset;
    e->lhs = std::move(lhs);
    e->rhs = std::move(rhs);
    return e;
  }

  ExprPtr expr() {
    ExprPtr lhs = term();
    for (;;) {
      char c = peek();
      if (c != '+' && c != '-') return lhs;
      std::size_t at = pos_++;
      lhs = node(c == '+' ? Expr::Kind::Sum : Expr::Kind::Difference, at, std::move(lhs), term());
    }
  }

  ExprPtr term() {
    ExprPtr lhs = factor();
    while (peek() == '*') {
      std::size_t at = pos_++;
      lhs = node(Expr::Kind::Product, at, std::move(lhs), factor());
    }
    if (peek() == '/') {
      std::size_t at = pos_++;
      lhs = node(Expr::Kind::Quotient, at, std::move(lhs), factor());
    }
    return lhs;
  }

  ExprPtr factor() {
    bool negate = false;
    std::size_t start = (peek(), pos_);
    if (peek() == '-') {
      negate = true;
      ++pos_;
    }
    ExprPtr b = base();
    if (peek() == '^') {
      std::size_t at = pos_++;
      Rational e = exponent();
      if (!e.is_integer() && !is_monomial(*b)) throw NonMonomialFractionalPower(at);
      ExprPtr p = node(Expr::Kind::Power, at, std::move(b));
      p->exponent = e;
      b = std::move(p);
    }
    if (negate) b = node(Expr::Kind::Negate, start, std::move(b));
    return b;
  }

  ExprPtr base() {
    char c = peek();
    std::size_t at = pos_;
    if (std::isdigit(static_cast<unsigned char>(c))) {
      ExprPtr e = node(Expr::Kind::Integer, at);
      e->value = BigInt(digits());
      return e;
    }
    if (c >= 'a' && c <= 'z') {
      ++pos_;
      if (pos_ < src_.size() && std::isalpha(static_cast<unsigned char>(src_[pos_]))) {
        throw SyntaxError(pos_, "variables are single lowercase letters");
      }
      ExprPtr e = node(Expr::Kind::Variable, at);
      e->var = c;
      return e;
    }
    if (c == '(') {
      ++pos_;
      ExprPtr e = expr();
      expect(')');
      return e;
    }
    if (c == '\0') throw SyntaxError(pos_, "unexpected end of input");
    throw SyntaxError(pos_, std::string("unexpected '") + c + "'");
  }

  std::string digits() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    if (start == pos_) throw SyntaxError(pos_, "expected an integer");
    return std::string(src_.substr(start, pos_ - start));
  }

  BigInt signed_integer() {
    bool neg = false;
    if (peek() == '-') {
      neg = true;
      ++pos_;
    }
    BigInt v(digits());
    return neg ? BigInt(-v) : v;
  }

  Rational exponent() {
    if (peek() != '(') return Rational(signed_integer());
    ++pos_;
    BigInt num = signed_integer();
    BigInt den = 1;
    if (peek() == '/') {
      ++pos_;
      std::size_t at = (peek(), pos_);
      den = signed_integer();
      if (den == 0) throw SyntaxError(at, "zero denominator in exponent");
    }
    expect(')');
    return Rational(num, den);
  }

  static bool is_monomial(const Expr& e) {
    switch (e.kind) {
      case Expr::Kind::Variable:
        return true;
      case Expr::Kind::Integer:
        return e.value == 1;
      case Expr::Kind::Power:
        return is_monomial(*e.lhs);
      case Expr::Kind::Product:
        return is_monomial(*e.lhs) && is_monomial(*e.rhs);
      default:
        return false;
    }
  }

  std::string_view src_;
  std::size_t pos_ = 0;
};

LaurentPoly power(const LaurentPoly& base, const Rational& e) {
  if (e.is_integer()) {
    const BigInt k = e.numerator();
    if (k >= 0) return pow(base, static_cast<unsigned>(k));
    if (base.size() == 1) {
      const auto& [m, c] = base.leading();
      if (c == 1 || c == -1) {
        return LaurentPoly(m.pow(e), (c == -1 && (k % 2 != 0)) ? BigInt(-1) : BigInt(1));
      }
    }
    return exact_div(1, pow(base, static_cast<unsigned>(-k)));
  }
  // The parser admits fractional exponents only on monomial expressions.
  if (!base.is_monomial()) throw Error("fractional power of " + to_string(base));
  return LaurentPoly(base.leading().first.pow(e));
}

}  // namespace

ExprPtr parse_expression(std::string_view src) { return Parser(src).parse(); }

LaurentPoly eval_expression(const Expr& ast) {
  switch (ast.kind) {
    case Expr::Kind::Integer:
      return LaurentPoly(ast.value);
    case Expr::Kind::Variable:
      return LaurentPoly::var(ast.var);
    case Expr::Kind::Negate:
      return -eval_expression(*ast.lhs);
    case Expr::Kind::Sum:
      return eval_expression(*ast.lhs) + eval_expression(*ast.rhs);
    case Expr::Kind::Difference:
      return eval_expression(*ast.lhs) - eval_expression(*ast.rhs);
    case Expr::Kind::Product:
      return eval_expression(*ast.lhs) * eval_expression(*ast.rhs);
    case Expr::Kind::Quotient:
      return exact_div(eval_expression(*ast.lhs), eval_expression(*ast.rhs));
    case Expr::Kind::Power:
      return power(eval_expression(*ast.lhs), ast.exponent);
  }
  throw InternalError("unknown expression node");
}

std::pair<LaurentPoly, LaurentPoly> parse_identity(std::string_view src) {
  auto eq = src.find("==");
  if (eq == std::string_view::npos) throw SyntaxError(0, "expected '<lhs> == <rhs>'");
  if (src.find("==", eq + 2) != std::string_view::npos) {
    throw SyntaxError(src.find("==", eq + 2), "more than one '=='");
  }
  ExprPtr lhs;
  ExprPtr rhs;
  lhs = parse_expression(src.substr(0, eq));
  try {
    rhs = parse_expression(src.substr(eq + 2));
  } catch (const SyntaxError& e) {
    // Report offsets relative to the whole identity.
    throw SyntaxError(eq + 2 + e.offset(), std::string(e.what()).substr(std::string(e.what()).find(": ") + 2));
  }
  return {eval_expression(*lhs), eval_expression(*rhs)};
}

}  // namespace knotqp
