#pragma once

// Exact sparse multivariate Laurent polynomials with rational exponents and
// arbitrary-precision integer coefficients.
//
// Variables are single lowercase letters. Monomials are ordered graded
// lexicographically: total (rational) degree first, ties broken by walking the
// variables alphabetically and preferring the larger exponent. The order is a
// total group order on monomials, so leading and trailing terms of a product
// are the products of the leading and trailing terms of the factors. Division
// and square roots rely on this.

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "knotqp/rational.hpp"

namespace knotqp {

class Monomial {
 public:
  using Exponent = std::pair<char, Rational>;

  Monomial() = default;

  // Merges repeated variables, drops zero exponents.
  static Monomial from_exponents(std::vector<Exponent> exps);
  static Monomial var(char v, const Rational& e = 1);

  const std::vector<Exponent>& exponents() const { return exps_; }
  Rational exponent(char v) const;
  const Rational& degree() const { return degree_; }
  bool is_one() const { return exps_.empty(); }
  std::set<char> variables() const;

  Monomial operator*(const Monomial& other) const;
  Monomial operator/(const Monomial& other) const;
  Monomial pow(const Rational& r) const;
  Monomial inverse() const { return pow(-1); }

  bool operator==(const Monomial& other) const { return exps_ == other.exps_; }

 private:
  explicit Monomial(std::vector<Exponent> canonical);

  std::vector<Exponent> exps_;  // sorted by variable, no zero exponents
  Rational degree_{0};
};

// Every exponent of m multiplied by r.
inline Monomial mono_pow(const Monomial& m, const Rational& r) { return m.pow(r); }

// Negative, zero or positive as a is below, equal to or above b.
int compare_graded_lex(const Monomial& a, const Monomial& b);

struct GradedLexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const { return compare_graded_lex(a, b) > 0; }
};

using SubstitutionMap = std::map<char, Monomial>;

class LaurentPoly {
 public:
  using TermMap = std::map<Monomial, BigInt, GradedLexGreater>;
  using Term = TermMap::value_type;

  LaurentPoly() = default;
  LaurentPoly(long long c);  // NOLINT: constants convert implicitly
  LaurentPoly(const BigInt& c);  // NOLINT
  LaurentPoly(const Monomial& m, const BigInt& c = 1);  // NOLINT

  static LaurentPoly var(char v, const Rational& e = 1) { return LaurentPoly(Monomial::var(v, e)); }

  // Terms in descending graded-lex order.
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  // A single term with coefficient +1.
  bool is_monomial() const;
  const Term& leading() const { return *terms_.begin(); }
  const Term& trailing() const { return *terms_.rbegin(); }
  std::set<char> variables() const;

  // Adds c*m*p in place.
  void add_product(const LaurentPoly& p, const Monomial& m, const BigInt& c);
  void add_term(const Monomial& m, const BigInt& c);

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);

  bool operator==(const LaurentPoly& o) const { return terms_ == o.terms_; }

 private:
  TermMap terms_;
};

// Non-negative integer power.
LaurentPoly pow(const LaurentPoly& p, unsigned k);

// Ring homomorphism sending each variable to a monomial. Every variable of p
// needs an image; throws MissingImage otherwise.
LaurentPoly substitute(const LaurentPoly& p, const SubstitutionMap& map);

// Exact quotient num/den. Throws DivByZero or NotDivisible.
LaurentPoly exact_div(const LaurentPoly& num, const LaurentPoly& den);

// Square root with positive leading coefficient. Throws NotAPerfectSquare.
// exact_sqrt(0) is 0.
LaurentPoly exact_sqrt(const LaurentPoly& p);

// Canonical text form, e.g. "-a^4 + a^2*t + a^2*t^-1", "t^(1/2) - t^(-1/2)".
std::string to_string(const Rational& r);
std::string to_string(const Monomial& m);
std::string to_string(const LaurentPoly& p);

}  // namespace knotqp
