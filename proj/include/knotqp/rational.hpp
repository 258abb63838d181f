#pragma once

// Exact rational numbers, always reduced with a positive denominator.
// Values whose numerator and denominator fit in 64 bits are stored inline;
// anything larger is promoted to a Boost cpp_rational. Monomial exponents are
// almost always tiny, so the inline path keeps ordering and arithmetic cheap.

#include <compare>
#include <cstdint>
#include <memory>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace knotqp {

using BigInt = boost::multiprecision::cpp_int;

class Rational {
 public:
  Rational() = default;
  Rational(long long n);  // NOLINT: integers convert implicitly
  Rational(int n) : Rational(static_cast<long long>(n)) {}  // NOLINT
  Rational(long long num, long long den);
  explicit Rational(const BigInt& n);
  Rational(const BigInt& num, const BigInt& den);

  BigInt numerator() const;
  BigInt denominator() const;
  bool is_integer() const;
  // "3", "-1/2"
  std::string str() const;

  Rational operator-() const;
  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);
  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  friend bool operator==(const Rational& a, const Rational& b);
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

 private:
  using Big = boost::multiprecision::cpp_rational;

  static Rational from_big(const Big& v);
  static Rational from_wide(__int128 num, __int128 den);
  Big to_big() const;

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
  std::shared_ptr<const Big> big_;  // set only when the value does not fit inline
};

}  // namespace knotqp
