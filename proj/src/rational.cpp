#include "knotqp/rational.hpp"

#include <limits>
#include <stdexcept>

namespace knotqp {

namespace {

using u128 = unsigned __int128;
constexpr __int128 kInlineMax = std::numeric_limits<std::int64_t>::max();

u128 gcd(u128 a, u128 b) {
  while (b != 0) {
    u128 r = a % b;
    a = b;
    b = r;
  }
  return a;
}

u128 magnitude(__int128 v) { return v < 0 ? u128(0) - static_cast<u128>(v) : static_cast<u128>(v); }

BigInt wide_to_big(__int128 v) {
  const u128 mag = magnitude(v);
  BigInt out = static_cast<std::uint64_t>(mag >> 64);
  out <<= 64;
  out += static_cast<std::uint64_t>(mag);
  return v < 0 ? BigInt(-out) : out;
}

}  // namespace

Rational::Rational(long long n) : num_(n) {
  if (n == std::numeric_limits<long long>::min()) *this = from_wide(n, 1);
}

Rational::Rational(long long num, long long den) { *this = from_wide(num, den); }

Rational::Rational(const BigInt& n) { *this = from_big(Big(n)); }

Rational::Rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  *this = from_big(Big(num, den));
}

Rational Rational::from_wide(__int128 num, __int128 den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const u128 g = gcd(magnitude(num), static_cast<u128>(den));
  if (g > 1) {
    num /= static_cast<__int128>(g);
    den /= static_cast<__int128>(g);
  }
  Rational r;
  if (num >= -kInlineMax && num <= kInlineMax && den <= kInlineMax) {
    r.num_ = static_cast<std::int64_t>(num);
    r.den_ = static_cast<std::int64_t>(den);
  } else {
    r.big_ = std::make_shared<const Big>(wide_to_big(num), wide_to_big(den));
  }
  return r;
}

Rational Rational::from_big(const Big& v) {
  const BigInt n = boost::multiprecision::numerator(v);
  const BigInt d = boost::multiprecision::denominator(v);
  Rational r;
  if (n >= -BigInt(kInlineMax) && n <= BigInt(kInlineMax) && d <= BigInt(kInlineMax)) {
    r.num_ = static_cast<std::int64_t>(n);
    r.den_ = static_cast<std::int64_t>(d);
  } else {
    r.big_ = std::make_shared<const Big>(v);
  }
  return r;
}

Rational::Big Rational::to_big() const { return big_ ? *big_ : Big(BigInt(num_), BigInt(den_)); }

BigInt Rational::numerator() const { return big_ ? BigInt(boost::multiprecision::numerator(*big_)) : BigInt(num_); }

BigInt Rational::denominator() const {
  return big_ ? BigInt(boost::multiprecision::denominator(*big_)) : BigInt(den_);
}

bool Rational::is_integer() const { return big_ ? boost::multiprecision::denominator(*big_) == 1 : den_ == 1; }

std::string Rational::str() const {
  if (is_integer()) return numerator().str();
  return numerator().str() + "/" + denominator().str();
}

Rational Rational::operator-() const {
  if (big_) return from_big(-*big_);
  Rational r = *this;
  r.num_ = -num_;
  return r;
}

Rational operator+(const Rational& a, const Rational& b) {
  if (a.big_ || b.big_) return Rational::from_big(a.to_big() + b.to_big());
  if (a.den_ == b.den_ && a.den_ == 1) return Rational::from_wide(__int128(a.num_) + b.num_, 1);
  return Rational::from_wide(__int128(a.num_) * b.den_ + __int128(b.num_) * a.den_, __int128(a.den_) * b.den_);
}

Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

Rational operator*(const Rational& a, const Rational& b) {
  if (a.big_ || b.big_) return Rational::from_big(a.to_big() * b.to_big());
  return Rational::from_wide(__int128(a.num_) * b.num_, __int128(a.den_) * b.den_);
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b == Rational(0)) throw std::domain_error("rational division by zero");
  if (a.big_ || b.big_) return Rational::from_big(a.to_big() / b.to_big());
  return Rational::from_wide(__int128(a.num_) * b.den_, __int128(a.den_) * b.num_);
}

bool operator==(const Rational& a, const Rational& b) {
  if (a.big_ || b.big_) return a.big_ && b.big_ && *a.big_ == *b.big_;
  return a.num_ == b.num_ && a.den_ == b.den_;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  if (a.big_ || b.big_) {
    const auto x = a.to_big();
    const auto y = b.to_big();
    if (x == y) return std::strong_ordering::equal;
    return x < y ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  if (a.den_ == b.den_) return a.num_ <=> b.num_;
  const __int128 lhs = __int128(a.num_) * b.den_;
  const __int128 rhs = __int128(b.num_) * a.den_;
  if (lhs == rhs) return std::strong_ordering::equal;
  return lhs < rhs ? std::strong_ordering::less : std::strong_ordering::greater;
}

}  // namespace knotqp
