#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace knotqp {

// Base of every error the library throws. Callers that only care about
// "the computation was rejected" catch this.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class MissingImage : public Error {
 public:
  explicit MissingImage(char var)
      : Error(std::string("substitution has no image for variable '") + var + "'"), var_(var) {}
  char var() const { return var_; }

 private:
  char var_;
};

class DivByZero : public Error {
 public:
  DivByZero() : Error("division by the zero polynomial") {}
};

class NotDivisible : public Error {
 public:
  explicit NotDivisible(std::string remainder)
      : Error("not divisible: remainder " + remainder), remainder_(std::move(remainder)) {}
  const std::string& remainder() const { return remainder_; }

 private:
  std::string remainder_;
};

class NotAPerfectSquare : public Error {
 public:
  explicit NotAPerfectSquare(const std::string& what) : Error("not a perfect square: " + what) {}
};

class NegativeIndex : public Error {
 public:
  explicit NegativeIndex(long long n) : Error("negative index n = " + std::to_string(n)) {}
};

class BadRange : public Error {
 public:
  using Error::Error;
};

class InvalidSpec : public Error {
 public:
  using Error::Error;
};

class SpecMismatch : public Error {
 public:
  using Error::Error;
};

class NotExpressible : public Error {
 public:
  using Error::Error;
};

class UnknownCheck : public Error {
 public:
  explicit UnknownCheck(const std::string& name) : Error("unknown check '" + name + "'") {}
};

class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t offset, const std::string& msg)
      : Error("syntax error at byte " + std::to_string(offset) + ": " + msg), offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

class NonMonomialFractionalPower : public Error {
 public:
  explicit NonMonomialFractionalPower(std::size_t offset)
      : Error("fractional power of a non-monomial base at byte " + std::to_string(offset)),
        offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

// A computation that cannot fail for valid inputs did fail.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace knotqp
