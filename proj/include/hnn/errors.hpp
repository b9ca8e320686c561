#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hnn {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// A partial map was applied outside its domain.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// The premise of a procedure does not hold for the given group.
class HypothesisError : public Error {
 public:
  using Error::Error;
};

/// A bounded search ran out of budget.
class ExhaustedError : public Error {
 public:
  using Error::Error;
};

class NotEllipticError : public Error {
 public:
  using Error::Error;
};

class NotHyperbolicError : public Error {
 public:
  using Error::Error;
};

/// A self-check failed; indicates a bug rather than bad input.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace hnn
