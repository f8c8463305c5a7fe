#pragma once

#include <stdexcept>
#include <string>

namespace conicrank {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed expression text. `position` is a 0-based byte offset.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// The input does not describe a curve of the supported shape.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// Arithmetic misuse: division by zero, inverting zero, mixing fields.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A caller broke an operation's precondition.
class ContractViolation : public Error {
 public:
  using Error::Error;
};

/// An identity that must hold for every valid curve failed. Always a bug
/// upstream (or a false theoretical expectation); never an input problem.
class ConsistencyError : public Error {
 public:
  ConsistencyError(std::string kind, const std::string& detail)
      : Error(kind + ": " + detail), kind_(std::move(kind)) {}
  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

}  // namespace conicrank
