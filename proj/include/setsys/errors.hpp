#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace setsys {

/// Base for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A parameter lies outside the domain of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Malformed input text; carries the 1-based line number.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// An element lies outside the ground set [n].
class RangeError : public Error {
 public:
  using Error::Error;
};

/// A structural invariant of a value would be broken (duplicates, mixed ambients).
class ValidityError : public Error {
 public:
  using Error::Error;
};

/// One or more preconditions of a procedure do not hold. Each violated
/// precondition is listed separately.
class PreconditionError : public Error {
 public:
  explicit PreconditionError(std::vector<std::string> violations)
      : Error(join(violations)), violations_(std::move(violations)) {}
  const std::vector<std::string>& violations() const noexcept { return violations_; }

 private:
  static std::string join(const std::vector<std::string>& v) {
    std::string out = "precondition violated: ";
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (i) out += "; ";
      out += v[i];
    }
    return out;
  }
  std::vector<std::string> violations_;
};

/// A required parameter is missing or does not fit the requested theorem.
class ParameterMismatch : public Error {
 public:
  using Error::Error;
};

/// An enumeration or search exceeded its configured work limit.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace setsys
