#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace eso {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed formula, prefix, pattern, or JSON text.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// Syntactically fine input that breaks a structural rule (unbound
/// variable, arity mismatch, quantifier order, ...).
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// An exhaustive search would exceed its configured budget.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

/// Arguments violate an operation's precondition.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

}  // namespace eso
