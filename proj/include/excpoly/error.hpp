#pragma once

#include <stdexcept>
#include <string>

namespace excpoly {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A precondition on the arguments was violated (bad characteristic,
/// degree out of range, parameter outside a family's admissible set, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Operands live over different fields.
class MismatchError : public Error {
 public:
  using Error::Error;
};

/// Division by zero, inversion of zero, or a zero polynomial where a nonzero
/// one is required.
class ZeroDivisionError : public Error {
 public:
  using Error::Error;
};

/// An enumeration would exceed a configured size limit.
class GuardError : public Error {
 public:
  GuardError(std::string guard, const std::string& what)
      : Error(what), guard_(std::move(guard)) {}
  const std::string& guard() const noexcept { return guard_; }

 private:
  std::string guard_;
};

/// A polynomial is not in the orbit of the new family under linear changes.
class NotInFamilyError : public Error {
 public:
  using Error::Error;
};

/// An internal consistency assertion failed; always indicates a bug.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace excpoly
