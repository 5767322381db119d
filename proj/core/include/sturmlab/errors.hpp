#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace sturmlab {

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Spec-string syntax or validation failure; carries the offending position.
class ParseError : public Error {
public:
  ParseError(const std::string& msg, std::size_t position)
      : Error(msg + " (at position " + std::to_string(position) + ")"),
        position_(position) {}
  std::size_t position() const { return position_; }

private:
  std::size_t position_;
};

/// A prefix/window/table request exceeded the configured expansion limit.
class ResourceLimitError : public Error {
public:
  using Error::Error;
};

/// Input is not in the image of the morphism's code; carries the first bad position.
class NotDecodableError : public Error {
public:
  NotDecodableError(const std::string& msg, std::size_t position)
      : Error(msg + " (at position " + std::to_string(position) + ")"),
        position_(position) {}
  std::size_t position() const { return position_; }

private:
  std::size_t position_;
};

/// Queried word is not a factor of the spec's word.
class NotAFactorError : public Error {
public:
  using Error::Error;
};

/// A factor table could not be certified (or saturated) within its bound.
class CertificationError : public Error {
public:
  using Error::Error;
};

/// detect_type could not classify the word within the scanned bound.
class TypeDetectError : public Error {
public:
  enum class Reason { neither_found, both_found };
  TypeDetectError(Reason reason, const std::string& msg) : Error(msg), reason_(reason) {}
  Reason reason() const { return reason_; }

private:
  Reason reason_;
};

/// A caller-side contract violation (bad arguments, unmet preconditions).
class PreconditionError : public Error {
public:
  using Error::Error;
};

/// A theorem-backed assertion failed.  This signals an implementation bug,
/// never a property of valid inputs; the message carries the counterexample.
class InvariantViolationError : public Error {
public:
  using Error::Error;
};

}  // namespace sturmlab
