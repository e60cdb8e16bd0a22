#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace blockatlas {

enum class ErrorKind {
  InvalidArgument,
  DividesModulus,
  Overflow,
  BoundExceeded,
  LengthTooShort,
  NotSupported,
  BadPrimeHypothesis,
  IncompatibleAction,
  NotFinite,
  NotAutomorphism,
  InvalidDatum,
  InvalidWitness,
  ParseError,
  InvariantViolation,
};

std::string_view error_kind_name(ErrorKind kind);

/// Every failure raised by the library carries one of the kinds above.
/// InvariantViolation is reserved for internal consistency checks that
/// failed; all other kinds describe a rejected input.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message) {
  throw Error(kind, message);
}

inline void ensure(bool condition, ErrorKind kind, const std::string& message) {
  if (!condition) throw Error(kind, message);
}

}  // namespace blockatlas
