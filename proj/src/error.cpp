#include "blockatlas/error.hpp"

namespace blockatlas {

std::string_view error_kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::DividesModulus: return "DividesModulus";
    case ErrorKind::Overflow: return "Overflow";
    case ErrorKind::BoundExceeded: return "BoundExceeded";
    case ErrorKind::LengthTooShort: return "LengthTooShort";
    case ErrorKind::NotSupported: return "NotSupported";
    case ErrorKind::BadPrimeHypothesis: return "BadPrimeHypothesis";
    case ErrorKind::IncompatibleAction: return "IncompatibleAction";
    case ErrorKind::NotFinite: return "NotFinite";
    case ErrorKind::NotAutomorphism: return "NotAutomorphism";
    case ErrorKind::InvalidDatum: return "InvalidDatum";
    case ErrorKind::InvalidWitness: return "InvalidWitness";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::InvariantViolation: return "InvariantViolation";
  }
  return "Unknown";
}

}  // namespace blockatlas
