#include "cyclebetti/error.hpp"

namespace cyclebetti {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidCycle: return "invalid-cycle";
    case ErrorKind::OutOfRange: return "out-of-range-vertex";
    case ErrorKind::UndefinedMarker: return "undefined-marker";
    case ErrorKind::Domain: return "domain";
    case ErrorKind::Shape: return "shape";
    case ErrorKind::Parse: return "parse";
    case ErrorKind::Validation: return "validation";
    case ErrorKind::InvalidMarkedSubset: return "invalid-marked-subset";
    case ErrorKind::InvariantViolation: return "invariant-violation";
  }
  return "unknown";
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(std::string(to_string(kind)) + " error: " + message), kind_(kind) {}

}  // namespace cyclebetti
