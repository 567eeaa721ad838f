#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace cyclebetti {

enum class ErrorKind {
  InvalidCycle,
  OutOfRange,
  UndefinedMarker,
  Domain,
  Shape,
  Parse,
  Validation,
  InvalidMarkedSubset,
  InvariantViolation,
};

std::string_view to_string(ErrorKind kind);

/// Single exception type for the library; `kind()` tells callers which
/// contract was broken.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message);

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace cyclebetti
