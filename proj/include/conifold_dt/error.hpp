#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace conifold_dt {

enum class ErrorKind {
  invalid_argument,
  enumeration_range_exceeded,
  undefined_degree,
  invalid_range,
  unsupported_diagram,
  order_mismatch,
  non_unit_constant_term,
  half_integer_m1,
};

inline std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::invalid_argument: return "invalid-argument";
    case ErrorKind::enumeration_range_exceeded: return "enumeration-range-exceeded";
    case ErrorKind::undefined_degree: return "undefined-degree";
    case ErrorKind::invalid_range: return "invalid-range";
    case ErrorKind::unsupported_diagram: return "unsupported-diagram";
    case ErrorKind::order_mismatch: return "order-mismatch";
    case ErrorKind::non_unit_constant_term: return "non-unit-constant-term";
    case ErrorKind::half_integer_m1: return "half-integer-m1";
  }
  return "unknown";
}

/// Domain error raised by every operation in the library. The kind is the
/// stable, machine-readable part; the message names the violated precondition.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace conifold_dt
