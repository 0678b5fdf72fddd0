#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace slicereg {

enum class ErrorKind {
  RealArgument,
  OutsideRadius,
  NotReal,
  ZeroPolynomial,
  SingularPoint,
  PoleHit,
  NotUnit,
  NotInvertible,
  PoleDetected,
  NotOnSurface,
  DomainError,
  InvalidArgument,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Every failure raised by the library carries an ErrorKind so front ends
/// (the CLI exit codes, the Python bindings) can dispatch on it.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace slicereg
