#include "slicereg/error.hpp"

namespace slicereg {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::RealArgument: return "RealArgument";
    case ErrorKind::OutsideRadius: return "OutsideRadius";
    case ErrorKind::NotReal: return "NotReal";
    case ErrorKind::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorKind::SingularPoint: return "SingularPoint";
    case ErrorKind::PoleHit: return "PoleHit";
    case ErrorKind::NotUnit: return "NotUnit";
    case ErrorKind::NotInvertible: return "NotInvertible";
    case ErrorKind::PoleDetected: return "PoleDetected";
    case ErrorKind::NotOnSurface: return "NotOnSurface";
    case ErrorKind::DomainError: return "DomainError";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

}  // namespace slicereg
