#include "slicekit/error.hpp"

namespace slicekit {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::BadDocument: return "BadDocument";
    case ErrorKind::BadBase: return "BadBase";
    case ErrorKind::DigitOutOfRange: return "DigitOutOfRange";
    case ErrorKind::DuplicateDigit: return "DuplicateDigit";
    case ErrorKind::EmptyDigitSet: return "EmptyDigitSet";
    case ErrorKind::ZeroCoefficient: return "ZeroCoefficient";
    case ErrorKind::LengthMismatch: return "LengthMismatch";
    case ErrorKind::OutOfRange: return "OutOfRange";
    case ErrorKind::NotInterior: return "NotInterior";
    case ErrorKind::NotInXi: return "NotInXi";
    case ErrorKind::BoundaryPoint: return "BoundaryPoint";
    case ErrorKind::CoveringRequired: return "CoveringRequired";
    case ErrorKind::HypothesisViolated: return "HypothesisViolated";
    case ErrorKind::NotAchievable: return "NotAchievable";
    case ErrorKind::NotPlanar: return "NotPlanar";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::WideEnclosure: return "WideEnclosure";
  }
  return "Unknown";
}

}  // namespace slicekit
