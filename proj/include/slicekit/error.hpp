#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace slicekit {

enum class ErrorKind {
  BadDocument,
  BadBase,
  DigitOutOfRange,
  DuplicateDigit,
  EmptyDigitSet,
  ZeroCoefficient,
  LengthMismatch,
  OutOfRange,
  NotInterior,
  NotInXi,
  BoundaryPoint,
  CoveringRequired,
  HypothesisViolated,
  NotAchievable,
  NotPlanar,
  TooLarge,
  WideEnclosure,
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace slicekit
