#pragma once

#include <stdexcept>
#include <string>

namespace super3lie {

enum class ErrorKind {
  SpaceMismatch,
  NotASubspace,
  NotInSubspace,
  NotHomogeneous,
  ArityMismatch,
  LevelCapExceeded,
  DimensionCapExceeded,
  NotACocycle,
  InvalidAlgebra,
  InvalidRepresentation,
  InvalidExtension,
  NotADerivation,
  NotCompatible,
  NotExtensible,
  OddPairUnsupported,
  ParseError,
  LabelUnknown,
  SkewInconsistent,
};

const char* kind_name(ErrorKind kind);

/// Every failure raised by the library carries a machine-readable kind so the
/// CLI can serialize it and pick an exit code.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace super3lie
