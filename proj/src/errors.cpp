#include "super3lie/errors.hpp"

namespace super3lie {

const char* kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::SpaceMismatch: return "SpaceMismatch";
    case ErrorKind::NotASubspace: return "NotASubspace";
    case ErrorKind::NotInSubspace: return "NotInSubspace";
    case ErrorKind::NotHomogeneous: return "NotHomogeneous";
    case ErrorKind::ArityMismatch: return "ArityMismatch";
    case ErrorKind::LevelCapExceeded: return "LevelCapExceeded";
    case ErrorKind::DimensionCapExceeded: return "DimensionCapExceeded";
    case ErrorKind::NotACocycle: return "NotACocycle";
    case ErrorKind::InvalidAlgebra: return "InvalidAlgebra";
    case ErrorKind::InvalidRepresentation: return "InvalidRepresentation";
    case ErrorKind::InvalidExtension: return "InvalidExtension";
    case ErrorKind::NotADerivation: return "NotADerivation";
    case ErrorKind::NotCompatible: return "NotCompatible";
    case ErrorKind::NotExtensible: return "NotExtensible";
    case ErrorKind::OddPairUnsupported: return "OddPairUnsupported";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::LabelUnknown: return "LabelUnknown";
    case ErrorKind::SkewInconsistent: return "SkewInconsistent";
  }
  return "Unknown";
}

}  // namespace super3lie
