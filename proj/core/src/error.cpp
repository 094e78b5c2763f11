#include "admintm/error.hpp"

namespace admintm {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::UnknownNode: return "UnknownNode";
    case ErrorCode::UnknownEdge: return "UnknownEdge";
    case ErrorCode::DuplicateNode: return "DuplicateNode";
    case ErrorCode::WouldDisconnectDeployment: return "WouldDisconnectDeployment";
    case ErrorCode::InvalidEdit: return "InvalidEdit";
    case ErrorCode::InvalidGraph: return "InvalidGraph";
    case ErrorCode::UnknownAttack: return "UnknownAttack";
    case ErrorCode::MissingAnswer: return "MissingAnswer";
    case ErrorCode::UnknownKey: return "UnknownKey";
    case ErrorCode::InvariantViolation: return "InvariantViolation";
    case ErrorCode::BadEnumValue: return "BadEnumValue";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::UnknownField: return "UnknownField";
    case ErrorCode::MissingField: return "MissingField";
    case ErrorCode::TypeMismatch: return "TypeMismatch";
    case ErrorCode::MalformedValue: return "MalformedValue";
    case ErrorCode::VersionMismatch: return "VersionMismatch";
    case ErrorCode::KindMismatch: return "KindMismatch";
    case ErrorCode::MinimumTwo: return "MinimumTwo";
    case ErrorCode::TaxonomyVersionMismatch: return "TaxonomyVersionMismatch";
    case ErrorCode::Io: return "Io";
  }
  return "Unknown";
}

bool is_schema_error(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::SyntaxError:
    case ErrorCode::UnknownField:
    case ErrorCode::MissingField:
    case ErrorCode::TypeMismatch:
    case ErrorCode::MalformedValue:
    case ErrorCode::VersionMismatch:
    case ErrorCode::KindMismatch:
    case ErrorCode::BadEnumValue:
    case ErrorCode::UnknownKey:
    case ErrorCode::MissingAnswer:
      return true;
    default:
      return false;
  }
}

}  // namespace admintm
