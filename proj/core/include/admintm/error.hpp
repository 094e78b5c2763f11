#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace admintm {

enum class ErrorCode {
  // process_model
  UnknownNode,
  UnknownEdge,
  DuplicateNode,
  WouldDisconnectDeployment,
  InvalidEdit,
  InvalidGraph,
  // taxonomy / engine
  UnknownAttack,
  // profile
  MissingAnswer,
  UnknownKey,
  InvariantViolation,
  BadEnumValue,
  // io_schema
  SyntaxError,
  UnknownField,
  MissingField,
  TypeMismatch,
  MalformedValue,
  VersionMismatch,
  KindMismatch,
  // report
  MinimumTwo,
  TaxonomyVersionMismatch,
  // filesystem
  Io,
};

std::string_view to_string(ErrorCode code) noexcept;

// Errors raised by every admintm operation. `code` is stable and is what
// callers (and the CLI exit-code mapping) switch on; `what()` is for humans.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// True for errors caused by malformed documents rather than by well-formed
// input that fails a semantic check.
bool is_schema_error(ErrorCode code) noexcept;

}  // namespace admintm
