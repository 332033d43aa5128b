#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace binext {

enum class ErrorCode {
  // complex
  EmptyFacet,
  DuplicateVertexInFacet,
  // extension
  NotAProperEdge,
  OriginMismatch,
  DuplicatePointName,
  DuplicateExtension,
  EmptyExtension,
  // poly
  OrderMismatch,
  DivisionByZero,
  InvalidField,
  // color
  UncoloredVertex,
  NotADTree,
  ValidationFailed,
  EmptyClass,
  // reduce
  NotInMatrix,
  BothXVariables,
  WrongCount,
  NotSOP,
  // cli
  SchemaError,
  UnknownName,
};

std::string_view to_string(ErrorCode code);

/// Error raised by every toolkit module; `code()` identifies the failure kind.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace binext
