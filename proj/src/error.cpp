#include "binext/error.hpp"

namespace binext {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::EmptyFacet: return "EmptyFacet";
    case ErrorCode::DuplicateVertexInFacet: return "DuplicateVertexInFacet";
    case ErrorCode::NotAProperEdge: return "NotAProperEdge";
    case ErrorCode::OriginMismatch: return "OriginMismatch";
    case ErrorCode::DuplicatePointName: return "DuplicatePointName";
    case ErrorCode::DuplicateExtension: return "DuplicateExtension";
    case ErrorCode::EmptyExtension: return "EmptyExtension";
    case ErrorCode::OrderMismatch: return "OrderMismatch";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::InvalidField: return "InvalidField";
    case ErrorCode::UncoloredVertex: return "UncoloredVertex";
    case ErrorCode::NotADTree: return "NotADTree";
    case ErrorCode::ValidationFailed: return "ValidationFailed";
    case ErrorCode::EmptyClass: return "EmptyClass";
    case ErrorCode::NotInMatrix: return "NotInMatrix";
    case ErrorCode::BothXVariables: return "BothXVariables";
    case ErrorCode::WrongCount: return "WrongCount";
    case ErrorCode::NotSOP: return "NotSOP";
    case ErrorCode::SchemaError: return "SchemaError";
    case ErrorCode::UnknownName: return "UnknownName";
  }
  return "UnknownError";
}

}  // namespace binext
