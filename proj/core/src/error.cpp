#include "pgsem/error.hpp"

namespace pgsem {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::UnknownBasicType: return "UnknownBasicType";
    case ErrorCode::MalformedToken: return "MalformedToken";
    case ErrorCode::AdjointOrderOverflow: return "AdjointOrderOverflow";
    case ErrorCode::DuplicateBasicType: return "DuplicateBasicType";
    case ErrorCode::InvalidDiagram: return "InvalidDiagram";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::SemiringMismatch: return "SemiringMismatch";
    case ErrorCode::AxisMismatch: return "AxisMismatch";
    case ErrorCode::DimMismatch: return "DimMismatch";
    case ErrorCode::ShapeMismatch: return "ShapeMismatch";
    case ErrorCode::RankError: return "RankError";
    case ErrorCode::NotRealSemiring: return "NotRealSemiring";
    case ErrorCode::ZeroVector: return "ZeroVector";
    case ErrorCode::SchemaError: return "SchemaError";
    case ErrorCode::InvalidScalarForSemiring: return "InvalidScalarForSemiring";
    case ErrorCode::UnknownWord: return "UnknownWord";
    case ErrorCode::NoReduction: return "NoReduction";
    case ErrorCode::ModeUnsupported: return "ModeUnsupported";
  }
  return "Unknown";
}

}  // namespace pgsem
