#include "levelmod/errors.hpp"

namespace levelmod {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::SpaceMismatch: return "SpaceMismatch";
    case ErrorCode::GenusMismatch: return "GenusMismatch";
    case ErrorCode::InvalidSpace: return "InvalidSpace";
    case ErrorCode::InvalidSymbol: return "InvalidSymbol";
    case ErrorCode::UnsupportedLevel: return "UnsupportedLevel";
    case ErrorCode::UnsupportedGenus: return "UnsupportedGenus";
    case ErrorCode::OutOfValidity: return "OutOfValidity";
    case ErrorCode::ParityConditionViolated: return "ParityConditionViolated";
    case ErrorCode::NotNormalized: return "NotNormalized";
    case ErrorCode::UnknownSymbol: return "UnknownSymbol";
    case ErrorCode::UnknownEntry: return "UnknownEntry";
    case ErrorCode::UnknownFormula: return "UnknownFormula";
    case ErrorCode::NegativeCoefficient: return "NegativeCoefficient";
    case ErrorCode::InvalidCatalog: return "InvalidCatalog";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::InternalInconsistency: return "InternalInconsistency";
  }
  return "Unknown";
}

}  // namespace levelmod
