#include "nonext/error.hpp"

namespace nonext {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::EmptyInput: return "EmptyInput";
    case ErrorCode::NegativeEntry: return "NegativeEntry";
    case ErrorCode::NonFinite: return "NonFinite";
    case ErrorCode::NotNormalized: return "NotNormalized";
    case ErrorCode::ZeroSum: return "ZeroSum";
    case ErrorCode::ZeroMarginal: return "ZeroMarginal";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::InvalidTable: return "InvalidTable";
    case ErrorCode::OutOfTableRange: return "OutOfTableRange";
    case ErrorCode::InvalidParameter: return "InvalidParameter";
    case ErrorCode::NonPositiveK: return "NonPositiveK";
    case ErrorCode::FamilyInvalid: return "FamilyInvalid";
    case ErrorCode::PhiVanishes: return "PhiVanishes";
    case ErrorCode::ZeroWithNonpositiveExponent: return "ZeroWithNonpositiveExponent";
    case ErrorCode::DomainError: return "DomainError";
    case ErrorCode::NegativeEntropy: return "NegativeEntropy";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace nonext
