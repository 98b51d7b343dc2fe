#include "spectra/error.hpp"

namespace spectra {

std::string_view error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::Ok: return "Ok";
    case ErrorCode::NotClosed: return "NotClosed";
    case ErrorCode::NoIdentity: return "NoIdentity";
    case ErrorCode::NotAssociative: return "NotAssociative";
    case ErrorCode::NotLatin: return "NotLatin";
    case ErrorCode::IncompatibleOrder: return "IncompatibleOrder";
    case ErrorCode::MalformedVector: return "MalformedVector";
    case ErrorCode::InvalidInvariants: return "InvalidInvariants";
    case ErrorCode::NotNormal: return "NotNormal";
    case ErrorCode::NotAbelian: return "NotAbelian";
    case ErrorCode::NotNilpotent: return "NotNilpotent";
    case ErrorCode::NotClass2: return "NotClass2";
    case ErrorCode::OrderOverflow: return "OrderOverflow";
    case ErrorCode::UnknownName: return "UnknownName";
    case ErrorCode::ParamOutOfRange: return "ParamOutOfRange";
    case ErrorCode::CapExceeded: return "CapExceeded";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::EmptyFamily: return "EmptyFamily";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::Internal: return "Internal";
  }
  return "Unknown";
}

}  // namespace spectra
