#include "fractalis/error.hpp"

namespace fractalis {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NonPositiveValue: return "NonPositiveValue";
    case ErrorCode::TooShort: return "TooShort";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::ZeroVariance: return "ZeroVariance";
    case ErrorCode::NonFiniteValue: return "NonFiniteValue";
    case ErrorCode::LabelOrder: return "LabelOrder";
    case ErrorCode::MalformedHeader: return "MalformedHeader";
    case ErrorCode::BadRow: return "BadRow";
    case ErrorCode::EmptyFile: return "EmptyFile";
    case ErrorCode::DuplicateDate: return "DuplicateDate";
    case ErrorCode::BadBandwidth: return "BadBandwidth";
    case ErrorCode::EmptyGrid: return "EmptyGrid";
    case ErrorCode::GridMismatch: return "GridMismatch";
    case ErrorCode::LagTooLarge: return "LagTooLarge";
    case ErrorCode::ScaleTooLarge: return "ScaleTooLarge";
    case ErrorCode::AllBlocksDegenerate: return "AllBlocksDegenerate";
    case ErrorCode::InsufficientScales: return "InsufficientScales";
    case ErrorCode::InvalidParams: return "InvalidParams";
    case ErrorCode::QuadratureFailure: return "QuadratureFailure";
    case ErrorCode::GaussianHasNoTailLaw: return "GaussianHasNoTailLaw";
    case ErrorCode::DegenerateQuantiles: return "DegenerateQuantiles";
    case ErrorCode::SampleTooSmall: return "SampleTooSmall";
  }
  return "Unknown";
}

ErrorCategory category(ErrorCode code) {
  switch (code) {
    case ErrorCode::NonPositiveValue:
    case ErrorCode::NonFiniteValue:
    case ErrorCode::LabelOrder:
    case ErrorCode::MalformedHeader:
    case ErrorCode::BadRow:
    case ErrorCode::EmptyFile:
    case ErrorCode::DuplicateDate:
      return ErrorCategory::input;
    case ErrorCode::QuadratureFailure:
    case ErrorCode::AllBlocksDegenerate:
    case ErrorCode::DegenerateQuantiles:
    case ErrorCode::ZeroVariance:
      return ErrorCategory::numeric;
    default:
      return ErrorCategory::precondition;
  }
}

}  // namespace fractalis
