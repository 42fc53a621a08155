#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace fractalis {

enum class ErrorCode {
  // series
  NonPositiveValue,
  TooShort,
  LengthMismatch,
  ZeroVariance,
  NonFiniteValue,
  LabelOrder,
  // ingest
  MalformedHeader,
  BadRow,
  EmptyFile,
  DuplicateDate,
  // density
  BadBandwidth,
  EmptyGrid,
  GridMismatch,
  // autocorr
  LagTooLarge,
  // rescaled range
  ScaleTooLarge,
  AllBlocksDegenerate,
  InsufficientScales,
  // stable
  InvalidParams,
  QuadratureFailure,
  GaussianHasNoTailLaw,
  DegenerateQuantiles,
  SampleTooSmall,
};

std::string_view to_string(ErrorCode code);

enum class ErrorCategory { input, numeric, precondition };

ErrorCategory category(ErrorCode code);

class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

private:
  ErrorCode code_;
};

}  // namespace fractalis
