#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hypcube {

enum class ErrorCode {
  DuplicateEndpoint,
  FixedPointInPairing,
  UnpairedEndpoint,
  InvalidParameter,
  InvalidGluing,
  InvalidTree,
  NotHyperbolic,
  SharedEndpoint,
  NotPairwiseLinked,
  DimensionTooSmall,
  DegenerateSeparator,
  InvalidH,
  DimensionMismatch,
  DegenerateStructure,
  EmptyWord,
  ParabolicCurve,
  ResourceLimit,
  CubeNotInLiftSet,
  InvalidDimension,
  InvalidConfiguration,
  SeparationFailed,
};

std::string_view to_string(ErrorCode code);

/// Every failure raised by the library carries one of the codes above so that
/// callers (and the CLI) can branch on the kind of failure without parsing text.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] void fail(ErrorCode code, const std::string& message);

}  // namespace hypcube
