#include "hypcube/error.hpp"

namespace hypcube {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::DuplicateEndpoint: return "DuplicateEndpoint";
    case ErrorCode::FixedPointInPairing: return "FixedPointInPairing";
    case ErrorCode::UnpairedEndpoint: return "UnpairedEndpoint";
    case ErrorCode::InvalidParameter: return "InvalidParameter";
    case ErrorCode::InvalidGluing: return "InvalidGluing";
    case ErrorCode::InvalidTree: return "InvalidTree";
    case ErrorCode::NotHyperbolic: return "NotHyperbolic";
    case ErrorCode::SharedEndpoint: return "SharedEndpoint";
    case ErrorCode::NotPairwiseLinked: return "NotPairwiseLinked";
    case ErrorCode::DimensionTooSmall: return "DimensionTooSmall";
    case ErrorCode::DegenerateSeparator: return "DegenerateSeparator";
    case ErrorCode::InvalidH: return "InvalidH";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::DegenerateStructure: return "DegenerateStructure";
    case ErrorCode::EmptyWord: return "EmptyWord";
    case ErrorCode::ParabolicCurve: return "ParabolicCurve";
    case ErrorCode::ResourceLimit: return "ResourceLimit";
    case ErrorCode::CubeNotInLiftSet: return "CubeNotInLiftSet";
    case ErrorCode::InvalidDimension: return "InvalidDimension";
    case ErrorCode::InvalidConfiguration: return "InvalidConfiguration";
    case ErrorCode::SeparationFailed: return "SeparationFailed";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

void fail(ErrorCode code, const std::string& message) { throw Error(code, message); }

}  // namespace hypcube
