#pragma once

#include <cstddef>

// Numerical tolerances shared by every module. The runtime values can be
// overridden through environment variables (see tolerances()).
namespace hypcube {

/// Endpoint coincidence and trace classification.
inline constexpr double kEpsilon = 1e-9;

/// Diagonal sub-arcs must share more than this much length to count as overlapping.
inline constexpr double kOverlapTolerance = 1e-7;

/// Slack allowed when asserting each inequality of a bound certificate.
inline constexpr double kChainTolerance = 1e-9;

inline constexpr int kDefaultRadius = 4;
inline constexpr std::size_t kDefaultMaxLifts = 200000;
inline constexpr double kDefaultShearBox = 3.0;
/// Lengths below this count as pinched to zero in infimum estimates.
inline constexpr double kLengthFloor = 1e-6;

struct Tolerances {
  double epsilon = kEpsilon;
  std::size_t max_lifts = kDefaultMaxLifts;
};

/// Defaults, overridden by HYPCUBE_EPSILON and HYPCUBE_MAX_LIFTS when set.
Tolerances tolerances();

}  // namespace hypcube
