#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "hypcube/constants.hpp"
#include "hypcube/holonomy.hpp"
#include "hypcube/ribbon_graph.hpp"

namespace hypcube {

/// 2n strictly increasing angles in [0, 2*pi), n >= 2.
class AngleConfiguration {
 public:
  /// Throws InvalidConfiguration for an odd count, fewer than 4 angles, angles
  /// outside [0, 2*pi), or consecutive gaps (cyclically) not exceeding eps.
  explicit AngleConfiguration(std::vector<double> theta, double eps = kEpsilon);

  /// theta_j = (j - 1) * pi / n.
  static AngleConfiguration regular(int n);

  int n() const { return static_cast<int>(theta_.size()) / 2; }
  const std::vector<double>& angles() const { return theta_; }
  /// Angle with index read mod 2n (0-based).
  double operator[](int j) const;

 private:
  std::vector<double> theta_;
};

/// Sum over j of log |(x_j - x_{j+n+1})(x_j - x_{j+n-1}) / ((x_j - x_{j+1})(x_j - x_{j-1}))|
/// with chord distances.
double F_printed(const AngleConfiguration& c);

/// Half of F_printed: the total diagonal length of the cube with these
/// endpoints. Throws DimensionTooSmall for n < 3.
double F_len(const AngleConfiguration& c);

/// dF_printed / dtheta_j, from the cotangent form.
std::vector<double> F_gradient(const AngleConfiguration& c);

/// n log((1 + cos(pi/n)) / (1 - cos(pi/n))).
double cube_bound(int n);

/// Sum of cube_bound over the dimensions. Throws InvalidDimension for a
/// dimension below 2.
double theorem_bound(std::span<const int> dims);

/// Image of the configuration under the disk automorphism taking its first
/// two points and point n + 1 to 0, pi/n and pi.
AngleConfiguration normalize_configuration(const AngleConfiguration& c);

struct FMinimum {
  double value = 0.0;
  /// Normalized by normalize_configuration.
  AngleConfiguration argmin;
  std::size_t evaluations = 0;
};

/// Multi-start simplex descent of F_printed over configurations of 2n points,
/// parameterized by the log-gaps. Throws DimensionTooSmall for n < 3 and
/// InvalidParameter for restarts < 1.
FMinimum minimize_F(int n, int restarts, std::uint64_t seed);

struct BoundCertificate {
  int radius = 0;
  /// Dimension of each cube class used, largest first.
  std::vector<int> dims;
  double bound = 0.0;
  std::vector<double> curve_lengths;
  double length = 0.0;
  double margin = 0.0;
  /// Total diagonal length of one cube of each class of dimension >= 3.
  std::vector<double> diagonal_sums;
  double diagonal_total = 0.0;
  bool length_covers_diagonals = false;
  bool diagonals_cover_bound = false;
  bool diagonals_inject = false;
  bool chain_ok = false;
  long long self_intersection = 0;
  bool self_intersection_stabilized = false;
  /// bound and length per self-intersection; empty for simple systems.
  std::optional<double> bound_per_intersection;
  std::optional<double> length_per_intersection;
};

/// Theorem A at one point: the cubes of the truncated lift set, their
/// separation, diagonals and the inequality chain. Throws SeparationFailed
/// when the cube classes are not hyperplane separated.
BoundCertificate verify_point(const CurveSystem& system, std::span<const double> shears, int L,
                              double tol = kChainTolerance);

struct OptimizerConfig {
  /// Simplex iterations per restart.
  int iterations = 400;
  int restarts = 4;
  std::uint64_t seed = 1;
  /// Starting points are drawn from [-box, box] per shear.
  double box = kDefaultShearBox;
  /// Radius used to read off the cube dimensions for the bound.
  int radius = 3;
  double floor = kLengthFloor;
};

struct InfimumEstimate {
  ShearVector best_shears;
  double best_length = 0.0;
  /// The bound, when separation of the cube classes was certified at the
  /// starting point; 0 otherwise.
  double bound = 0.0;
  bool separation_certified = false;
  std::vector<int> dims;
  std::size_t iterations = 0;
  /// (iteration, best length so far) after every simplex step.
  std::vector<std::pair<std::size_t, double>> trace;
  bool reached_floor = false;
  long long self_intersection = 0;
  std::optional<double> length_per_intersection;
  std::optional<double> bound_per_intersection;
};

/// Total length of the system; a parabolic (cusp) curve counts as 0.
double system_length(const Spine& spine, const std::vector<Word>& words,
                     std::span<const double> shears);

/// Multi-start simplex descent of the system length over shear coordinates.
/// The result is an upper estimate of the infimum.
InfimumEstimate estimate_infimum(const CurveSystem& system, const OptimizerConfig& config);

}  // namespace hypcube
