#pragma once

#include <array>
#include <complex>
#include <span>
#include <vector>

#include "hypcube/constants.hpp"

namespace hypcube {

using Complex = std::complex<double>;

/// Homogeneous coordinates (x, y) of the boundary point x / y of the upper
/// half-plane; y == 0 is the point at infinity.
using BoundaryVector = std::array<double, 2>;

/// Point of the boundary circle of the disk model, by angle in [0, 2*pi).
///
/// Half-plane and disk are related by the Cayley transform z -> (z - i)/(z + i),
/// so the real point x sits at angle 2*atan2(1, -x), 0 at angle pi and infinity
/// at angle 0.
struct IdealPoint {
  double angle = 0.0;

  static IdealPoint from_angle(double theta);
  static IdealPoint from_real(double x);
  static IdealPoint from_vector(const BoundaryVector& v);
  BoundaryVector vector() const;
  /// Half-plane coordinate, +infinity at angle 0.
  double real() const;
  /// Same point as a unit complex number.
  Complex disk() const { return std::polar(1.0, angle); }
};

/// Shortest angular distance between two boundary points.
double angular_distance(IdealPoint a, IdealPoint b);

/// Geodesic by its two endpoints. Axes come out oriented from the repelling
/// endpoint `u` to the attracting endpoint `v`.
struct Geodesic {
  IdealPoint u, v;
};

/// Orientation-preserving isometry of the half-plane, a matrix of PSL(2, R).
/// Stored with determinant 1 and sign fixed so that the first nonzero entry of
/// (a, b, c, d) is positive.
class Isometry {
 public:
  Isometry() = default;
  /// Scales to determinant 1. Throws InvalidParameter if ad - bc <= 0.
  Isometry(double a, double b, double c, double d);

  static Isometry identity() { return {}; }
  /// Hyperbolic translation along the imaginary axis by `length`.
  static Isometry translation(double length);
  /// Rotation by `angle` about i (the disk centre).
  static Isometry rotation(double angle);

  double a() const { return m_[0]; }
  double b() const { return m_[1]; }
  double c() const { return m_[2]; }
  double d() const { return m_[3]; }
  double trace() const { return m_[0] + m_[3]; }

  Isometry inverse() const;
  friend Isometry operator*(const Isometry& x, const Isometry& y);

  BoundaryVector apply(const BoundaryVector& v) const;
  IdealPoint apply(IdealPoint p) const;
  Geodesic apply(const Geodesic& g) const;
  /// Action on the upper half-plane.
  Complex apply_half_plane(Complex z) const;

  bool operator==(const Isometry&) const = default;

 private:
  struct Unchecked {};
  /// Entries already of determinant 1 (products, inverses); only the sign is fixed.
  Isometry(Unchecked, double a, double b, double c, double d);
  void fix_sign();

  std::array<double, 4> m_{1.0, 0.0, 0.0, 1.0};
};

enum class IsometryType { Hyperbolic, Parabolic, Elliptic };

const char* to_string(IsometryType t);

/// By |trace| against 2 with tolerance eps.
IsometryType classify_isometry(const Isometry& m, double eps = kEpsilon);

/// 2 * arccosh(|trace| / 2). Throws NotHyperbolic.
double translation_length(const Isometry& m);

/// Boundary fixed points of a hyperbolic isometry as (repelling, attracting)
/// homogeneous vectors. Throws NotHyperbolic.
std::array<BoundaryVector, 2> fixed_vectors(const Isometry& m);

/// Axis from the repelling to the attracting fixed point. Throws NotHyperbolic.
Geodesic axis(const Isometry& m);

/// True iff the endpoints of b separate the endpoints of a. Throws
/// SharedEndpoint if any two of the four endpoints are within eps.
bool link(const Geodesic& a, const Geodesic& b, double eps = kEpsilon);

/// Same test for endpoints known to be distinct.
bool interleaved(double a1, double a2, double b1, double b2);

/// Half-plane to disk and back.
Complex to_disk(Complex z);
Complex to_half_plane(Complex w);

/// Hyperbolic distance between two points of the disk.
double disk_distance(Complex z, Complex w);

/// Intersection point (in the disk) of two linked geodesics.
Complex intersection_point(const Geodesic& a, const Geodesic& b);

/// n pairwise linked geodesics with endpoints relabelled in cyclic order:
/// x_1 < ... < x_2n are the endpoint angles, p_i = x_i, q_i = x_{i+n}, and
/// geodesics[i] joins x_{i+1} to x_{i+1+n} (0-based i).
struct CubeConfiguration {
  int n = 0;
  std::vector<double> x;
  std::vector<Geodesic> geodesics;
  /// Index of geodesics[i] in the caller's list.
  std::vector<int> source;

  double p(int i) const { return x[i]; }
  double q(int i) const { return x[i + n]; }
};

/// Throws DimensionTooSmall for fewer than 3 geodesics and NotPairwiseLinked
/// when some pair does not link.
CubeConfiguration cube_configuration(std::span<const Geodesic> lifts, double eps = kEpsilon);

/// Labels without the size check (used for 2-cubes, which have no diagonals).
CubeConfiguration order_configuration(std::span<const Geodesic> lifts, double eps = kEpsilon);

struct DiagonalData {
  /// The geodesics (p_{i-1}, p_{i+1}) and (q_{i-1}, q_{i+1}); indices of x are
  /// read mod 2n, so p_0 is q_n.
  Geodesic separator_p, separator_q;
  /// Where the separators cross gamma_i, in the disk.
  Complex start, end;
  /// The cross-ratio product with chord distances, before taking logs.
  double printed = 0.0;
  /// Hyperbolic length of the diagonal: half the log of `printed`.
  double length = 0.0;
};

/// Throws DegenerateSeparator when n < 3.
std::vector<DiagonalData> diagonal_data(const CubeConfiguration& c);

/// Chord length |e^{ia} - e^{ib}|.
double chord(double a, double b);

/// Two disjoint geodesics joined by their common perpendicular.
struct HShape {
  Geodesic first, second;
};

/// The two linked geodesics with the same four endpoints. Throws InvalidH if the
/// sides link or share an endpoint.
std::array<Geodesic, 2> cross_of(const HShape& h, double eps = kEpsilon);

/// True iff some geodesic of one cross links some geodesic of the other.
/// Geodesics sharing an endpoint are not counted as linked.
bool crosses_intersect(const HShape& h1, const HShape& h2, double eps = kEpsilon);

}  // namespace hypcube
