#pragma once

#include <array>
#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "hypcube/constants.hpp"
#include "hypcube/holonomy.hpp"
#include "hypcube/hyperbolic.hpp"
#include "hypcube/word.hpp"

namespace hypcube {

namespace detail {
struct WideFrames;
}

/// The lift tag * axis(w) of curve `curve`. Tags are shortlex-least in their
/// coset tag * <w>, so two lifts coincide exactly when their tags do.
struct Lift {
  Geodesic axis;
  Word tag;
  int curve = 0;
};

/// Truncated orbit of lifts with the linking graph between them.
class LiftSet {
 public:
  const std::vector<Lift>& lifts() const { return lifts_; }
  std::size_t size() const { return lifts_.size(); }
  int radius() const { return radius_; }
  const Representation& representation() const { return rep_; }
  /// Primitive roots of the input curve words.
  const std::vector<Word>& curves() const { return curves_; }
  double curve_length(int curve) const { return lengths_[curve]; }

  bool linked(int i, int j) const;
  /// Sorted neighbours of each lift in the linking graph.
  const std::vector<std::vector<int>>& neighbours() const { return adjacency_; }
  std::size_t linked_pair_count() const;

  /// Half-plane coordinates of the endpoints of lift `other` once lift `frame`
  /// is moved to the imaginary axis, repelling end at 0. Evaluated in extended
  /// precision from the word tag(frame)^-1 tag(other).
  std::array<double, 2> coordinates_in_frame(int frame, int other) const;

 private:
  friend LiftSet enumerate_lifts(const Representation&, const std::vector<Word>&, int,
                                 std::size_t);
  std::vector<Lift> lifts_;
  int radius_ = 0;
  Representation rep_;
  std::vector<Word> curves_;
  std::vector<double> lengths_;
  std::vector<std::vector<int>> adjacency_;
  std::shared_ptr<const detail::WideFrames> wide_;
};

/// All lifts tag * axis(w) for reduced tags of length <= L, one per coset
/// tag * <w>. Throws InvalidParameter for L < 1, ParabolicCurve or
/// NotHyperbolic for curve words without an axis, and ResourceLimit when the
/// tag ball would exceed `max_lifts`.
LiftSet enumerate_lifts(const Representation& r, const std::vector<Word>& curves, int L,
                        std::size_t max_lifts = tolerances().max_lifts);

/// Linked pairs grouped into orbits. The orbit of (i, j) is the double coset
/// <w_i> tag_i^-1 tag_j <w_j>, compared through its shortlex-least element, so
/// the grouping is exact.
struct PairClasses {
  /// (i, j, class) for each linked pair with i < j.
  std::vector<std::array<int, 3>> pairs;
  int count = 0;
  int class_of(int i, int j) const;
};

PairClasses classify_pairs(const LiftSet& ls);

struct Cube {
  /// Sorted lift ids.
  std::vector<int> lifts;
  int orbit_class = -1;
  int dimension() const { return static_cast<int>(lifts.size()); }
};

struct CubeClass {
  int dimension = 0;
  /// Sorted pair classes of the cube (the curve, as -1 - curve, for 1-cubes).
  std::vector<int> key;
  /// A clique cut off by the truncation: its pairs are part of a larger class.
  bool truncated = false;
  std::size_t count = 0;
  int representative = -1;
};

struct CubeReport {
  std::vector<Cube> cubes;
  std::vector<CubeClass> classes;
  PairClasses pairs;

  /// Number of classes of the given dimension that are not truncated.
  int class_count(int dimension) const;
  int max_dimension() const;
};

/// Maximal cliques of the linking graph (Bron-Kerbosch with pivoting), grouped
/// into orbit classes by their pair classes.
CubeReport maximal_cubes(const LiftSet& ls);

struct SeparationWitness {
  /// Positions in the cube list passed to separation_check.
  int first = -1, second = -1;
  std::vector<int> shared;
  /// Linked lifts c in first \ second and d in second \ first, if that is the
  /// violation; empty when the cubes share two or more lifts.
  std::optional<std::array<int, 2>> off_pair;
};

struct SeparationReport {
  bool pass = true;
  std::size_t pairs_checked = 0;
  std::optional<SeparationWitness> witness;
};

/// Checks that every two cubes share at most one lift and, if they share one,
/// that no remaining lift of one links a remaining lift of the other. Throws
/// CubeNotInLiftSet if a cube is not a clique of ls.
SeparationReport separation_check(std::span<const Cube> cubes, const LiftSet& ls);

/// True iff the witness still describes a violation.
bool recheck(const SeparationWitness& w, std::span<const Cube> cubes, const LiftSet& ls);

struct DiagonalOverlap {
  int lift = -1;
  int first = -1, second = -1;
  double overlap = 0.0;
};

struct InjectivityReport {
  bool pass = true;
  std::vector<DiagonalOverlap> overlaps;
  /// Total diagonal length of each input cube.
  std::vector<double> diagonal_sums;
};

/// Diagonals of every cube, compared along each lift; two diagonals on the same
/// lift may meet in a point but not share more than `tol` of length. Throws
/// DegenerateSeparator for cubes of dimension below 3.
InjectivityReport diagonal_injectivity_check(std::span<const Cube> cubes, const LiftSet& ls,
                                             double tol = kOverlapTolerance);

/// Total diagonal length of one cube (dimension >= 3).
double cube_diagonal_sum(const Cube& cube, const LiftSet& ls);

struct SelfIntersectionReport {
  long long count = 0;
  /// Pair classes seen using only lifts with tags of length <= r, r = 1..L.
  std::vector<long long> per_radius;
  int stabilization_radius = 0;
  /// False when the count still changed between radius L - 1 and L.
  bool stabilized = false;
};

SelfIntersectionReport geometric_self_intersection(const LiftSet& ls);

}  // namespace hypcube
