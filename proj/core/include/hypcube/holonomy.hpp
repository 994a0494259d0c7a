#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "hypcube/fatgraph.hpp"
#include "hypcube/hyperbolic.hpp"
#include "hypcube/word.hpp"

namespace hypcube {

/// One shear per edge of the ideal triangulation dual to the trivalent spine.
using ShearVector = std::vector<double>;

/// A ribbon graph used as a spine of a punctured surface, blown up to a
/// trivalent graph.
///
/// A vertex with cyclic order h_0, ..., h_{m-1} (m >= 4) becomes a caterpillar
/// of m - 2 trivalent vertices joined by m - 3 new edges: triangles
/// [h_0, h_1, e_0], [e_0', h_2, e_1], ..., [e_{m-4}', h_{m-2}, h_{m-1}], where
/// e_k / e_k' are the two sides of the k-th new edge. Refined half-edge ids
/// keep the ids of the original graph and number the new ones after them.
///
/// Vertices of valence 2 are kept; the edges through them form chains that
/// carry a single shear, since only the sum of their shears matters. Shear
/// slots are ordered by the smallest edge id of each chain, so the original
/// edges come first. A graph that is a single cycle is the annulus and has one
/// slot.
class Spine {
 public:
  explicit Spine(Fatgraph graph);
  Spine(Fatgraph graph, SpanningTree tree);

  const Fatgraph& graph() const { return graph_; }
  const Fatgraph& refined() const { return refined_; }
  const SpanningTree& tree() const { return tree_; }
  const std::vector<int>& generator_edges() const { return generators_; }
  int rank() const { return static_cast<int>(generators_.size()); }
  int shear_dimension() const { return slot_count_; }
  bool is_annulus() const { return annulus_; }

  /// Slot carrying the shear of a refined edge, or -1 for chain members after
  /// the first (they contribute shear 0).
  int shear_slot(int refined_half_edge) const { return slot_[refined_.edge_of(refined_half_edge)]; }

  /// Word of a closed path in graph().
  Word word(const EdgePath& path) const;
  /// Same path in refined(), threading through the caterpillars.
  EdgePath refine_path(const EdgePath& path) const;

 private:
  void build();

  Fatgraph graph_;
  Fatgraph refined_;
  SpanningTree tree_;
  std::vector<int> generators_;
  std::vector<int> slot_;
  int slot_count_ = 0;
  bool annulus_ = false;
};

/// Images of the free generators x1, x2, ...
class Representation {
 public:
  Representation() = default;
  explicit Representation(std::vector<Isometry> generators) : gens_(std::move(generators)) {}

  const std::vector<Isometry>& generators() const { return gens_; }
  int rank() const { return static_cast<int>(gens_.size()); }
  /// Throws InvalidParameter if a letter exceeds the rank.
  Isometry evaluate(const Word& w) const;

 private:
  std::vector<Isometry> gens_;
};

/// Shear across an edge: [[0, e^{s/2}], [-e^{-s/2}, 0]].
Isometry shear_matrix(double s);
/// Turn to the next half-edge at a trivalent vertex: [[0, -1], [1, 1]].
Isometry left_turn();

/// Holonomy from shear coordinates, by developing the triangulation along a
/// spanning tree of the refined graph. Throws DimensionMismatch when the
/// vector has the wrong size and DegenerateStructure if a boundary walk of the
/// spine evaluates to an elliptic element.
Representation build_rep(const Spine& spine, std::span<const double> shears);

/// Product of shear and turn matrices along a closed path of refined(); a
/// conjugate of the image of the path's word.
Isometry path_holonomy(const Spine& spine, std::span<const double> shears,
                       const EdgePath& refined_path);

/// Translation length of the image of w. Throws EmptyWord, ParabolicCurve, or
/// NotHyperbolic for elliptic images.
double curve_length(const Representation& r, const Word& w);

struct SanityReport {
  int depth = 0;
  std::size_t words_checked = 0;
  std::size_t parabolic = 0;
  std::vector<Word> elliptic;
  double min_length = 0.0;
};

/// Checks every cyclically reduced word up to `depth` (values below 1 are
/// treated as 1) for elliptic images and records the shortest translation length.
SanityReport discreteness_sanity(const Representation& r, int depth);

}  // namespace hypcube
