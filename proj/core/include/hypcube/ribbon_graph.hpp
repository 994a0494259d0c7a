#pragma once

#include <string>
#include <utility>
#include <vector>

#include "hypcube/fatgraph.hpp"
#include "hypcube/word.hpp"

namespace hypcube {

/// Even ribbon graph built from stars. Vertex j (0-based) carries n_j strands;
/// strand i (1-based) has endpoints a_{i,j} and a'_{i,j}, listed around the
/// vertex counter-clockwise as a_{1,j}, ..., a_{n,j}, a'_{1,j}, ..., a'_{n,j}.
///
/// Endpoint ids: with offset_j = n_0 + ... + n_{j-1},
///   id(a_{i,j})  = 2 * (offset_j + i - 1)
///   id(a'_{i,j}) = 2 * (offset_j + i - 1) + 1
/// so the switch map is id ^ 1.
class EvenRibbonGraph {
 public:
  EvenRibbonGraph() = default;

  /// Validates and builds. Throws DuplicateEndpoint, FixedPointInPairing or
  /// UnpairedEndpoint on malformed pairings, InvalidParameter on bad counts or ids.
  static EvenRibbonGraph build(std::vector<int> strand_counts,
                               const std::vector<std::pair<int, int>>& pairing);

  const std::vector<int>& strand_counts() const { return strands_; }
  int endpoint_count() const { return static_cast<int>(sigma_.size()); }
  int vertex_count() const { return static_cast<int>(strands_.size()); }
  int edge_count() const { return endpoint_count() / 2; }
  int euler_characteristic() const { return vertex_count() - edge_count(); }

  /// Endpoint id of a_{i,j} (prime = false) or a'_{i,j}; i and j are 1-based.
  int endpoint(int i, int j, bool prime) const;
  /// "a_{i,j}" or "a'_{i,j}", 1-based.
  std::string label(int id) const;
  int vertex_of(int id) const;

  int switch_map(int id) const { return id ^ 1; }
  int pairing(int id) const { return sigma_[id]; }
  /// Unordered pairs (smaller id first), sorted.
  std::vector<std::pair<int, int>> pairs() const;

  /// Same graph as a fatgraph: endpoint ids become half-edge ids, the star's
  /// cyclic order gives the rotation and the pairing gives the edges.
  Fatgraph to_fatgraph() const;

 private:
  std::vector<int> strands_;
  std::vector<int> offset_;
  std::vector<int> sigma_;
};

/// tau_k: k vertices with three strands each, paired by
///   a_{2,j} - a'_{1,j},  a_{3,j} - a'_{2,j},  a_{1,j} - a'_{3,j+1}
/// with a_{1,k} - a'_{3,1} closing the cycle. Throws InvalidParameter for k < 1.
EvenRibbonGraph tau_graph(int k);

/// A cycle of d -> switch(pairing(d)): the endpoints the curve departs through,
/// one per strand traversal.
struct CombinatorialCurve {
  std::vector<int> visits;
  /// Vertex of each visit; the curve goes straight through these vertices.
  std::vector<int> passages;
};

/// One curve per unoriented cycle. Each reported cycle contains the smallest id
/// of its orbit pair and starts there; curves are sorted by that id.
std::vector<CombinatorialCurve> extract_curves(const EvenRibbonGraph& g);

/// Sum over vertices of C(n_j, 2).
long long combinatorial_self_intersection(const EvenRibbonGraph& g);

struct BoundaryWalk {
  /// Endpoint ids departed through, in traversal order.
  std::vector<int> steps;
  int side_count = 0;
};

struct SurfaceInvariants {
  int euler_characteristic = 0;
  int genus = 0;
  int boundary_count = 0;
};

struct BoundaryDecomposition {
  std::vector<BoundaryWalk> walks;
  SurfaceInvariants surface;
};

/// Face traversal h -> rotation(pairing(h)). Walks are ordered by smallest id.
BoundaryDecomposition boundary_walks(const EvenRibbonGraph& g);

struct GluingSpec {
  std::vector<int> capped;
};

struct FaceReport {
  /// (walk index, side count) for each capped face, in the order given.
  std::vector<std::pair<int, int>> capped_faces;
  bool has_monogon = false;
  bool has_bigon = false;
  bool has_triangle = false;
  bool pass() const { return !has_monogon && !has_bigon && !has_triangle; }
};

/// Flags small disk faces. Only capped walks count; the rest are boundary.
/// Throws InvalidGluing on an out-of-range or repeated index.
FaceReport check_gluing(const EvenRibbonGraph& g, const GluingSpec& spec);

/// Closed curves on a surface given by a spine fatgraph.
struct CurveSystem {
  Fatgraph graph;
  std::vector<EdgePath> curves;
};

/// The curves of g on the surface with boundary associated to g.
CurveSystem curve_system(const EvenRibbonGraph& g);

/// The curves of g on the surface obtained by gluing a disk to each capped
/// walk. Each disk is absorbed into the spine by deleting one edge of its walk
/// whose other side lies on an uncapped walk; curve paths crossing the deleted
/// edge are rerouted around the rest of the walk and reduced. Throws
/// InvalidGluing when no such edge exists.
CurveSystem fill_faces(const EvenRibbonGraph& g, const GluingSpec& spec);

/// Curves of g as cyclically reduced words in the generators of `tree`
/// (see generator_edges). Throws InvalidTree.
std::vector<Word> curve_words(const EvenRibbonGraph& g, const SpanningTree& tree);

}  // namespace hypcube
