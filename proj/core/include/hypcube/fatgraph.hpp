#pragma once

#include <span>
#include <vector>

#include "hypcube/word.hpp"

namespace hypcube {

/// A closed edge path, stored as the cyclic sequence of half-edges it departs
/// through. Consecutive entries d, d' satisfy vertex(d') == vertex(opposite(d)).
using EdgePath = std::vector<int>;

/// General ribbon graph on half-edges 0..n-1: `next` is the counter-clockwise
/// rotation at each vertex and `opposite` the edge involution. Even ribbon
/// graphs convert into this form (endpoint ids become half-edge ids); capping
/// faces produces fatgraphs with odd valences, which is why the holonomy layer
/// works on this type.
class Fatgraph {
 public:
  Fatgraph() = default;
  Fatgraph(std::vector<int> next, std::vector<int> opposite);

  int half_edge_count() const { return static_cast<int>(next_.size()); }
  int edge_count() const { return half_edge_count() / 2; }
  int vertex_count() const { return vertex_count_; }
  int euler_characteristic() const { return vertex_count_ - edge_count(); }

  int next(int h) const { return next_[h]; }
  int prev(int h) const { return prev_[h]; }
  int opposite(int h) const { return opposite_[h]; }
  int vertex_of(int h) const { return vertex_[h]; }
  /// Canonical representative of the edge containing h.
  int edge_of(int h) const { return h < opposite_[h] ? h : opposite_[h]; }
  /// Half-edges at vertex v in counter-clockwise order, starting from the smallest id.
  std::span<const int> around(int v) const { return around_[v]; }
  int valence(int v) const { return static_cast<int>(around_[v].size()); }
  bool connected() const;

  /// Face traversal: depart through h, arrive at opposite(h), turn to the next
  /// half-edge counter-clockwise.
  int face_successor(int h) const { return next_[opposite_[h]]; }
  std::vector<EdgePath> faces() const;

  /// Throws InvalidParameter when `path` is not a closed path.
  void validate_path(const EdgePath& path) const;
  /// Cancels immediate backtracking (d followed by opposite(d)), cyclically.
  EdgePath reduce_path(const EdgePath& path) const;

  /// Removes an edge, returning the new fatgraph together with the map from
  /// old half-edge ids to new ones (-1 for the removed pair).
  Fatgraph without_edge(int h, std::vector<int>* renumber) const;

 private:
  std::vector<int> next_, prev_, opposite_, vertex_;
  std::vector<std::vector<int>> around_;
  int vertex_count_ = 0;
};

/// Spanning tree of a fatgraph, given by the canonical half-edge (edge_of) of
/// each tree edge, sorted.
struct SpanningTree {
  std::vector<int> edges;
};

/// Breadth-first tree from vertex 0, scanning half-edges in rotation order.
SpanningTree default_spanning_tree(const Fatgraph& g);

/// Throws InvalidTree unless `tree` is a spanning tree of g.
void validate_tree(const Fatgraph& g, const SpanningTree& tree);

/// Free generators of pi_1 relative to a spanning tree: the non-tree edges in
/// increasing canonical id, so x1 is the non-tree edge with the smallest id.
std::vector<int> generator_edges(const Fatgraph& g, const SpanningTree& tree);

/// Word of a closed path. Departing through the canonical half-edge of a
/// non-tree edge reads its generator, departing through the other side reads
/// the inverse. The result is cyclically reduced.
Word path_word(const Fatgraph& g, const SpanningTree& tree, const EdgePath& path);

}  // namespace hypcube
