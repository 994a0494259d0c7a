#include "hypcube/holonomy.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "hypcube/error.hpp"

namespace hypcube {

namespace {

const Isometry kTurn{0.0, -1.0, 1.0, 1.0};
const Isometry kTurn2 = kTurn * kTurn;
const Isometry kStraight{0.0, 1.0, -1.0, 0.0};

}  // namespace

Isometry shear_matrix(double s) { return {0.0, std::exp(s / 2), -std::exp(-s / 2), 0.0}; }

Isometry left_turn() { return kTurn; }

Spine::Spine(Fatgraph graph) : graph_(std::move(graph)) {
  tree_ = default_spanning_tree(graph_);
  build();
}

Spine::Spine(Fatgraph graph, SpanningTree tree) : graph_(std::move(graph)), tree_(std::move(tree)) {
  build();
}

void Spine::build() {
  if (!graph_.connected()) fail(ErrorCode::DegenerateStructure, "spine graph is disconnected");
  validate_tree(graph_, tree_);
  generators_ = hypcube::generator_edges(graph_, tree_);

  const int n = graph_.half_edge_count();
  int extra = 0;
  annulus_ = true;
  for (int v = 0; v < graph_.vertex_count(); ++v) {
    const int m = graph_.valence(v);
    if (m < 2)
      fail(ErrorCode::DegenerateStructure,
           "spine vertex " + std::to_string(v) + " has valence " + std::to_string(m));
    if (m != 2) annulus_ = false;
    if (m > 3) extra += 2 * (m - 3);
  }

  std::vector<int> next(n + extra), opposite(n + extra);
  for (int h = 0; h < n; ++h) opposite[h] = graph_.opposite(h);
  int fresh = n;
  for (int v = 0; v < graph_.vertex_count(); ++v) {
    const auto order = graph_.around(v);
    const int m = static_cast<int>(order.size());
    if (m <= 3) {
      for (int k = 0; k < m; ++k) next[order[k]] = order[(k + 1) % m];
      continue;
    }
    std::vector<int> ep(m - 3), eq(m - 3);
    for (int k = 0; k < m - 3; ++k) {
      ep[k] = fresh++;
      eq[k] = fresh++;
      opposite[ep[k]] = eq[k];
      opposite[eq[k]] = ep[k];
    }
    auto triangle = [&](int x, int y, int z) {
      next[x] = y;
      next[y] = z;
      next[z] = x;
    };
    triangle(order[0], order[1], ep[0]);
    for (int k = 1; k < m - 3; ++k) triangle(eq[k - 1], order[k + 1], ep[k]);
    triangle(eq[m - 4], order[m - 2], order[m - 1]);
  }
  refined_ = Fatgraph(std::move(next), std::move(opposite));

  // Chains of edges through valence-2 vertices share one shear.
  const int total = refined_.half_edge_count();
  std::vector<int> parent(total);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (int v = 0; v < refined_.vertex_count(); ++v) {
    if (refined_.valence(v) != 2) continue;
    const auto hs = refined_.around(v);
    int a = find(refined_.edge_of(hs[0])), b = find(refined_.edge_of(hs[1]));
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  slot_.assign(total, -1);
  std::vector<int> slot_of_root(total, -1);
  for (int h = 0; h < total; ++h) {
    if (refined_.edge_of(h) != h) continue;
    const int root = find(h);
    if (slot_of_root[root] == -1) {
      slot_of_root[root] = slot_count_++;
      slot_[h] = slot_of_root[root];
    }
  }
}

Word Spine::word(const EdgePath& path) const {
  graph_.validate_path(path);
  return path_word(graph_, tree_, path);
}

EdgePath Spine::refine_path(const EdgePath& path) const {
  graph_.validate_path(path);
  const int n = graph_.half_edge_count();
  EdgePath out;
  for (std::size_t i = 0; i < path.size(); ++i) {
    out.push_back(path[i]);
    const int arrival = refined_.opposite(path[i]);
    const int target = refined_.vertex_of(path[(i + 1) % path.size()]);
    const int start = refined_.vertex_of(arrival);
    if (start == target) continue;
    // Search the caterpillar through new edges only.
    std::vector<int> via(refined_.vertex_count(), -2);
    std::vector<int> queue{start};
    via[start] = -1;
    for (std::size_t qi = 0; qi < queue.size() && via[target] == -2; ++qi) {
      for (int h : refined_.around(queue[qi])) {
        if (h < n) continue;
        const int w = refined_.vertex_of(refined_.opposite(h));
        if (via[w] != -2) continue;
        via[w] = h;
        queue.push_back(w);
      }
    }
    EdgePath steps;
    for (int w = target; via[w] >= 0; w = refined_.vertex_of(via[w])) steps.push_back(via[w]);
    out.insert(out.end(), steps.rbegin(), steps.rend());
  }
  return out;
}

Isometry Representation::evaluate(const Word& w) const {
  Isometry m;
  for (const Letter& l : w.letters()) {
    if (l.gen < 0 || l.gen >= rank())
      fail(ErrorCode::InvalidParameter, "word uses generator x" + std::to_string(l.gen + 1) +
                                            " but the rank is " + std::to_string(rank()));
    m = m * (l.inverse ? gens_[l.gen].inverse() : gens_[l.gen]);
  }
  return m;
}

namespace {

void check_dimension(const Spine& spine, std::span<const double> shears) {
  if (static_cast<int>(shears.size()) != spine.shear_dimension())
    fail(ErrorCode::DimensionMismatch, "spine needs " + std::to_string(spine.shear_dimension()) +
                                           " shears, got " + std::to_string(shears.size()));
  for (double s : shears)
    if (!std::isfinite(s)) fail(ErrorCode::InvalidParameter, "shear values must be finite");
}

double shear_of(const Spine& spine, std::span<const double> shears, int h) {
  const int slot = spine.shear_slot(h);
  return slot >= 0 ? shears[slot] : 0.0;
}

}  // namespace

Representation build_rep(const Spine& spine, std::span<const double> shears) {
  check_dimension(spine, shears);
  if (spine.is_annulus()) {
    const double s = shears[0];
    return Representation({Isometry(std::exp(s / 2), 1.0, 0.0, std::exp(-s / 2))});
  }

  const Fatgraph& r = spine.refined();
  const int n = spine.graph().half_edge_count();
  const auto& tree = spine.tree().edges;
  auto crossable = [&](int h) {
    const int e = r.edge_of(h);
    return e >= n || std::binary_search(tree.begin(), tree.end(), e);
  };

  std::vector<Isometry> state(r.half_edge_count());
  std::vector<char> seen(r.half_edge_count(), 0);
  std::vector<int> queue{0};
  seen[0] = 1;
  auto visit = [&](int h, const Isometry& m) {
    if (seen[h]) return;
    seen[h] = 1;
    state[h] = m;
    queue.push_back(h);
  };
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    const int h = queue[qi];
    if (r.valence(r.vertex_of(h)) == 3) {
      visit(r.next(h), state[h] * kTurn);
      visit(r.next(r.next(h)), state[h] * kTurn2);
    } else {
      visit(r.next(h), state[h] * kStraight);
    }
    if (crossable(h)) visit(r.opposite(h), state[h] * shear_matrix(shear_of(spine, shears, h)));
  }

  std::vector<Isometry> gens;
  for (int e : spine.generator_edges())
    gens.push_back(state[e] * shear_matrix(shear_of(spine, shears, e)) *
                   state[r.opposite(e)].inverse());
  Representation rep(std::move(gens));

  for (const EdgePath& face : spine.graph().faces()) {
    const Word w = spine.word(face);
    if (w.empty()) continue;
    if (classify_isometry(rep.evaluate(w)) == IsometryType::Elliptic)
      fail(ErrorCode::DegenerateStructure, "boundary walk " + w.to_string() + " is elliptic");
  }
  return rep;
}

Isometry path_holonomy(const Spine& spine, std::span<const double> shears,
                       const EdgePath& refined_path) {
  check_dimension(spine, shears);
  if (spine.is_annulus())
    fail(ErrorCode::InvalidParameter, "the annulus spine carries no triangulation");
  const Fatgraph& r = spine.refined();
  r.validate_path(refined_path);
  Isometry m;
  for (std::size_t i = 0; i < refined_path.size(); ++i) {
    const int d = refined_path[i];
    const int a = r.opposite(d);
    const int nd = refined_path[(i + 1) % refined_path.size()];
    m = m * shear_matrix(shear_of(spine, shears, d));
    if (r.valence(r.vertex_of(a)) == 3 && nd == r.next(a))
      m = m * kTurn;
    else if (r.valence(r.vertex_of(a)) == 3 && nd == r.next(r.next(a)))
      m = m * kTurn2;
    else if (r.valence(r.vertex_of(a)) == 2 && nd == r.next(a))
      m = m * kStraight;
    else
      fail(ErrorCode::InvalidParameter, "path backtracks at step " + std::to_string(i));
  }
  return m;
}

double curve_length(const Representation& r, const Word& w) {
  if (w.empty()) fail(ErrorCode::EmptyWord, "curve word is empty");
  const Isometry m = r.evaluate(w);
  if (classify_isometry(m) == IsometryType::Parabolic)
    fail(ErrorCode::ParabolicCurve, "curve " + w.to_string() + " is parabolic");
  return translation_length(m);
}

SanityReport discreteness_sanity(const Representation& r, int depth) {
  SanityReport report;
  report.depth = std::max(1, depth);
  report.min_length = std::numeric_limits<double>::infinity();
  for (const Word& w : cyclically_reduced_words(r.rank(), report.depth)) {
    ++report.words_checked;
    const Isometry m = r.evaluate(w);
    switch (classify_isometry(m)) {
      case IsometryType::Elliptic: report.elliptic.push_back(w); break;
      case IsometryType::Parabolic: ++report.parabolic; break;
      case IsometryType::Hyperbolic:
        report.min_length = std::min(report.min_length, translation_length(m));
        break;
    }
  }
  return report;
}

}  // namespace hypcube
