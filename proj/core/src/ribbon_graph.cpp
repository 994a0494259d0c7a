#include "hypcube/ribbon_graph.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "hypcube/error.hpp"

namespace hypcube {

EvenRibbonGraph EvenRibbonGraph::build(std::vector<int> strand_counts,
                                       const std::vector<std::pair<int, int>>& pairing) {
  if (strand_counts.empty()) fail(ErrorCode::InvalidParameter, "no vertices");
  EvenRibbonGraph g;
  g.offset_.push_back(0);
  for (int n : strand_counts) {
    if (n < 1) fail(ErrorCode::InvalidParameter, "strand counts must be positive");
    g.offset_.push_back(g.offset_.back() + n);
  }
  g.strands_ = std::move(strand_counts);
  const int total = 2 * g.offset_.back();
  g.sigma_.assign(total, -1);
  for (auto [a, b] : pairing) {
    if (a < 0 || a >= total || b < 0 || b >= total)
      fail(ErrorCode::InvalidParameter,
           "endpoint id out of range: " + std::to_string(a < 0 || a >= total ? a : b));
    if (a == b) fail(ErrorCode::FixedPointInPairing, g.label(a) + " is paired with itself");
    for (int x : {a, b})
      if (g.sigma_[x] != -1) fail(ErrorCode::DuplicateEndpoint, g.label(x) + " appears twice");
    g.sigma_[a] = b;
    g.sigma_[b] = a;
  }
  for (int x = 0; x < total; ++x)
    if (g.sigma_[x] == -1) fail(ErrorCode::UnpairedEndpoint, g.label(x) + " is not paired");
  return g;
}

int EvenRibbonGraph::endpoint(int i, int j, bool prime) const {
  if (j < 1 || j > vertex_count() || i < 1 || i > strands_[j - 1])
    fail(ErrorCode::InvalidParameter, "no endpoint a_{" + std::to_string(i) + "," +
                                          std::to_string(j) + "}");
  return 2 * (offset_[j - 1] + i - 1) + (prime ? 1 : 0);
}

int EvenRibbonGraph::vertex_of(int id) const {
  auto it = std::upper_bound(offset_.begin(), offset_.end(), id / 2);
  return static_cast<int>(it - offset_.begin()) - 1;
}

std::string EvenRibbonGraph::label(int id) const {
  const int j = vertex_of(id);
  const int i = id / 2 - offset_[j] + 1;
  return std::string(id % 2 ? "a'_{" : "a_{") + std::to_string(i) + "," + std::to_string(j + 1) +
         "}";
}

std::vector<std::pair<int, int>> EvenRibbonGraph::pairs() const {
  std::vector<std::pair<int, int>> out;
  for (int x = 0; x < endpoint_count(); ++x)
    if (x < sigma_[x]) out.emplace_back(x, sigma_[x]);
  return out;
}

Fatgraph EvenRibbonGraph::to_fatgraph() const {
  std::vector<int> next(endpoint_count());
  for (int j = 0; j < vertex_count(); ++j) {
    const int n = strands_[j];
    std::vector<int> order;
    for (int i = 0; i < n; ++i) order.push_back(2 * (offset_[j] + i));
    for (int i = 0; i < n; ++i) order.push_back(2 * (offset_[j] + i) + 1);
    for (int k = 0; k < 2 * n; ++k) next[order[k]] = order[(k + 1) % (2 * n)];
  }
  return Fatgraph(std::move(next), sigma_);
}

EvenRibbonGraph tau_graph(int k) {
  if (k < 1) fail(ErrorCode::InvalidParameter, "tau_k needs k >= 1");
  auto a = [](int i, int j) { return 2 * (3 * (j - 1) + i - 1); };
  auto ap = [&](int i, int j) { return a(i, j) + 1; };
  std::vector<std::pair<int, int>> pairs;
  for (int j = 1; j <= k; ++j) {
    pairs.emplace_back(a(2, j), ap(1, j));
    pairs.emplace_back(a(3, j), ap(2, j));
    pairs.emplace_back(a(1, j), ap(3, j % k + 1));
  }
  return EvenRibbonGraph::build(std::vector<int>(k, 3), pairs);
}

std::vector<CombinatorialCurve> extract_curves(const EvenRibbonGraph& g) {
  const int n = g.endpoint_count();
  std::vector<int> cycle_of(n, -1);
  std::vector<std::vector<int>> cycles;
  for (int h = 0; h < n; ++h) {
    if (cycle_of[h] != -1) continue;
    std::vector<int> c;
    int x = h;
    while (cycle_of[x] == -1) {
      cycle_of[x] = static_cast<int>(cycles.size());
      c.push_back(x);
      x = g.switch_map(g.pairing(x));
    }
    cycles.push_back(std::move(c));
  }
  std::vector<CombinatorialCurve> out;
  std::vector<char> reported(cycles.size(), 0);
  for (std::size_t ci = 0; ci < cycles.size(); ++ci) {
    if (reported[ci]) continue;
    reported[ci] = 1;
    reported[cycle_of[g.pairing(cycles[ci].front())]] = 1;
    CombinatorialCurve curve;
    curve.visits = cycles[ci];
    for (int x : curve.visits) curve.passages.push_back(g.vertex_of(x));
    out.push_back(std::move(curve));
  }
  return out;
}

long long combinatorial_self_intersection(const EvenRibbonGraph& g) {
  long long total = 0;
  for (int n : g.strand_counts()) total += static_cast<long long>(n) * (n - 1) / 2;
  return total;
}

BoundaryDecomposition boundary_walks(const EvenRibbonGraph& g) {
  const Fatgraph f = g.to_fatgraph();
  BoundaryDecomposition out;
  for (EdgePath& p : f.faces()) {
    BoundaryWalk w;
    w.side_count = static_cast<int>(p.size());
    w.steps = std::move(p);
    out.walks.push_back(std::move(w));
  }
  const int chi = g.euler_characteristic();
  const int b = static_cast<int>(out.walks.size());
  out.surface = {chi, (2 - chi - b) / 2, b};
  return out;
}

namespace {

std::vector<int> checked_caps(int walk_count, const GluingSpec& spec) {
  std::set<int> seen;
  for (int i : spec.capped) {
    if (i < 0 || i >= walk_count)
      fail(ErrorCode::InvalidGluing, "no boundary walk with index " + std::to_string(i));
    if (!seen.insert(i).second)
      fail(ErrorCode::InvalidGluing, "walk " + std::to_string(i) + " capped twice");
  }
  return spec.capped;
}

}  // namespace

FaceReport check_gluing(const EvenRibbonGraph& g, const GluingSpec& spec) {
  const BoundaryDecomposition walks = boundary_walks(g);
  FaceReport report;
  for (int i : checked_caps(static_cast<int>(walks.walks.size()), spec)) {
    const int sides = walks.walks[i].side_count;
    report.capped_faces.emplace_back(i, sides);
    report.has_monogon |= sides == 1;
    report.has_bigon |= sides == 2;
    report.has_triangle |= sides == 3;
  }
  return report;
}

CurveSystem curve_system(const EvenRibbonGraph& g) {
  CurveSystem sys{g.to_fatgraph(), {}};
  for (auto& c : extract_curves(g)) sys.curves.push_back(c.visits);
  return sys;
}

CurveSystem fill_faces(const EvenRibbonGraph& g, const GluingSpec& spec) {
  CurveSystem sys = curve_system(g);
  std::vector<EdgePath> faces = sys.graph.faces();
  const std::vector<int> caps = checked_caps(static_cast<int>(faces.size()), spec);
  std::vector<char> capped(faces.size(), 0);
  for (int i : caps) capped[i] = 1;

  for (int ci : caps) {
    const Fatgraph& f = sys.graph;
    std::vector<int> face_of(f.half_edge_count(), -1);
    for (std::size_t i = 0; i < faces.size(); ++i)
      for (int h : faces[i]) face_of[h] = static_cast<int>(i);
    const EdgePath& walk = faces[ci];
    const int m = static_cast<int>(walk.size());
    int k = -1;
    for (int i = 0; i < m && k < 0; ++i)
      if (!capped[face_of[f.opposite(walk[i])]]) k = i;
    if (k < 0)
      fail(ErrorCode::InvalidGluing,
           "capped walk " + std::to_string(ci) + " has no edge shared with an uncapped walk");

    const int h = walk[k];
    EdgePath forward, backward;
    for (int s = 1; s < m; ++s) forward.push_back(walk[(k + s) % m]);
    for (int s = m - 1; s >= 1; --s) backward.push_back(f.opposite(walk[(k + s) % m]));

    std::vector<int> renumber;
    Fatgraph next = f.without_edge(h, &renumber);
    for (EdgePath& path : sys.curves) {
      EdgePath rerouted;
      for (int d : path) {
        const EdgePath* detour = d == h ? &backward : d == f.opposite(h) ? &forward : nullptr;
        if (!detour) {
          rerouted.push_back(d);
          continue;
        }
        rerouted.insert(rerouted.end(), detour->begin(), detour->end());
      }
      for (int& d : rerouted) d = renumber[d];
      path = next.reduce_path(rerouted);
    }

    // Track every walk index through the renumbering; the capped walk and its
    // neighbour become one uncapped walk.
    std::vector<int> new_face_of(next.half_edge_count(), -1);
    std::vector<EdgePath> new_faces = next.faces();
    for (std::size_t i = 0; i < new_faces.size(); ++i)
      for (int d : new_faces[i]) new_face_of[d] = static_cast<int>(i);
    const int other = face_of[f.opposite(h)];
    const int merged_seed = m > 1 ? renumber[forward.front()] : -1;
    for (std::size_t i = 0; i < faces.size(); ++i) {
      int seed = -1;
      for (int d : faces[i])
        if (renumber[d] >= 0) seed = renumber[d];
      if (static_cast<int>(i) == ci || static_cast<int>(i) == other) seed = merged_seed >= 0 ? merged_seed : seed;
      faces[i] = seed >= 0 ? new_faces[new_face_of[seed]] : EdgePath{};
    }
    capped[ci] = 0;
    sys.graph = std::move(next);
  }
  return sys;
}

std::vector<Word> curve_words(const EvenRibbonGraph& g, const SpanningTree& tree) {
  const Fatgraph f = g.to_fatgraph();
  validate_tree(f, tree);
  std::vector<Word> out;
  for (auto& c : extract_curves(g)) out.push_back(path_word(f, tree, c.visits));
  return out;
}

}  // namespace hypcube
