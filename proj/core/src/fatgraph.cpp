#include "hypcube/fatgraph.hpp"

#include <algorithm>
#include <string>

#include "hypcube/error.hpp"

namespace hypcube {

Fatgraph::Fatgraph(std::vector<int> next, std::vector<int> opposite)
    : next_(std::move(next)), opposite_(std::move(opposite)) {
  const int n = static_cast<int>(next_.size());
  if (static_cast<int>(opposite_.size()) != n || n % 2 != 0)
    fail(ErrorCode::InvalidParameter, "fatgraph needs an even number of half-edges");
  prev_.assign(n, -1);
  for (int h = 0; h < n; ++h) {
    const int nh = next_[h];
    const int oh = opposite_[h];
    if (nh < 0 || nh >= n || prev_[nh] != -1)
      fail(ErrorCode::InvalidParameter, "rotation is not a permutation");
    prev_[nh] = h;
    if (oh < 0 || oh >= n || oh == h || opposite_[oh] != h)
      fail(ErrorCode::InvalidParameter, "edge map is not a fixed-point-free involution");
  }
  vertex_.assign(n, -1);
  for (int h = 0; h < n; ++h) {
    if (vertex_[h] != -1) continue;
    std::vector<int> cyc;
    int x = h;
    do {
      vertex_[x] = vertex_count_;
      cyc.push_back(x);
      x = next_[x];
    } while (x != h);
    around_.push_back(std::move(cyc));
    ++vertex_count_;
  }
}

bool Fatgraph::connected() const {
  if (vertex_count_ == 0) return true;
  std::vector<char> seen(vertex_count_, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int count = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int h : around_[v]) {
      int w = vertex_[opposite_[h]];
      if (!seen[w]) {
        seen[w] = 1;
        ++count;
        stack.push_back(w);
      }
    }
  }
  return count == vertex_count_;
}

std::vector<EdgePath> Fatgraph::faces() const {
  const int n = half_edge_count();
  std::vector<char> seen(n, 0);
  std::vector<EdgePath> out;
  for (int h = 0; h < n; ++h) {
    if (seen[h]) continue;
    EdgePath f;
    int x = h;
    while (!seen[x]) {
      seen[x] = 1;
      f.push_back(x);
      x = face_successor(x);
    }
    out.push_back(std::move(f));
  }
  return out;
}

void Fatgraph::validate_path(const EdgePath& path) const {
  if (path.empty()) fail(ErrorCode::InvalidParameter, "empty edge path");
  const int n = half_edge_count();
  for (std::size_t i = 0; i < path.size(); ++i) {
    const int d = path[i];
    const int nd = path[(i + 1) % path.size()];
    if (d < 0 || d >= n || nd < 0 || nd >= n)
      fail(ErrorCode::InvalidParameter, "half-edge id out of range in path");
    if (vertex_[opposite_[d]] != vertex_[nd])
      fail(ErrorCode::InvalidParameter,
           "path is not closed at step " + std::to_string(i));
  }
}

EdgePath Fatgraph::reduce_path(const EdgePath& path) const {
  EdgePath out;
  for (int d : path) {
    if (!out.empty() && out.back() == opposite_[d])
      out.pop_back();
    else
      out.push_back(d);
  }
  std::size_t lo = 0, hi = out.size();
  while (hi - lo >= 2 && out[hi - 1] == opposite_[out[lo]]) {
    ++lo;
    --hi;
  }
  return EdgePath(out.begin() + static_cast<long>(lo), out.begin() + static_cast<long>(hi));
}

Fatgraph Fatgraph::without_edge(int h, std::vector<int>* renumber) const {
  const int n = half_edge_count();
  const int g = opposite_[h];
  std::vector<int> map(n, -1);
  int k = 0;
  for (int x = 0; x < n; ++x)
    if (x != h && x != g) map[x] = k++;
  std::vector<int> next(k), opp(k);
  for (int x = 0; x < n; ++x) {
    if (map[x] < 0) continue;
    int y = next_[x];
    while (y == h || y == g) y = next_[y];
    next[map[x]] = map[y];
    opp[map[x]] = map[opposite_[x]];
  }
  if (renumber) *renumber = map;
  return Fatgraph(std::move(next), std::move(opp));
}


SpanningTree default_spanning_tree(const Fatgraph& g) {
  SpanningTree tree;
  if (g.vertex_count() == 0) return tree;
  std::vector<char> seen(g.vertex_count(), 0);
  std::vector<int> queue{0};
  seen[0] = 1;
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    for (int h : g.around(queue[qi])) {
      int w = g.vertex_of(g.opposite(h));
      if (seen[w]) continue;
      seen[w] = 1;
      tree.edges.push_back(g.edge_of(h));
      queue.push_back(w);
    }
  }
  std::sort(tree.edges.begin(), tree.edges.end());
  return tree;
}

void validate_tree(const Fatgraph& g, const SpanningTree& tree) {
  const int v = g.vertex_count();
  if (static_cast<int>(tree.edges.size()) != v - 1)
    fail(ErrorCode::InvalidTree, "a spanning tree needs " + std::to_string(v - 1) +
                                     " edges, got " + std::to_string(tree.edges.size()));
  std::vector<int> parent(v);
  for (int i = 0; i < v; ++i) parent[i] = i;
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (int e : tree.edges) {
    if (e < 0 || e >= g.half_edge_count() || g.edge_of(e) != e)
      fail(ErrorCode::InvalidTree, "tree edge " + std::to_string(e) + " is not a canonical edge id");
    int a = find(g.vertex_of(e)), b = find(g.vertex_of(g.opposite(e)));
    if (a == b) fail(ErrorCode::InvalidTree, "tree edges contain a cycle");
    parent[a] = b;
  }
}

std::vector<int> generator_edges(const Fatgraph& g, const SpanningTree& tree) {
  std::vector<int> out;
  for (int h = 0; h < g.half_edge_count(); ++h) {
    if (g.edge_of(h) != h) continue;
    if (!std::binary_search(tree.edges.begin(), tree.edges.end(), h)) out.push_back(h);
  }
  return out;
}

Word path_word(const Fatgraph& g, const SpanningTree& tree, const EdgePath& path) {
  const std::vector<int> gens = generator_edges(g, tree);
  std::vector<Letter> letters;
  for (int d : path) {
    const int e = g.edge_of(d);
    auto it = std::lower_bound(gens.begin(), gens.end(), e);
    if (it == gens.end() || *it != e) continue;
    letters.push_back({static_cast<int>(it - gens.begin()), d != e});
  }
  return Word(std::move(letters)).cyclically_reduced();
}

}  // namespace hypcube
