#pragma once

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "hypcube/error.hpp"
#include "hypcube/ribbon_graph.hpp"

namespace fixtures {

inline std::string data(const std::string& name) { return std::string(HYPCUBE_DATA_DIR) + "/" + name; }

inline hypcube::EvenRibbonGraph loop_graph() { return hypcube::EvenRibbonGraph::build({1}, {{0, 1}}); }

/// a_1 - a'_2, a_2 - a'_1 on one star with two strands.
inline hypcube::EvenRibbonGraph figure_eight_graph() {
  return hypcube::EvenRibbonGraph::build({2}, {{0, 3}, {2, 1}});
}

/// a_1 - a'_1, a_2 - a'_2: the one-vertex spine of the punctured torus.
inline hypcube::EvenRibbonGraph torus_graph() { return hypcube::EvenRibbonGraph::build({2}, {{0, 1}, {2, 3}}); }

/// One star with three strands whose walk 0 has three sides.
inline hypcube::EvenRibbonGraph triangle_graph() {
  return hypcube::EvenRibbonGraph::build({3}, {{0, 2}, {1, 4}, {3, 5}});
}

/// Random fixed-point-free pairing on the endpoints of the given stars.
inline hypcube::EvenRibbonGraph random_graph(const std::vector<int>& strands, std::mt19937_64& rng) {
  int total = 0;
  for (int s : strands) total += 2 * s;
  std::vector<int> ids(total);
  for (int i = 0; i < total; ++i) ids[i] = i;
  std::shuffle(ids.begin(), ids.end(), rng);
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < total; i += 2) pairs.emplace_back(ids[i], ids[i + 1]);
  return hypcube::EvenRibbonGraph::build(strands, pairs);
}

/// 2n sorted distinct angles in [0, 2pi) with gaps above `min_gap`.
inline std::vector<double> random_angles(int n, std::mt19937_64& rng, double min_gap = 1e-3) {
  std::uniform_real_distribution<double> u(0.0, 2.0 * std::numbers::pi);
  for (;;) {
    std::vector<double> t(2 * n);
    for (double& x : t) x = u(rng);
    std::sort(t.begin(), t.end());
    bool ok = t.front() + 2.0 * std::numbers::pi - t.back() > min_gap;
    for (int i = 1; i < 2 * n; ++i) ok = ok && t[i] - t[i - 1] > min_gap;
    if (ok) return t;
  }
}

template <class F>
hypcube::ErrorCode error_code_of(F&& f) {
  try {
    f();
  } catch (const hypcube::Error& e) {
    return e.code();
  }
  throw std::runtime_error("expected a hypcube::Error");
}

}  // namespace fixtures
