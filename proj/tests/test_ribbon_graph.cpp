#include <doctest.h>

#include <set>

#include "fixtures.hpp"
#include "hypcube/ribbon_graph.hpp"

using namespace hypcube;

namespace {

/// Position-based rotation: a_1..a_n then a'_1..a'_n around each star.
std::vector<int> rotation_oracle(const std::vector<int>& strands) {
  std::vector<int> next;
  int offset = 0;
  for (int n : strands) {
    std::vector<int> order;
    for (int i = 0; i < n; ++i) order.push_back(2 * (offset + i));
    for (int i = 0; i < n; ++i) order.push_back(2 * (offset + i) + 1);
    next.resize(next.size() + 2 * n);
    for (int p = 0; p < 2 * n; ++p) next[order[p]] = order[(p + 1) % (2 * n)];
    offset += n;
  }
  return next;
}

std::vector<std::vector<int>> cycles_of(const std::vector<int>& perm) {
  std::vector<std::vector<int>> out;
  std::vector<bool> seen(perm.size());
  for (std::size_t s = 0; s < perm.size(); ++s) {
    if (seen[s]) continue;
    std::vector<int> c;
    for (int x = static_cast<int>(s); !seen[x]; x = perm[x]) {
      seen[x] = true;
      c.push_back(x);
    }
    out.push_back(c);
  }
  return out;
}

std::vector<int> sigma_of(const EvenRibbonGraph& g) {
  std::vector<int> s(g.endpoint_count());
  for (int i = 0; i < g.endpoint_count(); ++i) s[i] = g.pairing(i);
  return s;
}

/// Curves counted as unoriented cycles of d -> pairing(d) ^ 1.
int curve_count_oracle(const EvenRibbonGraph& g) {
  const auto sigma = sigma_of(g);
  std::vector<int> p(sigma.size());
  for (std::size_t d = 0; d < p.size(); ++d) p[d] = sigma[d] ^ 1;
  const auto cycles = cycles_of(p);
  int self_reverse = 0;
  for (const auto& c : cycles) {
    std::set<int> cs(c.begin(), c.end()), image;
    for (int d : c) image.insert(sigma[d]);
    self_reverse += cs == image;
  }
  return (static_cast<int>(cycles.size()) + self_reverse) / 2;
}

std::multiset<int> walk_sizes_oracle(const EvenRibbonGraph& g) {
  const auto next = rotation_oracle(g.strand_counts());
  const auto sigma = sigma_of(g);
  std::vector<int> face(sigma.size());
  for (std::size_t h = 0; h < face.size(); ++h) face[h] = next[sigma[h]];
  std::multiset<int> sizes;
  for (const auto& c : cycles_of(face)) sizes.insert(static_cast<int>(c.size()));
  return sizes;
}

std::multiset<int> side_counts(const BoundaryDecomposition& d) {
  std::multiset<int> s;
  for (const auto& w : d.walks) s.insert(w.side_count);
  return s;
}

}  // namespace

TEST_CASE("malformed pairings are rejected with their codes") {
  using fixtures::error_code_of;
  CHECK(error_code_of([] { EvenRibbonGraph::build({1}, {{0, 0}}); }) == ErrorCode::FixedPointInPairing);
  CHECK(error_code_of([] { EvenRibbonGraph::build({2}, {{0, 1}, {0, 2}}); }) == ErrorCode::DuplicateEndpoint);
  CHECK(error_code_of([] { EvenRibbonGraph::build({2}, {{0, 1}}); }) == ErrorCode::UnpairedEndpoint);
  CHECK(error_code_of([] { EvenRibbonGraph::build({1}, {{0, 7}}); }) == ErrorCode::InvalidParameter);
  CHECK(error_code_of([] { EvenRibbonGraph::build({0}, {}); }) == ErrorCode::InvalidParameter);
  CHECK(error_code_of([] { EvenRibbonGraph::build({}, {}); }) == ErrorCode::InvalidParameter);
  CHECK(error_code_of([] { tau_graph(0); }) == ErrorCode::InvalidParameter);
}

TEST_CASE("endpoint ids and labels") {
  const auto g = EvenRibbonGraph::build({2, 1}, {{0, 5}, {1, 2}, {3, 4}});
  CHECK(g.endpoint(1, 1, false) == 0);
  CHECK(g.endpoint(2, 1, true) == 3);
  CHECK(g.endpoint(1, 2, false) == 4);
  CHECK(g.label(3) == "a'_{2,1}");
  CHECK(g.label(4) == "a_{1,2}");
  CHECK(g.vertex_of(5) == 1);
  for (int d = 0; d < g.endpoint_count(); ++d) {
    CHECK(g.pairing(g.pairing(d)) == d);
    CHECK(g.switch_map(g.switch_map(d)) == d);
  }
}

TEST_CASE("tau_k has k vertices, 3k edges and Euler characteristic -2k") {
  for (int k = 1; k <= 8; ++k) {
    const auto g = tau_graph(k);
    CHECK(g.vertex_count() == k);
    CHECK(g.edge_count() == 3 * k);
    CHECK(g.euler_characteristic() == -2 * k);
    CHECK(combinatorial_self_intersection(g) == 3 * k);
    CHECK(g.to_fatgraph().connected());
  }
}

TEST_CASE("curve extraction agrees with a cycle count on random graphs") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<int> strands;
    const int v = 1 + static_cast<int>(rng() % 3);
    for (int j = 0; j < v; ++j) strands.push_back(1 + static_cast<int>(rng() % 4));
    const auto g = fixtures::random_graph(strands, rng);
    const auto curves = extract_curves(g);
    CHECK(static_cast<int>(curves.size()) == curve_count_oracle(g));
    std::size_t visits = 0;
    for (const auto& c : curves) {
      visits += c.visits.size();
      REQUIRE(c.passages.size() == c.visits.size());
      for (std::size_t i = 0; i < c.visits.size(); ++i) {
        CHECK(g.switch_map(g.pairing(c.visits[i])) == c.visits[(i + 1) % c.visits.size()]);
        CHECK(c.passages[i] == g.vertex_of(c.visits[i]));
      }
    }
    CHECK(2 * visits == static_cast<std::size_t>(g.endpoint_count()));
    long long si = 0;
    for (int n : strands) si += n * (n - 1) / 2;
    CHECK(combinatorial_self_intersection(g) == si);
  }
}

TEST_CASE("boundary walks agree with a face permutation oracle") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<int> strands;
    const int v = 1 + static_cast<int>(rng() % 3);
    for (int j = 0; j < v; ++j) strands.push_back(1 + static_cast<int>(rng() % 4));
    const auto g = fixtures::random_graph(strands, rng);
    if (!g.to_fatgraph().connected()) continue;
    const auto d = boundary_walks(g);
    CHECK(side_counts(d) == walk_sizes_oracle(g));
    const int b = static_cast<int>(d.walks.size());
    CHECK(d.surface.boundary_count == b);
    CHECK(d.surface.euler_characteristic == g.euler_characteristic());
    CHECK(2 - 2 * d.surface.genus - b == g.euler_characteristic());
  }
}

TEST_CASE("hand-computed surfaces") {
  SUBCASE("figure-eight") {
    const auto d = boundary_walks(fixtures::figure_eight_graph());
    CHECK(side_counts(d) == std::multiset<int>{1, 1, 2});
    CHECK(d.surface.euler_characteristic == -1);
    CHECK(d.surface.genus == 0);
    CHECK(d.surface.boundary_count == 3);
  }
  SUBCASE("punctured torus") {
    const auto d = boundary_walks(fixtures::torus_graph());
    CHECK(d.surface.genus == 1);
    CHECK(d.surface.boundary_count == 1);
  }
  SUBCASE("tau_1") {
    const auto d = boundary_walks(tau_graph(1));
    CHECK(side_counts(d) == std::multiset<int>{1, 5});
    CHECK(d.surface.genus == 1);
    CHECK(d.surface.boundary_count == 2);
  }
  SUBCASE("tau_6") {
    const auto d = boundary_walks(tau_graph(6));
    CHECK(side_counts(d) == std::multiset<int>{6, 30});
    CHECK(d.surface.genus == 6);
    CHECK(d.surface.boundary_count == 2);
    CHECK(extract_curves(tau_graph(6)).size() == 1);
  }
}

TEST_CASE("gluing checks") {
  using fixtures::error_code_of;
  const auto tri = fixtures::triangle_graph();
  const auto walks = boundary_walks(tri);
  REQUIRE(walks.walks[0].side_count == 3);
  auto r = check_gluing(tri, {{0}});
  CHECK(r.has_triangle);
  CHECK_FALSE(r.has_monogon);
  CHECK_FALSE(r.pass());
  CHECK(check_gluing(tri, {}).pass());

  const auto fig = fixtures::figure_eight_graph();
  const auto fw = boundary_walks(fig);
  for (std::size_t i = 0; i < fw.walks.size(); ++i) {
    const auto rep = check_gluing(fig, {{static_cast<int>(i)}});
    CHECK(rep.has_monogon == (fw.walks[i].side_count == 1));
    CHECK(rep.has_bigon == (fw.walks[i].side_count == 2));
  }

  const auto t6 = tau_graph(6);
  CHECK(check_gluing(t6, {{0, 1}}).pass());
  CHECK(error_code_of([&] { fill_faces(t6, {{0, 1}}); }) == ErrorCode::InvalidGluing);
  CHECK(error_code_of([&] { check_gluing(t6, {{2}}); }) == ErrorCode::InvalidGluing);
  CHECK(error_code_of([&] { check_gluing(t6, {{0, 0}}); }) == ErrorCode::InvalidGluing);
}

TEST_CASE("filled faces lower the boundary count") {
  const auto tri = fixtures::triangle_graph();
  const auto sys = fill_faces(tri, {{0}});
  CHECK(sys.graph.faces().size() + 1 == boundary_walks(tri).walks.size());
  CHECK(sys.graph.euler_characteristic() == tri.euler_characteristic() + 1);
  for (const auto& c : sys.curves) CHECK_NOTHROW(sys.graph.validate_path(c));
}

TEST_CASE("curve words") {
  SUBCASE("figure-eight") {
    const auto g = fixtures::figure_eight_graph();
    const auto fg = g.to_fatgraph();
    const auto words = curve_words(g, default_spanning_tree(fg));
    REQUIRE(words.size() == 1);
    CHECK(words[0] == Word::parse("x1 x2^-1"));
  }
  SUBCASE("tau_1") {
    const auto g = tau_graph(1);
    const auto words = curve_words(g, default_spanning_tree(g.to_fatgraph()));
    REQUIRE(words.size() == 1);
    CHECK(words[0] == Word::parse("x1 x3^-1 x2^-1"));
  }
  SUBCASE("random graphs give cyclically reduced nontrivial words") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 100; ++trial) {
      const auto g = fixtures::random_graph({2, 3}, rng);
      const auto fg = g.to_fatgraph();
      if (!fg.connected()) continue;
      const auto tree = default_spanning_tree(fg);
      const auto gens = generator_edges(fg, tree);
      CHECK(static_cast<int>(gens.size()) == 1 - fg.euler_characteristic());
      for (const auto& w : curve_words(g, tree)) {
        CHECK_FALSE(w.empty());
        CHECK(w.is_cyclically_reduced());
        CHECK(w.max_generator() <= static_cast<int>(gens.size()));
      }
    }
  }
}

TEST_CASE("invalid spanning trees") {
  using fixtures::error_code_of;
  const auto fg = tau_graph(2).to_fatgraph();
  CHECK(error_code_of([&] { validate_tree(fg, SpanningTree{}); }) == ErrorCode::InvalidTree);
  const auto one = fixtures::torus_graph().to_fatgraph();
  CHECK(error_code_of([&] { validate_tree(one, SpanningTree{{0}}); }) == ErrorCode::InvalidTree);
  CHECK(error_code_of([&] { curve_words(tau_graph(2), SpanningTree{{0, 2}}); }) == ErrorCode::InvalidTree);
  CHECK_NOTHROW(validate_tree(fg, default_spanning_tree(fg)));
}
