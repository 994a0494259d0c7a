#include <doctest.h>

#include <set>

#include "fixtures.hpp"
#include "hypcube/dual_cube.hpp"
#include "hypcube/ribbon_graph.hpp"

using namespace hypcube;

namespace {

LiftSet lifts_for(const CurveSystem& sys, int L, std::mt19937_64* rng = nullptr) {
  const Spine s(sys.graph);
  ShearVector sh(s.shear_dimension(), 0.0);
  if (rng) {
    std::uniform_real_distribution<double> u(-3.0, 3.0);
    for (double& x : sh) x = u(*rng);
  }
  std::vector<Word> words;
  for (const auto& c : sys.curves) words.push_back(s.word(c));
  return enumerate_lifts(build_rep(s, sh), words, L);
}

LiftSet lifts_for(const EvenRibbonGraph& g, int L, std::mt19937_64* rng = nullptr) {
  return lifts_for(curve_system(g), L, rng);
}

std::vector<Cube> used_cubes(const CubeReport& r) {
  std::vector<Cube> out;
  for (const auto& c : r.cubes)
    if (!r.classes[c.orbit_class].truncated && c.dimension() >= 2) out.push_back(c);
  return out;
}

bool well_separated(const Geodesic& a, const Geodesic& b) {
  const IdealPoint p[4] = {a.u, a.v, b.u, b.v};
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      if (angular_distance(p[i], p[j]) < 1e-6) return false;
  return true;
}

}  // namespace

TEST_CASE("lift tags are distinct coset minima") {
  const auto ls = lifts_for(tau_graph(1), 3);
  std::set<std::pair<int, Word>> tags;
  for (const auto& l : ls.lifts()) {
    CHECK(tags.insert({l.curve, l.tag}).second);
    CHECK(l.tag.is_reduced());
    const auto& w = ls.curves()[l.curve];
    for (int k : {-2, -1, 1, 2}) CHECK_FALSE(shortlex_less((l.tag * w.power(k)).reduced(), l.tag));
  }
}

TEST_CASE("linking graph agrees with the geometric link test") {
  std::mt19937_64 rng(5);
  for (int k = 1; k <= 2; ++k) {
    const auto ls = lifts_for(tau_graph(k), 3, &rng);
    const auto& lifts = ls.lifts();
    std::size_t edges = 0, compared = 0;
    for (std::size_t i = 0; i < lifts.size(); ++i) {
      const auto& nb = ls.neighbours()[i];
      CHECK(std::is_sorted(nb.begin(), nb.end()));
      edges += nb.size();
      for (std::size_t j = i + 1; j < lifts.size(); ++j) {
        const bool l = ls.linked(static_cast<int>(i), static_cast<int>(j));
        CHECK(l == ls.linked(static_cast<int>(j), static_cast<int>(i)));
        const auto x = ls.coordinates_in_frame(static_cast<int>(i), static_cast<int>(j));
        CHECK(l == ((x[0] < 0) != (x[1] < 0)));
        if (well_separated(lifts[i].axis, lifts[j].axis)) {
          ++compared;
          CHECK(l == link(lifts[i].axis, lifts[j].axis));
        }
      }
    }
    CHECK(edges == 2 * ls.linked_pair_count());
    CHECK(compared > 0);
  }
}

TEST_CASE("maximal cubes are maximal cliques covering every linked pair") {
  std::mt19937_64 rng(6);
  const auto ls = lifts_for(tau_graph(2), 3, &rng);
  const auto rep = maximal_cubes(ls);
  std::set<std::pair<int, int>> covered;
  for (const auto& c : rep.cubes) {
    CHECK(std::is_sorted(c.lifts.begin(), c.lifts.end()));
    for (std::size_t a = 0; a < c.lifts.size(); ++a)
      for (std::size_t b = a + 1; b < c.lifts.size(); ++b) {
        CHECK(ls.linked(c.lifts[a], c.lifts[b]));
        covered.insert({c.lifts[a], c.lifts[b]});
      }
    for (int x = 0; x < static_cast<int>(ls.size()); ++x) {
      if (std::binary_search(c.lifts.begin(), c.lifts.end(), x)) continue;
      bool all = true;
      for (int y : c.lifts) all = all && ls.linked(x, y);
      CHECK_FALSE(all);
    }
  }
  CHECK(covered.size() == ls.linked_pair_count());
}

TEST_CASE("geometric self-intersection catalog") {
  std::mt19937_64 rng(1);
  CHECK(geometric_self_intersection(lifts_for(fixtures::loop_graph(), 3, &rng)).count == 0);
  CHECK(geometric_self_intersection(lifts_for(fixtures::figure_eight_graph(), 3, &rng)).count == 1);
  for (int L = 2; L <= 4; ++L)
    CHECK(geometric_self_intersection(lifts_for(tau_graph(1), L, &rng)).count == 3);
  const auto t2 = geometric_self_intersection(lifts_for(tau_graph(2), 4, &rng));
  CHECK(t2.count == 6);
  CHECK(t2.stabilized);
  CHECK(t2.per_radius.size() == 4);
  CHECK(t2.per_radius.back() == 6);
  CHECK(geometric_self_intersection(lifts_for(tau_graph(3), 3, &rng)).count == 9);
}

TEST_CASE("tau_k has k classes of 3-cubes") {
  std::mt19937_64 rng(2);
  for (int k = 1; k <= 3; ++k) {
    const auto ls = lifts_for(tau_graph(k), 3, &rng);
    const auto rep = maximal_cubes(ls);
    CHECK(rep.class_count(3) == k);
    CHECK(rep.max_dimension() == 3);
    const auto cubes = used_cubes(rep);
    CHECK(separation_check(cubes, ls).pass);
    std::vector<Cube> threes;
    for (const auto& c : cubes)
      if (c.dimension() == 3) threes.push_back(c);
    const auto inj = diagonal_injectivity_check(threes, ls);
    CHECK(inj.pass);
    for (std::size_t i = 0; i < threes.size(); ++i)
      CHECK(inj.diagonal_sums[i] == doctest::Approx(cube_diagonal_sum(threes[i], ls)));
  }
  const auto fig = maximal_cubes(lifts_for(fixtures::figure_eight_graph(), 3, &rng));
  CHECK(fig.max_dimension() == 2);
  CHECK(fig.class_count(3) == 0);
}

TEST_CASE("cubes in one class have equal diagonal sums") {
  std::mt19937_64 rng(3);
  const auto ls = lifts_for(tau_graph(2), 3, &rng);
  const auto rep = maximal_cubes(ls);
  for (std::size_t k = 0; k < rep.classes.size(); ++k) {
    const auto& cls = rep.classes[k];
    if (cls.truncated || cls.dimension < 3) continue;
    const double ref = cube_diagonal_sum(rep.cubes[cls.representative], ls);
    for (const auto& c : rep.cubes)
      if (c.orbit_class == static_cast<int>(k)) CHECK(cube_diagonal_sum(c, ls) == doctest::Approx(ref).epsilon(1e-6));
  }
}

TEST_CASE("filling a triangle breaks separation") {
  const auto g = fixtures::triangle_graph();
  const GluingSpec spec{{0}};
  REQUIRE(check_gluing(g, spec).has_triangle);

  const auto open = lifts_for(g, 3);
  CHECK(separation_check(used_cubes(maximal_cubes(open)), open).pass);

  const auto ls = lifts_for(fill_faces(g, spec), 3);
  const auto cubes = used_cubes(maximal_cubes(ls));
  const auto sep = separation_check(cubes, ls);
  CHECK_FALSE(sep.pass);
  REQUIRE(sep.witness.has_value());
  const auto& w = *sep.witness;
  CHECK(w.shared.size() >= 2);
  CHECK_FALSE(w.off_pair.has_value());
  CHECK(recheck(w, cubes, ls));
  for (int s : w.shared) {
    CHECK(std::binary_search(cubes[w.first].lifts.begin(), cubes[w.first].lifts.end(), s));
    CHECK(std::binary_search(cubes[w.second].lifts.begin(), cubes[w.second].lifts.end(), s));
  }
}

TEST_CASE("separation witnesses and rechecks") {
  std::mt19937_64 rng(4);
  const auto ls = lifts_for(tau_graph(1), 3, &rng);
  const auto rep = maximal_cubes(ls);
  auto cubes = used_cubes(rep);
  REQUIRE(!cubes.empty());
  cubes.push_back(cubes.front());
  const auto sep = separation_check(cubes, ls);
  CHECK_FALSE(sep.pass);
  REQUIRE(sep.witness);
  CHECK(recheck(*sep.witness, cubes, ls));

  std::vector<Cube> bad{Cube{{0, static_cast<int>(ls.size())}, -1}};
  CHECK(fixtures::error_code_of([&] { separation_check(bad, ls); }) == ErrorCode::CubeNotInLiftSet);
}

TEST_CASE("a repeated cube overlaps its own diagonals") {
  std::mt19937_64 rng(7);
  const auto ls = lifts_for(tau_graph(1), 3, &rng);
  const auto rep = maximal_cubes(ls);
  std::vector<Cube> twice;
  for (const auto& x : rep.cubes)
    if (x.dimension() == 3) {
      twice = {x, x};
      break;
    }
  REQUIRE(twice.size() == 2);
  const auto inj = diagonal_injectivity_check(twice, ls);
  CHECK_FALSE(inj.pass);
  CHECK(inj.overlaps.size() >= 3);

  std::vector<Cube> two;
  for (const auto& x : rep.cubes)
    if (x.dimension() == 2) two.push_back(x);
  if (!two.empty())
    CHECK(fixtures::error_code_of([&] { diagonal_injectivity_check(two, ls); }) == ErrorCode::DegenerateSeparator);
}

TEST_CASE("lift enumeration errors") {
  using fixtures::error_code_of;
  const auto g = tau_graph(1);
  const Spine s(g.to_fatgraph());
  const auto r = build_rep(s, ShearVector(6, 0.0));
  const std::vector<Word> words{s.word(curve_system(g).curves[0])};
  CHECK(error_code_of([&] { enumerate_lifts(r, words, 0); }) == ErrorCode::InvalidParameter);
  CHECK(error_code_of([&] { enumerate_lifts(r, words, 4, 10); }) == ErrorCode::ResourceLimit);
  const std::vector<Word> face{s.word(s.graph().faces()[0])};
  CHECK(error_code_of([&] { enumerate_lifts(r, face, 2); }) == ErrorCode::ParabolicCurve);
}

TEST_CASE("self-intersection does not depend on the shears") {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 5; ++trial) {
    const auto ls = lifts_for(tau_graph(2), 3, &rng);
    CHECK(geometric_self_intersection(ls).count == 6);
    CHECK(maximal_cubes(ls).class_count(3) == 2);
  }
}
