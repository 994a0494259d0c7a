#include "hypcube/dual_cube.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <string>
#include <tuple>

#include "hypcube/error.hpp"

namespace hypcube {

namespace {

/// Shortlex-least element of the coset g <root>.
Word coset_representative(const Word& g, const Word& root) {
  const int reach = 2 * static_cast<int>(g.size()) / static_cast<int>(root.size()) + 1;
  Word best = g;
  for (int k = -reach; k <= reach; ++k) {
    Word c = g * root.power(k);
    if (shortlex_less(c, best)) best = std::move(c);
  }
  return best;
}

double ball_size(int rank, int radius) {
  if (rank == 0) return 1.0;
  double total = 1.0, layer = 2.0 * rank;
  for (int r = 1; r <= radius; ++r) {
    total += layer;
    layer *= 2.0 * rank - 1.0;
  }
  return total;
}

using Wide = long double;
using WideVector = std::array<Wide, 2>;
using WideMatrix = std::array<Wide, 4>;

WideMatrix wide_product(const WideMatrix& x, const WideMatrix& y) {
  return {x[0] * y[0] + x[1] * y[2], x[0] * y[1] + x[1] * y[3], x[2] * y[0] + x[3] * y[2],
          x[2] * y[1] + x[3] * y[3]};
}

/// Extended-precision copy of a representation, for linking tests between
/// lifts whose endpoints are too close to order in double precision.
class WideRep {
 public:
  explicit WideRep(const Representation& r) {
    for (const Isometry& g : r.generators()) {
      gens_.push_back({g.a(), g.b(), g.c(), g.d()});
      inverses_.push_back({g.d(), -g.b(), -g.c(), g.a()});
    }
  }

  WideMatrix evaluate(const Word& w) const {
    WideMatrix m{1, 0, 0, 1};
    for (const Letter& l : w.letters()) m = wide_product(m, l.inverse ? inverses_[l.gen] : gens_[l.gen]);
    return m;
  }

  /// (repelling, attracting) fixed points of a hyperbolic word.
  std::array<WideVector, 2> fixed(const Word& w) const {
    WideMatrix m = evaluate(w);
    if (m[0] + m[3] < 0)
      for (Wide& e : m) e = -e;
    const Wide tr = m[0] + m[3];
    const Wide big = (tr + std::sqrt((tr - 2) * (tr + 2))) / 2;
    auto eigenvector = [&](Wide lambda) -> WideVector {
      const WideVector v1{m[1], lambda - m[0]}, v2{lambda - m[3], m[2]};
      return std::hypot(v1[0], v1[1]) >= std::hypot(v2[0], v2[1]) ? v1 : v2;
    };
    return {eigenvector(1 / big), eigenvector(big)};
  }

 private:
  std::vector<WideMatrix> gens_, inverses_;
};

Wide wide_det(const WideVector& p, const WideVector& q) { return p[0] * q[1] - p[1] * q[0]; }

}  // namespace

bool LiftSet::linked(int i, int j) const {
  const auto& n = adjacency_[i];
  return std::binary_search(n.begin(), n.end(), j);
}

std::size_t LiftSet::linked_pair_count() const {
  std::size_t total = 0;
  for (const auto& n : adjacency_) total += n.size();
  return total / 2;
}

namespace detail {

struct WideFrames {
  WideRep rep;
  std::vector<std::array<WideVector, 2>> base;

  std::array<Wide, 2> coordinates(const Lift& frame, const Lift& other) const {
    const WideMatrix m = rep.evaluate(frame.tag.inverse() * other.tag);
    const auto& axis = base[frame.curve];
    std::array<Wide, 2> x;
    for (int k = 0; k < 2; ++k) {
      const WideVector& b = base[other.curve][k];
      const WideVector y{m[0] * b[0] + m[1] * b[1], m[2] * b[0] + m[3] * b[1]};
      x[k] = wide_det(axis[0], y) / wide_det(axis[1], y);
    }
    return x;
  }
};

}  // namespace detail

std::array<double, 2> LiftSet::coordinates_in_frame(int frame, int other) const {
  const auto x = wide_->coordinates(lifts_[frame], lifts_[other]);
  return {static_cast<double>(x[0]), static_cast<double>(x[1])};
}

LiftSet enumerate_lifts(const Representation& r, const std::vector<Word>& curves, int L,
                        std::size_t max_lifts) {
  if (L < 1) fail(ErrorCode::InvalidParameter, "truncation radius must be at least 1");
  const double needed = ball_size(r.rank(), L) * static_cast<double>(curves.size());
  if (needed > static_cast<double>(max_lifts))
    fail(ErrorCode::ResourceLimit, "radius " + std::to_string(L) + " needs up to " +
                                       std::to_string(static_cast<long long>(needed)) +
                                       " lifts, cap is " + std::to_string(max_lifts));
  LiftSet ls;
  ls.radius_ = L;
  ls.rep_ = r;
  for (const Word& w : curves) {
    const Word root = w.cyclically_reduced().primitive_root();
    if (root.empty()) fail(ErrorCode::EmptyWord, "curve word is trivial");
    const Isometry m = r.evaluate(root);
    if (classify_isometry(m) == IsometryType::Parabolic)
      fail(ErrorCode::ParabolicCurve, "curve " + root.to_string() + " is parabolic");
    ls.lengths_.push_back(translation_length(m));
    ls.curves_.push_back(root);
  }

  auto wide = std::make_shared<detail::WideFrames>(detail::WideFrames{WideRep(r), {}});
  for (const Word& w : ls.curves_) wide->base.push_back(wide->rep.fixed(w));
  ls.wide_ = wide;

  const std::vector<Word> ball = reduced_ball(r.rank(), L);
  for (int c = 0; c < static_cast<int>(ls.curves_.size()); ++c) {
    std::set<Word> seen;
    for (const Word& g : ball) {
      Word tag = coset_representative(g, ls.curves_[c]);
      if (!seen.insert(tag).second) continue;
      const WideMatrix m = wide->rep.evaluate(tag);
      Geodesic axis;
      for (int k = 0; k < 2; ++k) {
        const WideVector& b = wide->base[c][k];
        const BoundaryVector y{static_cast<double>(m[0] * b[0] + m[1] * b[1]),
                               static_cast<double>(m[2] * b[0] + m[3] * b[1])};
        (k == 0 ? axis.u : axis.v) = IdealPoint::from_vector(y);
      }
      ls.lifts_.push_back({axis, std::move(tag), c});
    }
  }

  // Lifts with nearly shared endpoints are compared in the frame of one of
  // them: linked iff the other's endpoints lie on opposite sides of the axis.
  auto linked_in_frame = [&](int i, int j) {
    const auto x = wide->coordinates(ls.lifts_[i], ls.lifts_[j]);
    return (x[0] < 0) != (x[1] < 0);
  };

  const int n = static_cast<int>(ls.lifts_.size());
  ls.adjacency_.assign(n, {});
  constexpr double kClear = 1e-6;
  for (int i = 0; i < n; ++i) {
    const Geodesic& a = ls.lifts_[i].axis;
    for (int j = i + 1; j < n; ++j) {
      const Geodesic& b = ls.lifts_[j].axis;
      const bool clear = angular_distance(a.u, b.u) > kClear && angular_distance(a.u, b.v) > kClear &&
                         angular_distance(a.v, b.u) > kClear && angular_distance(a.v, b.v) > kClear;
      if (clear ? interleaved(a.u.angle, a.v.angle, b.u.angle, b.v.angle) : linked_in_frame(i, j)) {
        ls.adjacency_[i].push_back(j);
        ls.adjacency_[j].push_back(i);
      }
    }
  }
  return ls;
}

int PairClasses::class_of(int i, int j) const {
  if (i > j) std::swap(i, j);
  auto it = std::lower_bound(pairs.begin(), pairs.end(), std::array<int, 3>{i, j, -1});
  if (it == pairs.end() || (*it)[0] != i || (*it)[1] != j) return -1;
  return (*it)[2];
}

namespace {

/// Shortlex-least element of the double coset <a> h <b>.
Word double_coset_representative(const Word& a, const Word& h, const Word& b) {
  const int slack = static_cast<int>(h.size() + 2 * a.size() + 2 * b.size());
  const int reach_a = slack / static_cast<int>(a.size()) + 1;
  const int reach_b = slack / static_cast<int>(b.size()) + 1;
  Word best = h;
  for (int i = -reach_a; i <= reach_a; ++i) {
    const Word left = a.power(i) * h;
    for (int j = -reach_b; j <= reach_b; ++j) {
      Word c = left * b.power(j);
      if (shortlex_less(c, best)) best = std::move(c);
    }
  }
  return best;
}

}  // namespace

PairClasses classify_pairs(const LiftSet& ls) {
  std::map<std::tuple<int, int, Word>, int> index;
  PairClasses out;
  const auto& lifts = ls.lifts();
  for (int i = 0; i < static_cast<int>(lifts.size()); ++i) {
    for (int j : ls.neighbours()[i]) {
      if (j < i) continue;
      int ci = lifts[i].curve, cj = lifts[j].curve;
      Word h = lifts[i].tag.inverse() * lifts[j].tag;
      if (ci > cj) {
        std::swap(ci, cj);
        h = h.inverse();
      }
      Word key = double_coset_representative(ls.curves()[ci], h, ls.curves()[cj]);
      if (ci == cj) {
        Word flipped = double_coset_representative(ls.curves()[ci], h.inverse(), ls.curves()[cj]);
        if (shortlex_less(flipped, key)) key = std::move(flipped);
      }
      auto [it, fresh] =
          index.try_emplace(std::make_tuple(ci, cj, std::move(key)), static_cast<int>(index.size()));
      out.pairs.push_back({i, j, it->second});
    }
  }
  out.count = static_cast<int>(index.size());
  return out;
}

int CubeReport::class_count(int dimension) const {
  int n = 0;
  for (const CubeClass& c : classes) n += c.dimension == dimension && !c.truncated;
  return n;
}

int CubeReport::max_dimension() const {
  int m = 0;
  for (const CubeClass& c : classes)
    if (!c.truncated) m = std::max(m, c.dimension);
  return m;
}

namespace {

using Set = std::vector<int>;

Set intersect(const Set& a, const Set& b) {
  Set out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

struct CliqueSearch {
  const std::vector<std::vector<int>>& adj;
  std::vector<Set> found;

  void expand(Set& r, Set p, Set x) {
    if (p.empty()) {
      if (x.empty()) {
        Set c = r;
        std::sort(c.begin(), c.end());
        found.push_back(std::move(c));
      }
      return;
    }
    int pivot = -1;
    std::size_t best = 0;
    for (const Set* s : {&p, &x})
      for (int u : *s) {
        const std::size_t k = intersect(p, adj[u]).size();
        if (pivot < 0 || k > best) pivot = u, best = k;
      }
    Set candidates;
    std::set_difference(p.begin(), p.end(), adj[pivot].begin(), adj[pivot].end(),
                        std::back_inserter(candidates));
    for (int v : candidates) {
      r.push_back(v);
      expand(r, intersect(p, adj[v]), intersect(x, adj[v]));
      r.pop_back();
      p.erase(std::lower_bound(p.begin(), p.end(), v));
      x.insert(std::lower_bound(x.begin(), x.end(), v), v);
    }
  }
};

}  // namespace

CubeReport maximal_cubes(const LiftSet& ls) {
  CubeReport report;
  report.pairs = classify_pairs(ls);
  const auto& adj = ls.neighbours();
  const int n = static_cast<int>(ls.size());

  CliqueSearch search{adj, {}};
  // Outer loop in vertex order: each clique is found from its smallest vertex.
  for (int v = 0; v < n; ++v) {
    Set p, x;
    for (int u : adj[v]) (u > v ? p : x).push_back(u);
    Set r{v};
    search.expand(r, std::move(p), std::move(x));
  }
  std::sort(search.found.begin(), search.found.end());

  std::map<std::vector<int>, int> index;
  for (Set& c : search.found) {
    std::vector<int> key;
    if (c.size() == 1) {
      key.push_back(-1 - ls.lifts()[c[0]].curve);
    } else {
      for (std::size_t a = 0; a < c.size(); ++a)
        for (std::size_t b = a + 1; b < c.size(); ++b)
          key.push_back(report.pairs.class_of(c[a], c[b]));
      std::sort(key.begin(), key.end());
    }
    auto [it, fresh] = index.try_emplace(key, static_cast<int>(report.classes.size()));
    if (fresh) {
      CubeClass cls;
      cls.dimension = static_cast<int>(c.size());
      cls.key = key;
      cls.representative = static_cast<int>(report.cubes.size());
      report.classes.push_back(std::move(cls));
    }
    ++report.classes[it->second].count;
    report.cubes.push_back({std::move(c), it->second});
  }

  std::set<int> crossing_curves;
  for (const auto& p : report.pairs.pairs) {
    crossing_curves.insert(ls.lifts()[p[0]].curve);
    crossing_curves.insert(ls.lifts()[p[1]].curve);
  }
  for (CubeClass& a : report.classes) {
    if (a.dimension == 1) {
      a.truncated = crossing_curves.count(-1 - a.key[0]) > 0;
      continue;
    }
    for (const CubeClass& b : report.classes)
      if (b.key.size() > a.key.size() && b.dimension > 1 &&
          std::includes(b.key.begin(), b.key.end(), a.key.begin(), a.key.end()))
        a.truncated = true;
  }
  return report;
}

namespace {

void check_cube(const Cube& c, const LiftSet& ls, std::size_t position) {
  const int n = static_cast<int>(ls.size());
  for (std::size_t a = 0; a < c.lifts.size(); ++a) {
    if (c.lifts[a] < 0 || c.lifts[a] >= n)
      fail(ErrorCode::CubeNotInLiftSet, "cube " + std::to_string(position) + " uses lift " +
                                            std::to_string(c.lifts[a]) + " outside the set");
    for (std::size_t b = 0; b < a; ++b)
      if (!ls.linked(c.lifts[a], c.lifts[b]))
        fail(ErrorCode::CubeNotInLiftSet, "cube " + std::to_string(position) + " has unlinked lifts " +
                                              std::to_string(c.lifts[b]) + " and " +
                                              std::to_string(c.lifts[a]));
  }
}

std::optional<SeparationWitness> violation(int first, int second, std::span<const Cube> cubes,
                                           const LiftSet& ls) {
  const Set& a = cubes[first].lifts;
  const Set& b = cubes[second].lifts;
  SeparationWitness w{first, second, intersect(a, b), std::nullopt};
  if (w.shared.empty()) return std::nullopt;
  if (w.shared.size() >= 2) return w;
  for (int c : a) {
    if (std::binary_search(b.begin(), b.end(), c)) continue;
    for (int d : b) {
      if (std::binary_search(a.begin(), a.end(), d)) continue;
      if (ls.linked(c, d)) {
        w.off_pair = std::array<int, 2>{c, d};
        return w;
      }
    }
  }
  return std::nullopt;
}

}  // namespace

SeparationReport separation_check(std::span<const Cube> cubes, const LiftSet& ls) {
  for (std::size_t i = 0; i < cubes.size(); ++i) check_cube(cubes[i], ls, i);
  std::vector<std::vector<int>> containing(ls.size());
  for (std::size_t i = 0; i < cubes.size(); ++i)
    for (int l : cubes[i].lifts) containing[l].push_back(static_cast<int>(i));
  std::set<std::pair<int, int>> candidates;
  for (const auto& list : containing)
    for (std::size_t a = 0; a < list.size(); ++a)
      for (std::size_t b = a + 1; b < list.size(); ++b) candidates.emplace(list[a], list[b]);

  SeparationReport report;
  for (auto [a, b] : candidates) {
    ++report.pairs_checked;
    if (auto w = violation(a, b, cubes, ls)) {
      report.pass = false;
      report.witness = std::move(w);
      break;
    }
  }
  return report;
}

bool recheck(const SeparationWitness& w, std::span<const Cube> cubes, const LiftSet& ls) {
  const int n = static_cast<int>(cubes.size());
  if (w.first < 0 || w.second < 0 || w.first >= n || w.second >= n || w.first == w.second)
    return false;
  const Set& a = cubes[w.first].lifts;
  const Set& b = cubes[w.second].lifts;
  if (intersect(a, b) != w.shared) return false;
  if (w.shared.size() >= 2) return true;
  if (w.shared.size() != 1 || !w.off_pair) return false;
  const auto [c, d] = *w.off_pair;
  const bool c_off = std::binary_search(a.begin(), a.end(), c) && !std::binary_search(b.begin(), b.end(), c);
  const bool d_off = std::binary_search(b.begin(), b.end(), d) && !std::binary_search(a.begin(), a.end(), d);
  return c_off && d_off && ls.linked(c, d);
}

namespace {

/// The cube seen from lift `frame` (one of its members): that lift runs from 0
/// to infinity in the half-plane and the other members cross it around i.
/// `shift` receives the axis parameter that was moved to i.
CubeConfiguration configuration_in_frame(const Cube& cube, const LiftSet& ls, int frame,
                                         double* shift) {
  std::vector<std::array<double, 2>> ends;
  double centre = 0.0;
  for (int l : cube.lifts) {
    if (l == frame) continue;
    ends.push_back(ls.coordinates_in_frame(frame, l));
    centre += 0.5 * (std::log(std::fabs(ends.back()[0])) + std::log(std::fabs(ends.back()[1])));
  }
  centre /= static_cast<double>(ends.size());
  const double scale = std::exp(-centre);
  std::vector<Geodesic> geodesics;
  std::size_t next = 0;
  for (int l : cube.lifts) {
    if (l == frame) {
      geodesics.push_back({IdealPoint::from_real(0.0), IdealPoint::from_angle(0.0)});
      continue;
    }
    const auto& x = ends[next++];
    geodesics.push_back({IdealPoint::from_real(x[0] * scale), IdealPoint::from_real(x[1] * scale)});
  }
  if (shift) *shift = centre;
  return cube_configuration(geodesics);
}

/// Height parameter where a geodesic crosses the imaginary axis.
double crossing_height(const Geodesic& g) {
  return 0.5 * std::log(std::fabs(g.u.real() * g.v.real()));
}

void require_diagonals(const Cube& cube, std::size_t position) {
  if (cube.dimension() < 3)
    fail(ErrorCode::DegenerateSeparator, "cube " + std::to_string(position) + " has dimension " +
                                             std::to_string(cube.dimension()) +
                                             "; diagonals need dimension >= 3");
}

}  // namespace

double cube_diagonal_sum(const Cube& cube, const LiftSet& ls) {
  require_diagonals(cube, 0);
  double total = 0.0;
  for (const DiagonalData& d :
       diagonal_data(configuration_in_frame(cube, ls, cube.lifts[0], nullptr)))
    total += d.length;
  return total;
}

InjectivityReport diagonal_injectivity_check(std::span<const Cube> cubes, const LiftSet& ls,
                                             double tol) {
  struct Segment {
    int lift, cube;
    double lo, hi;
  };
  std::vector<Segment> segments;
  InjectivityReport report;
  for (std::size_t ci = 0; ci < cubes.size(); ++ci) {
    const Cube& cube = cubes[ci];
    require_diagonals(cube, ci);
    check_cube(cube, ls, ci);
    double sum = 0.0;
    for (std::size_t k = 0; k < cube.lifts.size(); ++k) {
      const int lift = cube.lifts[k];
      double shift = 0.0;
      const CubeConfiguration conf = configuration_in_frame(cube, ls, lift, &shift);
      const auto diagonals = diagonal_data(conf);
      const int i = static_cast<int>(std::find(conf.source.begin(), conf.source.end(),
                                               static_cast<int>(k)) -
                                     conf.source.begin());
      const DiagonalData& d = diagonals[i];
      const double t1 = crossing_height(d.separator_p) + shift;
      const double t2 = crossing_height(d.separator_q) + shift;
      segments.push_back({lift, static_cast<int>(ci), std::min(t1, t2), std::max(t1, t2)});
      if (k == 0)
        for (const DiagonalData& e : diagonals) sum += e.length;
    }
    report.diagonal_sums.push_back(sum);
  }
  std::sort(segments.begin(), segments.end(), [](const Segment& a, const Segment& b) {
    return a.lift != b.lift ? a.lift < b.lift : a.lo < b.lo;
  });
  for (std::size_t s = 0; s < segments.size();) {
    std::size_t e = s;
    std::size_t reach = s;
    for (std::size_t k = s + 1; k < segments.size() && segments[k].lift == segments[s].lift; ++k) {
      e = k;
      const Segment& cur = segments[k];
      const Segment& prev = segments[reach];
      const double overlap = std::min(cur.hi, prev.hi) - cur.lo;
      if (overlap > tol) {
        report.pass = false;
        report.overlaps.push_back({cur.lift, prev.cube, cur.cube, overlap});
      }
      if (cur.hi > prev.hi) reach = k;
    }
    s = e + 1;
  }
  return report;
}

SelfIntersectionReport geometric_self_intersection(const LiftSet& ls) {
  const PairClasses pc = classify_pairs(ls);
  const int L = ls.radius();
  SelfIntersectionReport report;
  std::vector<std::set<int>> seen(L);
  for (const auto& p : pc.pairs) {
    const int r = static_cast<int>(
        std::max(ls.lifts()[p[0]].tag.size(), ls.lifts()[p[1]].tag.size()));
    for (int k = std::max(r, 1); k <= L; ++k) seen[k - 1].insert(p[2]);
  }
  for (const auto& s : seen) report.per_radius.push_back(static_cast<long long>(s.size()));
  report.count = report.per_radius.back();
  report.stabilization_radius = L;
  while (report.stabilization_radius > 1 &&
         report.per_radius[report.stabilization_radius - 2] == report.count)
    --report.stabilization_radius;
  report.stabilized = L >= 2 && report.per_radius[L - 2] == report.count;
  return report;
}

}  // namespace hypcube
