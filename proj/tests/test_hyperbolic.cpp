#include <doctest.h>

#include <numbers>

#include "fixtures.hpp"
#include "hypcube/hyperbolic.hpp"

using namespace hypcube;
using std::numbers::pi;

namespace {

double cross2(Complex a, Complex b) { return a.real() * b.imag() - a.imag() * b.real(); }

/// Euclidean segment crossing of the chords joining the endpoints in the disk.
bool chords_cross(const Geodesic& a, const Geodesic& b) {
  const Complex p1 = std::polar(1.0, a.u.angle), p2 = std::polar(1.0, a.v.angle);
  const Complex q1 = std::polar(1.0, b.u.angle), q2 = std::polar(1.0, b.v.angle);
  const double d1 = cross2(p2 - p1, q1 - p1), d2 = cross2(p2 - p1, q2 - p1);
  const double d3 = cross2(q2 - q1, p1 - q1), d4 = cross2(q2 - q1, p2 - q1);
  return (d1 > 0) != (d2 > 0) && (d3 > 0) != (d4 > 0);
}

Complex cayley_inverse(Complex w) { return Complex(0, 1) * (1.0 + w) / (1.0 - w); }

double half_plane_distance(Complex z, Complex w) {
  return std::acosh(1.0 + std::norm(z - w) / (2.0 * z.imag() * w.imag()));
}

/// Real coordinate of a boundary angle, via the inverse Cayley map.
double real_of(double theta) { return -1.0 / std::tan(theta / 2.0); }

/// Intersection of two geodesic semicircles in the half-plane.
Complex circle_intersection(double a1, double a2, double b1, double b2) {
  const double c1 = (a1 + a2) / 2, r1 = std::abs(a2 - a1) / 2;
  const double c2 = (b1 + b2) / 2, r2 = std::abs(b2 - b1) / 2;
  const double x = (r1 * r1 - r2 * r2 + c2 * c2 - c1 * c1) / (2 * (c2 - c1));
  return {x, std::sqrt(r1 * r1 - (x - c1) * (x - c1))};
}

Geodesic geo(double a, double b) { return {IdealPoint::from_angle(a), IdealPoint::from_angle(b)}; }

bool same_point(IdealPoint a, IdealPoint b, double tol = 1e-9) { return angular_distance(a, b) < tol; }

bool same_geodesic(const Geodesic& a, const Geodesic& b, double tol = 1e-9) {
  return (same_point(a.u, b.u, tol) && same_point(a.v, b.v, tol)) ||
         (same_point(a.u, b.v, tol) && same_point(a.v, b.u, tol));
}

Isometry random_isometry(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  for (;;) {
    const double a = u(rng), b = u(rng), c = u(rng), d = u(rng);
    if (a * d - b * c > 0.1) return Isometry(a, b, c, d);
  }
}

}  // namespace

TEST_CASE("isometries are normalized") {
  CHECK(Isometry(2, 0, 0, 2) == Isometry::identity());
  CHECK(Isometry(-1, 0, 0, -1) == Isometry::identity());
  const Isometry m(0, -3, 3, 0);
  CHECK(m.b() > 0);
  CHECK(m.a() * m.d() - m.b() * m.c() == doctest::Approx(1.0));
  CHECK(fixtures::error_code_of([] { Isometry(1, 0, 0, -1); }) == ErrorCode::InvalidParameter);
  CHECK(fixtures::error_code_of([] { Isometry(0, 0, 0, 0); }) == ErrorCode::InvalidParameter);

  std::mt19937_64 rng(5);
  for (int i = 0; i < 50; ++i) {
    const auto x = random_isometry(rng), y = random_isometry(rng), z = random_isometry(rng);
    const auto p = (x * y) * z, q = x * (y * z);
    CHECK(p.a() == doctest::Approx(q.a()));
    CHECK(p.d() == doctest::Approx(q.d()));
    const auto e = x * x.inverse();
    CHECK(e.a() == doctest::Approx(1.0));
    CHECK(e.b() == doctest::Approx(0.0).epsilon(1e-9));
  }
}

TEST_CASE("classification and translation length") {
  CHECK(classify_isometry(Isometry(2, 0, 0, 0.5)) == IsometryType::Hyperbolic);
  CHECK(translation_length(Isometry(2, 0, 0, 0.5)) == doctest::Approx(2 * std::log(2.0)));
  CHECK(classify_isometry(Isometry(1, 1, 0, 1)) == IsometryType::Parabolic);
  CHECK(classify_isometry(Isometry::rotation(0.5)) == IsometryType::Elliptic);
  CHECK(fixtures::error_code_of([] { translation_length(Isometry(1, 1, 0, 1)); }) == ErrorCode::NotHyperbolic);
  CHECK(fixtures::error_code_of([] { axis(Isometry::rotation(1.0)); }) == ErrorCode::NotHyperbolic);
  for (double l : {0.1, 1.0, 3.7}) CHECK(translation_length(Isometry::translation(l)) == doctest::Approx(l));
}

TEST_CASE("boundary coordinates follow the Cayley map") {
  CHECK(IdealPoint::from_real(0.0).angle == doctest::Approx(pi));
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> u(0.05, 2 * pi - 0.05);
  for (int i = 0; i < 100; ++i) {
    const double t = u(rng);
    const auto p = IdealPoint::from_angle(t);
    CHECK(p.real() == doctest::Approx(real_of(t)));
    CHECK(IdealPoint::from_real(p.real()).angle == doctest::Approx(t));
    CHECK(IdealPoint::from_vector(p.vector()).angle == doctest::Approx(t));
    CHECK(chord(t, 0.3) == doctest::Approx(2 * std::abs(std::sin((t - 0.3) / 2))));
  }
  CHECK(std::abs(to_disk(Complex(0, 1))) < 1e-15);
}

TEST_CASE("fixed points and axes are equivariant") {
  std::mt19937_64 rng(9);
  int tested = 0;
  while (tested < 100) {
    const auto h = random_isometry(rng);
    if (classify_isometry(h) != IsometryType::Hyperbolic) continue;
    ++tested;
    const auto fv = fixed_vectors(h);
    for (const auto& v : fv) {
      const auto w = h.apply(v);
      CHECK(std::abs(w[0] * v[1] - w[1] * v[0]) < 1e-9 * (1 + std::hypot(w[0], w[1])));
    }
    const auto g = random_isometry(rng);
    CHECK(same_geodesic(axis(g * h * g.inverse()), g.apply(axis(h)), 1e-7));
    const auto ax = axis(h);
    const auto moved = h.apply(ax);
    CHECK(same_point(moved.u, ax.u, 1e-7));
    CHECK(same_point(moved.v, ax.v, 1e-7));
    CHECK(translation_length(g * h * g.inverse()) == doctest::Approx(translation_length(h)));
  }
}

TEST_CASE("link agrees with chord crossing") {
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> u(0, 2 * pi);
  int linked = 0;
  for (int i = 0; i < 2000; ++i) {
    const auto a = geo(u(rng), u(rng)), b = geo(u(rng), u(rng));
    const bool l = link(a, b);
    CHECK(l == chords_cross(a, b));
    CHECK(l == link(b, a));
    linked += l;
  }
  CHECK(linked > 300);
  CHECK(fixtures::error_code_of([] { link(geo(0.1, 1.0), geo(1.0, 3.0)); }) == ErrorCode::SharedEndpoint);
}

TEST_CASE("intersection points and distances agree with half-plane formulas") {
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> u(0.05, 2 * pi - 0.05);
  int checked = 0;
  while (checked < 300) {
    const auto a = geo(u(rng), u(rng)), b = geo(u(rng), u(rng));
    if (!chords_cross(a, b)) continue;
    const double a1 = real_of(a.u.angle), a2 = real_of(a.v.angle);
    const double b1 = real_of(b.u.angle), b2 = real_of(b.v.angle);
    if (std::abs((a1 + a2) - (b1 + b2)) < 1e-3) continue;
    ++checked;
    const Complex z = circle_intersection(a1, a2, b1, b2);
    const Complex w = cayley_inverse(intersection_point(a, b));
    CHECK(std::abs(z - w) < 1e-7 * (1 + std::abs(z)));
  }
  for (int i = 0; i < 200; ++i) {
    const Complex z = std::polar(0.9 * u(rng) / (2 * pi), u(rng));
    const Complex w = std::polar(0.9 * u(rng) / (2 * pi), u(rng));
    CHECK(disk_distance(z, w) == doctest::Approx(half_plane_distance(cayley_inverse(z), cayley_inverse(w))));
    CHECK(std::abs(to_half_plane(z) - cayley_inverse(z)) < 1e-12);
  }
}

TEST_CASE("cube configurations relabel endpoints in cyclic order") {
  std::mt19937_64 rng(6);
  for (int n = 3; n <= 7; ++n)
    for (int trial = 0; trial < 40; ++trial) {
      const auto t = fixtures::random_angles(n, rng);
      std::vector<Geodesic> lifts;
      for (int i = 0; i < n; ++i) lifts.push_back(rng() % 2 ? geo(t[i], t[i + n]) : geo(t[i + n], t[i]));
      std::vector<int> perm(n);
      for (int i = 0; i < n; ++i) perm[i] = i;
      std::shuffle(perm.begin(), perm.end(), rng);
      std::vector<Geodesic> shuffled;
      for (int i : perm) shuffled.push_back(lifts[i]);
      const auto c = cube_configuration(shuffled);
      REQUIRE(c.n == n);
      for (int k = 0; k < 2 * n; ++k) CHECK(c.x[k] == doctest::Approx(t[k]));
      for (int i = 0; i < n; ++i) {
        CHECK(same_geodesic(c.geodesics[i], geo(t[i], t[i + n])));
        CHECK(same_geodesic(shuffled[c.source[i]], c.geodesics[i]));
      }
    }
  using fixtures::error_code_of;
  const std::vector<Geodesic> two{geo(0, 3), geo(1.5, 4.5)};
  CHECK(error_code_of([&] { cube_configuration(two); }) == ErrorCode::DimensionTooSmall);
  const std::vector<Geodesic> apart{geo(0, 3), geo(1.5, 4.5), geo(0.1, 0.2)};
  CHECK(error_code_of([&] { cube_configuration(apart); }) == ErrorCode::NotPairwiseLinked);
  CHECK(order_configuration(two).n == 2);
}

TEST_CASE("diagonals of the regular configuration") {
  for (int n = 3; n <= 8; ++n) {
    std::vector<Geodesic> g;
    for (int i = 0; i < n; ++i) g.push_back(geo(i * pi / n, i * pi / n + pi));
    const auto diags = diagonal_data(cube_configuration(g));
    const double c = std::cos(pi / n);
    const double expected = std::log((1 + c) / (1 - c));
    REQUIRE(static_cast<int>(diags.size()) == n);
    for (const auto& d : diags) {
      CHECK(d.length == doctest::Approx(expected));
      CHECK(d.printed == doctest::Approx(std::exp(2 * expected)));
    }
  }
  std::vector<Geodesic> g;
  for (int i = 0; i < 3; ++i) g.push_back(geo(i * pi / 3, i * pi / 3 + pi));
  const auto d3 = diagonal_data(cube_configuration(g));
  CHECK(d3[0].printed == doctest::Approx(9.0));
  CHECK(d3[0].length == doctest::Approx(std::log(3.0)));
}

TEST_CASE("diagonal lengths are distances between separator crossings") {
  std::mt19937_64 rng(8);
  for (int n = 3; n <= 6; ++n)
    for (int trial = 0; trial < 30; ++trial) {
      const auto t = fixtures::random_angles(n, rng, 0.05);
      std::vector<Geodesic> g;
      for (int i = 0; i < n; ++i) g.push_back(geo(t[i], t[i + n]));
      const auto c = cube_configuration(g);
      const auto diags = diagonal_data(c);
      for (int i = 0; i < n; ++i) {
        const auto& d = diags[i];
        const double dist = half_plane_distance(cayley_inverse(d.start), cayley_inverse(d.end));
        CHECK(d.length == doctest::Approx(dist).epsilon(1e-6));
        CHECK(d.length == doctest::Approx(0.5 * std::log(d.printed)));
        CHECK(std::abs(d.start - intersection_point(c.geodesics[i], d.separator_p)) < 1e-9);
        CHECK(std::abs(d.end - intersection_point(c.geodesics[i], d.separator_q)) < 1e-9);
      }
    }
}

TEST_CASE("H shapes and their crosses") {
  using fixtures::error_code_of;
  CHECK(error_code_of([] { cross_of({geo(0, 2), geo(1, 3)}); }) == ErrorCode::InvalidH);

  // Sides perpendicular to the imaginary axis at heights e^s, e^t: their
  // endpoints are -e^s, e^s and -e^t, e^t.
  auto h_at = [](double s, double t) {
    const Geodesic a{IdealPoint::from_real(-std::exp(s)), IdealPoint::from_real(std::exp(s))};
    const Geodesic b{IdealPoint::from_real(-std::exp(t)), IdealPoint::from_real(std::exp(t))};
    return HShape{a, b};
  };
  const auto cr = cross_of(h_at(0, 1));
  CHECK(link(cr[0], cr[1]));
  // Nested intervals along the same perpendicular give crossing Xs when they overlap.
  CHECK(crosses_intersect(h_at(0, 2), h_at(1, 3)));
  CHECK_FALSE(crosses_intersect(h_at(0, 1), h_at(2, 3)));

  std::mt19937_64 rng(12);
  std::uniform_real_distribution<double> u(0, 2 * pi);
  int tested = 0;
  while (tested < 500) {
    const auto a = geo(u(rng), u(rng)), b = geo(u(rng), u(rng));
    const auto c = geo(u(rng), u(rng)), d = geo(u(rng), u(rng));
    if (chords_cross(a, b) || chords_cross(c, d)) continue;
    ++tested;
    const auto x = cross_of({a, b}), y = cross_of({c, d});
    CHECK(chords_cross(x[0], x[1]));
    bool expected = false;
    for (const auto& p : x)
      for (const auto& q : y) expected = expected || chords_cross(p, q);
    CHECK(crosses_intersect({a, b}, {c, d}) == expected);
  }
}
