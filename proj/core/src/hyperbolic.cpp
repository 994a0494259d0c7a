#include "hypcube/hyperbolic.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "hypcube/error.hpp"

namespace hypcube {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double wrap_angle(double theta) {
  double t = std::fmod(theta, kTwoPi);
  if (t < 0) t += kTwoPi;
  if (t >= kTwoPi) t = 0.0;
  return t;
}

}  // namespace

IdealPoint IdealPoint::from_angle(double theta) { return {wrap_angle(theta)}; }

IdealPoint IdealPoint::from_real(double x) {
  if (std::isinf(x)) return {0.0};
  return {wrap_angle(2.0 * std::atan2(1.0, -x))};
}

IdealPoint IdealPoint::from_vector(const BoundaryVector& v) {
  const double s = v[1] >= 0 ? 1.0 : -1.0;
  return {wrap_angle(2.0 * std::atan2(s * v[1], -s * v[0]))};
}

BoundaryVector IdealPoint::vector() const {
  return {-std::cos(angle / 2), std::sin(angle / 2)};
}

double IdealPoint::real() const {
  if (angle == 0.0) return std::numeric_limits<double>::infinity();
  return -1.0 / std::tan(angle / 2);
}

double angular_distance(IdealPoint a, IdealPoint b) {
  const double d = std::fabs(a.angle - b.angle);
  return std::min(d, kTwoPi - d);
}

Isometry::Isometry(double a, double b, double c, double d) {
  const double det = a * d - b * c;
  if (!(det > 0) || !std::isfinite(det))
    fail(ErrorCode::InvalidParameter, "isometry needs a positive determinant");
  const double s = 1.0 / std::sqrt(det);
  m_ = {a * s, b * s, c * s, d * s};
  fix_sign();
}

Isometry::Isometry(Unchecked, double a, double b, double c, double d) : m_{a, b, c, d} {
  fix_sign();
}

void Isometry::fix_sign() {
  for (double v : m_) {
    if (v == 0.0) continue;
    if (v < 0)
      for (double& w : m_) w = -w;
    break;
  }
}

Isometry Isometry::translation(double length) {
  return {std::exp(length / 2), 0.0, 0.0, std::exp(-length / 2)};
}

Isometry Isometry::rotation(double angle) {
  const double c = std::cos(angle / 2), s = std::sin(angle / 2);
  return {c, s, -s, c};
}

Isometry Isometry::inverse() const { return {Unchecked{}, m_[3], -m_[1], -m_[2], m_[0]}; }

Isometry operator*(const Isometry& x, const Isometry& y) {
  const auto& p = x.m_;
  const auto& q = y.m_;
  return {Isometry::Unchecked{}, p[0] * q[0] + p[1] * q[2], p[0] * q[1] + p[1] * q[3], p[2] * q[0] + p[3] * q[2],
          p[2] * q[1] + p[3] * q[3]};
}

BoundaryVector Isometry::apply(const BoundaryVector& v) const {
  return {m_[0] * v[0] + m_[1] * v[1], m_[2] * v[0] + m_[3] * v[1]};
}

IdealPoint Isometry::apply(IdealPoint p) const { return IdealPoint::from_vector(apply(p.vector())); }

Geodesic Isometry::apply(const Geodesic& g) const { return {apply(g.u), apply(g.v)}; }

Complex Isometry::apply_half_plane(Complex z) const {
  return (m_[0] * z + m_[1]) / (m_[2] * z + m_[3]);
}

const char* to_string(IsometryType t) {
  switch (t) {
    case IsometryType::Hyperbolic: return "hyperbolic";
    case IsometryType::Parabolic: return "parabolic";
    case IsometryType::Elliptic: return "elliptic";
  }
  return "unknown";
}

IsometryType classify_isometry(const Isometry& m, double eps) {
  const double t = std::fabs(m.trace());
  if (t > 2.0 + eps) return IsometryType::Hyperbolic;
  if (t < 2.0 - eps) return IsometryType::Elliptic;
  return IsometryType::Parabolic;
}

namespace {

void require_hyperbolic(const Isometry& m) {
  const IsometryType t = classify_isometry(m);
  if (t != IsometryType::Hyperbolic)
    fail(ErrorCode::NotHyperbolic, std::string("isometry is ") + to_string(t) + " (trace " +
                                       std::to_string(m.trace()) + ")");
}

}  // namespace

double translation_length(const Isometry& m) {
  require_hyperbolic(m);
  return 2.0 * std::acosh(std::fabs(m.trace()) / 2.0);
}

std::array<BoundaryVector, 2> fixed_vectors(const Isometry& m) {
  require_hyperbolic(m);
  double a = m.a(), b = m.b(), c = m.c(), d = m.d();
  if (a + d < 0) {
    a = -a, b = -b, c = -c, d = -d;
  }
  const double tr = a + d;
  const double root = std::sqrt((tr - 2.0) * (tr + 2.0));
  // Larger eigenvalue computed directly, smaller one from the product to avoid cancellation.
  const double big = (tr + root) / 2.0;
  const double small = 1.0 / big;
  auto eigenvector = [&](double lambda) -> BoundaryVector {
    BoundaryVector v1{b, lambda - a}, v2{lambda - d, c};
    return std::hypot(v1[0], v1[1]) >= std::hypot(v2[0], v2[1]) ? v1 : v2;
  };
  return {eigenvector(small), eigenvector(big)};
}

Geodesic axis(const Isometry& m) {
  const auto f = fixed_vectors(m);
  return {IdealPoint::from_vector(f[0]), IdealPoint::from_vector(f[1])};
}

bool interleaved(double a1, double a2, double b1, double b2) {
  const double lo = std::min(a1, a2), hi = std::max(a1, a2);
  const bool in1 = lo < b1 && b1 < hi;
  const bool in2 = lo < b2 && b2 < hi;
  return in1 != in2;
}

bool link(const Geodesic& a, const Geodesic& b, double eps) {
  const IdealPoint pts[4] = {a.u, a.v, b.u, b.v};
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      if (angular_distance(pts[i], pts[j]) < eps)
        fail(ErrorCode::SharedEndpoint, "geodesics share an endpoint near angle " +
                                            std::to_string(pts[i].angle));
  return interleaved(a.u.angle, a.v.angle, b.u.angle, b.v.angle);
}

Complex to_disk(Complex z) {
  const Complex i(0.0, 1.0);
  return (z - i) / (z + i);
}

Complex to_half_plane(Complex w) {
  const Complex i(0.0, 1.0);
  return i * (1.0 + w) / (1.0 - w);
}

double disk_distance(Complex z, Complex w) {
  return 2.0 * std::atanh(std::abs(z - w) / std::abs(1.0 - std::conj(w) * z));
}

Complex intersection_point(const Geodesic& a, const Geodesic& b) {
  const BoundaryVector r = a.u.vector(), t = a.v.vector();
  // N sends r to 0 and t to infinity, with positive determinant.
  double n00 = -r[1], n01 = r[0], n10 = -t[1], n11 = t[0];
  if (n00 * n11 - n01 * n10 < 0) n00 = -n00, n01 = -n01;
  auto image = [&](const BoundaryVector& v) {
    return (n00 * v[0] + n01 * v[1]) / (n10 * v[0] + n11 * v[1]);
  };
  const double y1 = image(b.u.vector()), y2 = image(b.v.vector());
  const Complex top(0.0, std::sqrt(std::fabs(y1 * y2)));
  const Complex z = (n11 * top - n01) / (-n10 * top + n00);
  return to_disk(z);
}

CubeConfiguration order_configuration(std::span<const Geodesic> lifts, double eps) {
  const int n = static_cast<int>(lifts.size());
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (!link(lifts[i], lifts[j], eps))
        fail(ErrorCode::NotPairwiseLinked,
             "geodesics " + std::to_string(i) + " and " + std::to_string(j) + " do not link");
  struct End {
    double angle;
    int owner;
  };
  std::vector<End> ends;
  for (int i = 0; i < n; ++i) {
    ends.push_back({lifts[i].u.angle, i});
    ends.push_back({lifts[i].v.angle, i});
  }
  std::sort(ends.begin(), ends.end(), [](const End& x, const End& y) { return x.angle < y.angle; });
  CubeConfiguration c;
  c.n = n;
  for (const End& e : ends) c.x.push_back(e.angle);
  for (int i = 0; i < n; ++i) {
    if (ends[i].owner != ends[i + n].owner)
      fail(ErrorCode::NotPairwiseLinked, "endpoints are not in antipodal position");
    c.geodesics.push_back({IdealPoint{c.x[i]}, IdealPoint{c.x[i + n]}});
    c.source.push_back(ends[i].owner);
  }
  return c;
}

CubeConfiguration cube_configuration(std::span<const Geodesic> lifts, double eps) {
  if (lifts.size() < 3)
    fail(ErrorCode::DimensionTooSmall,
         "a cube configuration needs 3 geodesics, got " + std::to_string(lifts.size()));
  return order_configuration(lifts, eps);
}

double chord(double a, double b) { return 2.0 * std::fabs(std::sin((a - b) / 2.0)); }

std::vector<DiagonalData> diagonal_data(const CubeConfiguration& c) {
  const int n = c.n;
  if (n < 3)
    fail(ErrorCode::DegenerateSeparator,
         "separators degenerate for a " + std::to_string(n) + "-cube");
  const int m = 2 * n;
  auto x = [&](int k) { return c.x[((k % m) + m) % m]; };
  std::vector<DiagonalData> out;
  for (int i = 0; i < n; ++i) {
    DiagonalData d;
    const double p = x(i), q = x(i + n);
    d.separator_p = {IdealPoint{x(i - 1)}, IdealPoint{x(i + 1)}};
    d.separator_q = {IdealPoint{x(i + n - 1)}, IdealPoint{x(i + n + 1)}};
    const double num = chord(p, x(i + n - 1)) * chord(p, x(i + n + 1)) * chord(q, x(i + 1)) *
                       chord(q, x(i - 1));
    const double den = chord(p, x(i + 1)) * chord(p, x(i - 1)) * chord(q, x(i + n + 1)) *
                       chord(q, x(i + n - 1));
    d.printed = num / den;
    d.length = 0.5 * std::log(d.printed);
    d.start = intersection_point(c.geodesics[i], d.separator_p);
    d.end = intersection_point(c.geodesics[i], d.separator_q);
    out.push_back(d);
  }
  return out;
}

std::array<Geodesic, 2> cross_of(const HShape& h, double eps) {
  if (link(h.first, h.second, eps)) fail(ErrorCode::InvalidH, "the sides of an H must be disjoint");
  std::array<double, 4> s{h.first.u.angle, h.first.v.angle, h.second.u.angle, h.second.v.angle};
  std::sort(s.begin(), s.end());
  return {Geodesic{IdealPoint{s[0]}, IdealPoint{s[2]}}, Geodesic{IdealPoint{s[1]}, IdealPoint{s[3]}}};
}

bool crosses_intersect(const HShape& h1, const HShape& h2, double eps) {
  const auto c1 = cross_of(h1, eps);
  const auto c2 = cross_of(h2, eps);
  for (const Geodesic& a : c1)
    for (const Geodesic& b : c2) {
      const IdealPoint pa[2] = {a.u, a.v}, pb[2] = {b.u, b.v};
      bool shared = false;
      for (auto x : pa)
        for (auto y : pb) shared |= angular_distance(x, y) < eps;
      if (!shared && interleaved(a.u.angle, a.v.angle, b.u.angle, b.v.angle)) return true;
    }
  return false;
}

}  // namespace hypcube
