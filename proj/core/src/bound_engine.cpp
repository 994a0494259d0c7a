#include "hypcube/bound_engine.hpp"

#include <gsl/gsl_multimin.h>
#include <gsl/gsl_vector.h>

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <limits>
#include <memory>
#include <numbers>
#include <random>
#include <string>

#include "hypcube/dual_cube.hpp"
#include "hypcube/error.hpp"
#include "hypcube/hyperbolic.hpp"

namespace hypcube {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double wrap_angle(double t) {
  t = std::fmod(t, kTwoPi);
  if (t < 0) t += kTwoPi;
  return t >= kTwoPi ? 0.0 : t;
}

double printed_value(const std::vector<double>& t) {
  const int m = static_cast<int>(t.size()), n = m / 2;
  auto x = [&](int k) { return t[((k % m) + m) % m]; };
  double total = 0.0;
  for (int j = 0; j < m; ++j) {
    const double num = chord(x(j), x(j + n + 1)) * chord(x(j), x(j + n - 1));
    const double den = chord(x(j), x(j + 1)) * chord(x(j), x(j - 1));
    total += std::log(num / den);
  }
  return total;
}

/// Nelder-Mead (GSL nmsimplex2) from x0; `step` is called after every
/// iteration with the current best value.
std::vector<double> simplex_descent(const std::function<double(const std::vector<double>&)>& f,
                                    const std::vector<double>& x0, double initial_step,
                                    int max_iterations, double size_tol,
                                    const std::function<void(double)>& step = {}) {
  const std::size_t dim = x0.size();
  if (dim == 0) return x0;
  struct Context {
    const std::function<double(const std::vector<double>&)>* f;
    std::vector<double> buffer;
  } ctx{&f, std::vector<double>(dim)};
  gsl_multimin_function fn;
  fn.n = dim;
  fn.params = &ctx;
  fn.f = [](const gsl_vector* v, void* params) {
    auto* c = static_cast<Context*>(params);
    for (std::size_t i = 0; i < c->buffer.size(); ++i) c->buffer[i] = gsl_vector_get(v, i);
    const double value = (*c->f)(c->buffer);
    return std::isfinite(value) ? value : std::numeric_limits<double>::max();
  };

  std::unique_ptr<gsl_vector, decltype(&gsl_vector_free)> x(gsl_vector_alloc(dim), gsl_vector_free);
  std::unique_ptr<gsl_vector, decltype(&gsl_vector_free)> steps(gsl_vector_alloc(dim), gsl_vector_free);
  for (std::size_t i = 0; i < dim; ++i) gsl_vector_set(x.get(), i, x0[i]);
  gsl_vector_set_all(steps.get(), initial_step);
  std::unique_ptr<gsl_multimin_fminimizer, decltype(&gsl_multimin_fminimizer_free)> s(
      gsl_multimin_fminimizer_alloc(gsl_multimin_fminimizer_nmsimplex2, dim),
      gsl_multimin_fminimizer_free);
  gsl_multimin_fminimizer_set(s.get(), &fn, x.get(), steps.get());
  for (int it = 0; it < max_iterations; ++it) {
    if (gsl_multimin_fminimizer_iterate(s.get())) break;
    if (step) step(s->fval);
    if (gsl_multimin_test_size(gsl_multimin_fminimizer_size(s.get()), size_tol) == GSL_SUCCESS) break;
  }
  std::vector<double> out(dim);
  for (std::size_t i = 0; i < dim; ++i) out[i] = gsl_vector_get(s->x, i);
  return out;
}

/// Angles from unconstrained log-gaps: the 2n gaps are 2*pi * softmax(z, 0),
/// starting at angle 0.
std::vector<double> angles_from_gaps(const std::vector<double>& z) {
  std::vector<double> w(z);
  w.push_back(0.0);
  const double top = *std::max_element(w.begin(), w.end());
  double total = 0.0;
  for (double& v : w) total += (v = std::exp(v - top));
  std::vector<double> t(w.size());
  double acc = 0.0;
  for (std::size_t k = 0; k < w.size(); ++k) {
    t[k] = acc;
    acc += kTwoPi * w[k] / total;
  }
  return t;
}

}  // namespace

AngleConfiguration::AngleConfiguration(std::vector<double> theta, double eps) : theta_(std::move(theta)) {
  const std::size_t m = theta_.size();
  if (m < 4 || m % 2 != 0)
    fail(ErrorCode::InvalidConfiguration, "need an even number (at least 4) of angles, got " +
                                              std::to_string(m));
  for (std::size_t j = 0; j < m; ++j) {
    if (!(theta_[j] >= 0.0 && theta_[j] < kTwoPi))
      fail(ErrorCode::InvalidConfiguration, "angle " + std::to_string(j) + " is outside [0, 2pi)");
    const double gap = j + 1 < m ? theta_[j + 1] - theta_[j] : theta_[0] + kTwoPi - theta_[j];
    if (!(gap > eps))
      fail(ErrorCode::InvalidConfiguration,
           "angles must increase strictly with gaps above " + std::to_string(eps));
  }
}

AngleConfiguration AngleConfiguration::regular(int n) {
  if (n < 2) fail(ErrorCode::InvalidConfiguration, "need n >= 2");
  std::vector<double> t(2 * n);
  for (int j = 0; j < 2 * n; ++j) t[j] = j * std::numbers::pi / n;
  return AngleConfiguration(std::move(t));
}

double AngleConfiguration::operator[](int j) const {
  const int m = static_cast<int>(theta_.size());
  return theta_[((j % m) + m) % m];
}

double F_printed(const AngleConfiguration& c) { return printed_value(c.angles()); }

double F_len(const AngleConfiguration& c) {
  if (c.n() < 3)
    fail(ErrorCode::DimensionTooSmall, "diagonals need n >= 3, got " + std::to_string(c.n()));
  return 0.5 * F_printed(c);
}

std::vector<double> F_gradient(const AngleConfiguration& c) {
  const int m = 2 * c.n(), n = c.n();
  auto cot_half = [&](int j, int k) { return 1.0 / std::tan((c[j] - c[k]) / 2.0); };
  std::vector<double> g(m);
  for (int j = 0; j < m; ++j)
    g[j] = cot_half(j, j + n - 1) + cot_half(j, j + n + 1) - cot_half(j, j + 1) - cot_half(j, j - 1);
  return g;
}

double cube_bound(int n) {
  const double c = std::cos(std::numbers::pi / n);
  return n * std::log((1.0 + c) / (1.0 - c));
}

double theorem_bound(std::span<const int> dims) {
  double total = 0.0;
  for (int n : dims) {
    if (n < 2) fail(ErrorCode::InvalidDimension, "cube dimension " + std::to_string(n) + " is below 2");
    if (n > 2) total += cube_bound(n);
  }
  return total;
}

AngleConfiguration normalize_configuration(const AngleConfiguration& c) {
  using C = std::complex<double>;
  const int n = c.n();
  const C z1 = std::polar(1.0, c[0]), z2 = std::polar(1.0, c[1]), z3 = std::polar(1.0, c[n]);
  const C w1 = 1.0, w2 = std::polar(1.0, std::numbers::pi / n), w3 = -1.0;
  // z -> u sends (z1, z2, z3) to (0, 1, inf); u -> w is the inverse of the
  // same map for (w1, w2, w3).
  const C kz = (z2 - z3) / (z2 - z1), kw = (w2 - w3) / (w2 - w1);
  std::vector<double> t;
  for (double a : c.angles()) {
    const C z = std::polar(1.0, a);
    const C u = (z - z1) * kz / (z - z3);
    const C w = std::abs(u - kw) == 0.0 ? w3 : (u * w3 - kw * w1) / (u - kw);
    t.push_back(wrap_angle(std::arg(w)));
  }
  t[0] = 0.0;
  t[n] = std::numbers::pi;
  std::sort(t.begin(), t.end());
  return AngleConfiguration(std::move(t));
}

FMinimum minimize_F(int n, int restarts, std::uint64_t seed) {
  if (n < 3) fail(ErrorCode::DimensionTooSmall, "minimize_F needs n >= 3, got " + std::to_string(n));
  if (restarts < 1) fail(ErrorCode::InvalidParameter, "restarts must be at least 1");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> start(-0.5, 0.5);
  double best_value = std::numeric_limits<double>::infinity();
  std::size_t evaluations = 0;
  auto objective = [&](const std::vector<double>& z) {
    ++evaluations;
    return printed_value(angles_from_gaps(z));
  };
  std::vector<double> best_z;
  for (int r = 0; r < restarts; ++r) {
    std::vector<double> z(2 * n - 1);
    for (double& v : z) v = start(rng);
    // Restart from the result until the simplex stops moving.
    double previous = std::numeric_limits<double>::infinity();
    for (int round = 0; round < 5; ++round) {
      z = simplex_descent(objective, z, 0.3, 20000, 1e-11);
      const double value = objective(z);
      if (previous - value < 1e-13) break;
      previous = value;
    }
    const double value = objective(z);
    if (value < best_value) {
      best_value = value;
      best_z = z;
    }
  }
  return {best_value, normalize_configuration(AngleConfiguration(angles_from_gaps(best_z))),
          evaluations};
}

double system_length(const Spine& spine, const std::vector<Word>& words,
                     std::span<const double> shears) {
  const Representation rep = build_rep(spine, shears);
  double total = 0.0;
  for (const Word& w : words) {
    const Isometry m = rep.evaluate(w);
    if (classify_isometry(m) == IsometryType::Hyperbolic) total += translation_length(m);
  }
  return total;
}

BoundCertificate verify_point(const CurveSystem& system, std::span<const double> shears, int L,
                              double tol) {
  const Spine spine(system.graph);
  const Representation rep = build_rep(spine, shears);
  std::vector<Word> words;
  for (const EdgePath& c : system.curves) words.push_back(spine.word(c));

  BoundCertificate cert;
  cert.radius = L;
  for (const Word& w : words) {
    cert.curve_lengths.push_back(curve_length(rep, w));
    cert.length += cert.curve_lengths.back();
  }

  const LiftSet ls = enumerate_lifts(rep, words, L);
  const CubeReport report = maximal_cubes(ls);
  const SelfIntersectionReport si = geometric_self_intersection(ls);
  cert.self_intersection = si.count;
  cert.self_intersection_stabilized = si.stabilized;

  std::vector<Cube> used, big;
  for (const Cube& cube : report.cubes) {
    const CubeClass& cls = report.classes[cube.orbit_class];
    if (cls.truncated || cls.dimension < 2) continue;
    used.push_back(cube);
    if (cls.dimension >= 3) big.push_back(cube);
  }
  const SeparationReport sep = separation_check(used, ls);
  if (!sep.pass) {
    const SeparationWitness& w = *sep.witness;
    std::string lifts;
    for (int l : w.shared) lifts += " " + std::to_string(l);
    fail(ErrorCode::SeparationFailed, "cubes " + std::to_string(w.first) + " and " +
                                          std::to_string(w.second) + " share lifts" + lifts +
                                          (w.off_pair ? " and have linked remaining lifts" : ""));
  }

  for (const CubeClass& cls : report.classes) {
    if (cls.truncated || cls.dimension < 2) continue;
    cert.dims.push_back(cls.dimension);
    if (cls.dimension >= 3) {
      cert.diagonal_sums.push_back(cube_diagonal_sum(report.cubes[cls.representative], ls));
      cert.diagonal_total += cert.diagonal_sums.back();
    }
  }
  std::sort(cert.dims.rbegin(), cert.dims.rend());
  cert.bound = theorem_bound(cert.dims);
  cert.margin = cert.length - cert.bound;
  cert.diagonals_inject = big.empty() || diagonal_injectivity_check(big, ls).pass;
  cert.length_covers_diagonals = cert.length >= cert.diagonal_total - tol;
  cert.diagonals_cover_bound = cert.diagonal_total >= cert.bound - tol;
  cert.chain_ok = cert.length_covers_diagonals && cert.diagonals_cover_bound && cert.diagonals_inject;
  if (cert.self_intersection > 0) {
    cert.bound_per_intersection = cert.bound / static_cast<double>(cert.self_intersection);
    cert.length_per_intersection = cert.length / static_cast<double>(cert.self_intersection);
  }
  return cert;
}

InfimumEstimate estimate_infimum(const CurveSystem& system, const OptimizerConfig& config) {
  if (config.iterations < 1 || config.restarts < 1)
    fail(ErrorCode::InvalidParameter, "iterations and restarts must be at least 1");
  const Spine spine(system.graph);
  std::vector<Word> words;
  for (const EdgePath& c : system.curves) words.push_back(spine.word(c));

  std::mt19937_64 rng(config.seed);
  std::uniform_real_distribution<double> start(-config.box, config.box);
  std::vector<ShearVector> starts(config.restarts, ShearVector(spine.shear_dimension()));
  for (ShearVector& x : starts)
    for (double& v : x) v = start(rng);

  InfimumEstimate est;
  try {
    const BoundCertificate cert = verify_point(system, starts[0], config.radius);
    est.separation_certified = true;
    est.bound = cert.bound;
    est.dims = cert.dims;
    est.self_intersection = cert.self_intersection;
  } catch (const Error& e) {
    if (e.code() != ErrorCode::SeparationFailed && e.code() != ErrorCode::ParabolicCurve) throw;
  }

  auto objective = [&](const std::vector<double>& x) {
    try {
      return system_length(spine, words, x);
    } catch (const Error& e) {
      if (e.code() == ErrorCode::DegenerateStructure) return std::numeric_limits<double>::infinity();
      throw;
    }
  };
  est.best_length = std::numeric_limits<double>::infinity();
  for (const ShearVector& x0 : starts) {
    const double first = objective(x0);
    if (first < est.best_length) {
      est.best_length = first;
      est.best_shears = x0;
    }
    const ShearVector x = simplex_descent(objective, x0, 1.0, config.iterations, 1e-9, [&](double v) {
      ++est.iterations;
      est.best_length = std::min(est.best_length, v);
      est.trace.emplace_back(est.iterations, est.best_length);
    });
    const double value = objective(x);
    if (value <= est.best_length) {
      est.best_length = value;
      est.best_shears = x;
    }
  }
  est.reached_floor = est.best_length <= config.floor;
  if (est.self_intersection > 0) {
    est.length_per_intersection = est.best_length / static_cast<double>(est.self_intersection);
    est.bound_per_intersection = est.bound / static_cast<double>(est.self_intersection);
  }
  return est;
}

}  // namespace hypcube
