#include "hypcube/constants.hpp"

#include <cstdlib>
#include <string>

namespace hypcube {

namespace {

Tolerances read_environment() {
  Tolerances t;
  if (const char* eps = std::getenv("HYPCUBE_EPSILON")) {
    try {
      double v = std::stod(eps);
      if (v > 0.0 && v < 1e-3) t.epsilon = v;
    } catch (...) {
    }
  }
  if (const char* cap = std::getenv("HYPCUBE_MAX_LIFTS")) {
    try {
      long long v = std::stoll(cap);
      if (v > 0) t.max_lifts = static_cast<std::size_t>(v);
    } catch (...) {
    }
  }
  return t;
}

}  // namespace

Tolerances tolerances() {
  static const Tolerances cached = read_environment();
  return cached;
}

}  // namespace hypcube
