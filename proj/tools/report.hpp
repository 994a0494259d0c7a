#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "hypcube/bound_engine.hpp"
#include "hypcube/dual_cube.hpp"
#include "hypcube/ribbon_graph.hpp"

namespace hypcube::cli {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

/// Rounded to 9 significant digits; null when not finite.
Json number(double x);

/// Pretty-printed with a trailing newline.
std::string dump(const Json& j);

Json curves_report(const EvenRibbonGraph& g, const std::optional<GluingSpec>& gluing);
Json faces_report(const EvenRibbonGraph& g, const GluingSpec& gluing, const FaceReport& faces);
Json cubes_report(const LiftSet& ls, const CubeReport& cubes, const SelfIntersectionReport& si,
                  const SeparationReport& sep);
Json bound_report(const std::vector<int>& dims, double bound);
Json fmin_report(int n, const FMinimum& m);
Json certificate_report(const BoundCertificate& c);
Json refusal_report(const std::string& reason);
Json infimum_report(const InfimumEstimate& e);

/// "iter,best_length" followed by one row per trace entry.
std::string trace_csv(const InfimumEstimate& e);

}  // namespace hypcube::cli
