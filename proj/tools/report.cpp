#include "report.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <sstream>

namespace hypcube::cli {

namespace {

Json header(const char* command) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["command"] = command;
  return j;
}

Json numbers(const std::vector<double>& xs) {
  Json out = Json::array();
  for (double x : xs) out.push_back(number(x));
  return out;
}

Json optional_number(const std::optional<double>& x) { return x ? number(*x) : Json(nullptr); }

Json surface_json(const SurfaceInvariants& s) {
  Json j;
  j["euler_characteristic"] = s.euler_characteristic;
  j["genus"] = s.genus;
  j["boundary_count"] = s.boundary_count;
  return j;
}

}  // namespace

Json number(double x) {
  if (!std::isfinite(x)) return nullptr;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.9g", x);
  return std::strtod(buf, nullptr);
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Json curves_report(const EvenRibbonGraph& g, const std::optional<GluingSpec>& gluing) {
  const Fatgraph fg = g.to_fatgraph();
  const std::vector<Word> words = curve_words(g, default_spanning_tree(fg));
  const auto walks = boundary_walks(g);
  Json j = header("curves");
  j["vertices"] = g.vertex_count();
  j["edges"] = g.edge_count();
  j["surface"] = surface_json(walks.surface);
  if (gluing) {
    SurfaceInvariants capped = walks.surface;
    capped.boundary_count -= static_cast<int>(gluing->capped.size());
    capped.euler_characteristic += static_cast<int>(gluing->capped.size());
    j["capped_surface"] = surface_json(capped);
  }
  j["self_intersection"] = combinatorial_self_intersection(g);
  const auto curves = extract_curves(g);
  j["curve_count"] = curves.size();
  Json list = Json::array();
  for (std::size_t c = 0; c < curves.size(); ++c) {
    Json item;
    Json visits = Json::array();
    for (int id : curves[c].visits) visits.push_back(g.label(id));
    item["visits"] = visits;
    item["passages"] = curves[c].passages;
    item["word"] = words[c].to_string();
    list.push_back(item);
  }
  j["curves"] = list;
  return j;
}

Json faces_report(const EvenRibbonGraph& g, const GluingSpec& gluing, const FaceReport& faces) {
  const auto walks = boundary_walks(g);
  Json j = header("faces");
  Json all = Json::array();
  for (const BoundaryWalk& w : walks.walks) {
    Json item;
    item["side_count"] = w.side_count;
    item["steps"] = w.steps;
    all.push_back(item);
  }
  j["walks"] = all;
  j["capped"] = gluing.capped;
  Json capped = Json::array();
  for (auto [index, sides] : faces.capped_faces) capped.push_back({{"walk", index}, {"side_count", sides}});
  j["capped_faces"] = capped;
  j["has_monogon"] = faces.has_monogon;
  j["has_bigon"] = faces.has_bigon;
  j["has_triangle"] = faces.has_triangle;
  j["pass"] = faces.pass();
  return j;
}

Json cubes_report(const LiftSet& ls, const CubeReport& cubes, const SelfIntersectionReport& si,
                  const SeparationReport& sep) {
  Json j = header("cubes");
  j["radius"] = ls.radius();
  j["lift_count"] = ls.size();
  j["linked_pairs"] = ls.linked_pair_count();
  Json lengths = Json::array();
  for (std::size_t c = 0; c < ls.curves().size(); ++c) lengths.push_back(number(ls.curve_length(static_cast<int>(c))));
  j["curve_lengths"] = lengths;
  Json sij;
  sij["count"] = si.count;
  sij["per_radius"] = si.per_radius;
  sij["stabilization_radius"] = si.stabilization_radius;
  sij["stabilized"] = si.stabilized;
  j["self_intersection"] = sij;
  j["max_dimension"] = cubes.max_dimension();
  Json classes = Json::array();
  for (const CubeClass& c : cubes.classes) {
    Json item;
    item["dimension"] = c.dimension;
    item["truncated"] = c.truncated;
    item["count"] = c.count;
    item["representative"] = cubes.cubes[c.representative].lifts;
    Json tags = Json::array();
    for (int l : cubes.cubes[c.representative].lifts) tags.push_back(ls.lifts()[l].tag.to_string());
    item["tags"] = tags;
    classes.push_back(item);
  }
  j["classes"] = classes;
  Json s;
  s["pass"] = sep.pass;
  s["pairs_checked"] = sep.pairs_checked;
  if (sep.witness) {
    Json w;
    w["first"] = sep.witness->first;
    w["second"] = sep.witness->second;
    w["shared"] = sep.witness->shared;
    w["off_pair"] = sep.witness->off_pair ? Json(*sep.witness->off_pair) : Json(nullptr);
    s["witness"] = w;
  } else {
    s["witness"] = nullptr;
  }
  j["separation"] = s;
  return j;
}

Json bound_report(const std::vector<int>& dims, double bound) {
  Json j = header("bound");
  j["dims"] = dims;
  Json per = Json::array();
  for (int n : dims) per.push_back(number(n > 2 ? cube_bound(n) : 0.0));
  j["per_cube"] = per;
  j["bound"] = number(bound);
  return j;
}

Json fmin_report(int n, const FMinimum& m) {
  Json j = header("fmin");
  j["n"] = n;
  j["min_printed"] = number(m.value);
  j["min_length"] = number(0.5 * m.value);
  j["cube_bound"] = number(cube_bound(n));
  j["argmin"] = numbers(m.argmin.angles());
  j["evaluations"] = m.evaluations;
  return j;
}

Json certificate_report(const BoundCertificate& c) {
  Json j = header("verify");
  j["dims"] = c.dims;
  j["bound"] = number(c.bound);
  j["length"] = number(c.length);
  j["margin"] = number(c.margin);
  j["chain_ok"] = c.chain_ok;
  j["radius"] = c.radius;
  j["curve_lengths"] = numbers(c.curve_lengths);
  j["diagonal_sums"] = numbers(c.diagonal_sums);
  j["diagonal_total"] = number(c.diagonal_total);
  Json chain;
  chain["length_ge_diagonals"] = c.length_covers_diagonals;
  chain["diagonals_ge_bound"] = c.diagonals_cover_bound;
  chain["diagonals_inject"] = c.diagonals_inject;
  j["chain"] = chain;
  j["self_intersection"] = c.self_intersection;
  j["self_intersection_stabilized"] = c.self_intersection_stabilized;
  j["bound_per_intersection"] = optional_number(c.bound_per_intersection);
  j["length_per_intersection"] = optional_number(c.length_per_intersection);
  return j;
}

Json refusal_report(const std::string& reason) {
  Json j = header("verify");
  j["certified"] = false;
  j["reason"] = reason;
  return j;
}

Json infimum_report(const InfimumEstimate& e) {
  Json j = header("minimize");
  j["best_length"] = number(e.best_length);
  j["reached_floor"] = e.reached_floor;
  j["bound"] = number(e.bound);
  j["separation_certified"] = e.separation_certified;
  j["dims"] = e.dims;
  j["gap"] = number(e.best_length - e.bound);
  j["iterations"] = e.iterations;
  j["best_shears"] = numbers(e.best_shears);
  j["self_intersection"] = e.self_intersection;
  j["length_per_intersection"] = optional_number(e.length_per_intersection);
  j["bound_per_intersection"] = optional_number(e.bound_per_intersection);
  return j;
}

std::string trace_csv(const InfimumEstimate& e) {
  std::ostringstream out;
  out << "iter,best_length\n";
  char buf[32];
  for (auto [iter, best] : e.trace) {
    std::snprintf(buf, sizeof buf, "%.9g", best);
    out << iter << ',' << buf << '\n';
  }
  return out.str();
}

}  // namespace hypcube::cli
