#include "commands.hpp"

#include <cstdint>
#include <fstream>
#include <optional>
#include <ostream>
#include <random>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hypcube/bound_engine.hpp"
#include "hypcube/dual_cube.hpp"
#include "hypcube/error.hpp"
#include "io.hpp"
#include "report.hpp"

namespace hypcube::cli {

namespace {

struct Options {
  std::string graph, gluing, shears, output, trace, format = "json";
  std::vector<int> dims;
  int n = 3;
  int radius = 3;
  int iterations = 400;
  int restarts = 4;
  std::uint64_t seed = 1;
  double box = kDefaultShearBox;
  double tolerance = tolerances().epsilon;
  bool random_shears = false;
};

CurveSystem system_of(const Options& o) {
  const EvenRibbonGraph g = load_graph(o.graph);
  if (o.gluing.empty()) return curve_system(g);
  return fill_faces(g, load_gluing(o.gluing));
}

ShearVector shears_for(const Options& o, const CurveSystem& system) {
  const Spine spine(system.graph);
  if (!o.shears.empty()) return load_shears(o.shears);
  ShearVector x(spine.shear_dimension(), 0.0);
  if (o.random_shears) {
    std::mt19937_64 rng(o.seed);
    std::uniform_real_distribution<double> u(-o.box, o.box);
    for (double& v : x) v = u(rng);
  }
  return x;
}

void write(const Options& o, std::ostream& out, const std::string& text) {
  if (o.output.empty()) {
    out << text;
    return;
  }
  std::ofstream f(o.output);
  if (!f) throw InputError("cannot write " + o.output);
  f << text;
}

void require_json(const Options& o) {
  if (o.format != "json") throw CLI::ValidationError("--format", "csv output is only available for minimize traces");
}

int run_curves(const Options& o, std::ostream& out) {
  require_json(o);
  const EvenRibbonGraph g = load_graph(o.graph);
  std::optional<GluingSpec> gluing;
  if (!o.gluing.empty()) {
    gluing = load_gluing(o.gluing);
    check_gluing(g, *gluing);
  }
  write(o, out, dump(curves_report(g, gluing)));
  return kExitOk;
}

int run_faces(const Options& o, std::ostream& out) {
  require_json(o);
  const EvenRibbonGraph g = load_graph(o.graph);
  const GluingSpec gluing = o.gluing.empty() ? GluingSpec{} : load_gluing(o.gluing);
  const FaceReport faces = check_gluing(g, gluing);
  write(o, out, dump(faces_report(g, gluing, faces)));
  return faces.pass() ? kExitOk : kExitCheckFailed;
}

int run_cubes(const Options& o, std::ostream& out) {
  require_json(o);
  const CurveSystem system = system_of(o);
  const Spine spine(system.graph);
  const ShearVector x = shears_for(o, system);
  const Representation rep = build_rep(spine, x);
  std::vector<Word> words;
  for (const EdgePath& c : system.curves) words.push_back(spine.word(c));
  const LiftSet ls = enumerate_lifts(rep, words, o.radius);
  const CubeReport cubes = maximal_cubes(ls);
  std::vector<Cube> used;
  for (const Cube& c : cubes.cubes) {
    const CubeClass& cls = cubes.classes[c.orbit_class];
    if (!cls.truncated && cls.dimension >= 2) used.push_back(c);
  }
  const SeparationReport sep = separation_check(used, ls);
  write(o, out, dump(cubes_report(ls, cubes, geometric_self_intersection(ls), sep)));
  return sep.pass ? kExitOk : kExitCheckFailed;
}

int run_bound(const Options& o, std::ostream& out) {
  require_json(o);
  write(o, out, dump(bound_report(o.dims, theorem_bound(o.dims))));
  return kExitOk;
}

int run_fmin(const Options& o, std::ostream& out) {
  require_json(o);
  write(o, out, dump(fmin_report(o.n, minimize_F(o.n, o.restarts, o.seed))));
  return kExitOk;
}

int run_verify(const Options& o, std::ostream& out) {
  require_json(o);
  const CurveSystem system = system_of(o);
  const ShearVector x = shears_for(o, system);
  try {
    const BoundCertificate cert = verify_point(system, x, o.radius, o.tolerance);
    write(o, out, dump(certificate_report(cert)));
    return cert.chain_ok && cert.margin >= -o.tolerance ? kExitOk : kExitCheckFailed;
  } catch (const Error& e) {
    if (e.code() != ErrorCode::SeparationFailed) throw;
    write(o, out, dump(refusal_report(e.what())));
    return kExitCheckFailed;
  }
}

int run_minimize(const Options& o, std::ostream& out) {
  OptimizerConfig config;
  config.iterations = o.iterations;
  config.restarts = o.restarts;
  config.seed = o.seed;
  config.box = o.box;
  config.radius = o.radius;
  const InfimumEstimate est = estimate_infimum(system_of(o), config);
  if (!o.trace.empty()) {
    std::ofstream f(o.trace);
    if (!f) throw InputError("cannot write " + o.trace);
    f << trace_csv(est);
  }
  write(o, out, o.format == "csv" ? trace_csv(est) : dump(infimum_report(est)));
  return kExitOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Curve systems, dual cubes and length bounds on hyperbolic surfaces", "hypcube"};
  app.require_subcommand(1);
  Options o;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("-o,--output", o.output, "Write the report here instead of stdout");
    sub->add_option("--format", o.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  };
  auto add_graph = [&](CLI::App* sub, bool gluing_required) {
    sub->add_option("--graph", o.graph, "Graph file {\"strands\", \"pairs\"}")->required()->check(CLI::ExistingFile);
    auto* g = sub->add_option("--gluing", o.gluing, "Gluing file {\"capped\"}")->check(CLI::ExistingFile);
    if (gluing_required) g->required();
  };
  auto add_geometry = [&](CLI::App* sub) {
    sub->add_option("--shears", o.shears, "Shear vector file (JSON array)")->check(CLI::ExistingFile);
    sub->add_flag("--random-shears", o.random_shears, "Draw shears uniformly from [-box, box]");
    sub->add_option("-L,--radius", o.radius, "Truncation radius")->check(CLI::Range(1, 8));
  };
  auto add_random = [&](CLI::App* sub) {
    sub->add_option("--seed", o.seed, "Random seed");
    sub->add_option("--box", o.box, "Shear sampling box")->check(CLI::PositiveNumber);
  };

  auto* curves = app.add_subcommand("curves", "Curves, self-intersection and surface invariants");
  add_common(curves);
  add_graph(curves, false);

  auto* faces = app.add_subcommand("faces", "Small disk faces of a gluing");
  add_common(faces);
  add_graph(faces, false);

  auto* cubes = app.add_subcommand("cubes", "Maximal cubes and their separation");
  add_common(cubes);
  add_graph(cubes, false);
  add_geometry(cubes);
  add_random(cubes);

  auto* bound = app.add_subcommand("bound", "Lower bound for given cube dimensions");
  add_common(bound);
  bound->add_option("--dims", o.dims, "Cube dimensions, comma separated")->required()->delimiter(',');

  auto* fmin = app.add_subcommand("fmin", "Minimum of F over 2n cyclically ordered points");
  add_common(fmin);
  fmin->add_option("--n", o.n, "Cube dimension")->check(CLI::Range(3, 64));
  fmin->add_option("--restarts", o.restarts, "Random restarts")->check(CLI::Range(1, 1000));
  fmin->add_option("--seed", o.seed, "Random seed");

  auto* verify = app.add_subcommand("verify", "Bound certificate at one point");
  add_common(verify);
  add_graph(verify, false);
  add_geometry(verify);
  add_random(verify);
  verify->add_option("--tolerance", o.tolerance, "Slack for each inequality")->check(CLI::NonNegativeNumber);

  auto* minimize = app.add_subcommand("minimize", "Estimate the infimum of the length");
  add_common(minimize);
  add_graph(minimize, false);
  add_random(minimize);
  minimize->add_option("-L,--radius", o.radius, "Radius used for the bound")->check(CLI::Range(1, 8));
  minimize->add_option("--iters", o.iterations, "Simplex iterations per restart")->check(CLI::Range(1, 1000000));
  minimize->add_option("--restarts", o.restarts, "Random restarts")->check(CLI::Range(1, 1000));
  minimize->add_option("--trace", o.trace, "Also write the CSV trace here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*curves) return run_curves(o, out);
    if (*faces) return run_faces(o, out);
    if (*cubes) return run_cubes(o, out);
    if (*bound) return run_bound(o, out);
    if (*fmin) return run_fmin(o, out);
    if (*verify) return run_verify(o, out);
    return run_minimize(o, out);
  } catch (const CLI::ValidationError& e) {
    err << "error: " << e.what() << "\n";
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
  }
  return kExitUsage;
}

}  // namespace hypcube::cli
