// convexip: command-line front end.
//
// Exit codes: 0 success, 2 input error, 3 internal invariant violation.

#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <string>

#include <CLI11.hpp>

#include "convexip/convexip.hpp"

namespace {

using namespace cvx;

struct Globals {
  std::uint64_t seed = 0;
  std::size_t grid = 4096;
  double tol = 1e-9;
  bool pretty = false;
};

void emit(const Json& j, const Globals& g, const std::string& out_path = {}) {
  const std::string text = dump_json(j, g.pretty) + "\n";
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(out_path);
  if (!f) throw InputError("cannot write '" + out_path + "'");
  f << text;
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream f(path);
  if (!f) throw InputError("cannot write '" + path + "'");
  f << text;
}

Body load_body(const std::string& path) { return body_from_json(read_json_file(path), path); }

InnerProduct load_ip(const std::string& path, std::size_t dim, const Globals& g) {
  if (path.empty()) {
    SphericalL2 s;
    s.dim = dim;
    s.grid = g.grid;
    s.seed = g.seed;
    return InnerProduct(s);
  }
  InnerProduct ip(setip_from_json(read_json_file(path), path));
  if (ip.dim() != dim)
    throw DimensionError("set inner product has dimension " + std::to_string(ip.dim()) + ", bodies have " +
                         std::to_string(dim));
  return ip;
}

BodySampler sampler_for(std::size_t dim) {
  if (dim == 1) return [](std::mt19937_64& rng) { return random_interval(rng); };
  if (dim == 2) return [](std::mt19937_64& rng) { return random_polygon(rng); };
  return [dim](std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    std::vector<Vec> pts(dim + 2, Vec(dim));
    for (auto& p : pts)
      for (auto& x : p) x = u(rng);
    return polytope_from_points(pts);
  };
}

int run(int argc, char** argv) {
  CLI::App app{"Convex bodies through support functions: set inner products, lines, diversities and "
               "ancestral reconstruction on trees."};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--seed", g.seed, "Seed for randomized checks and direction grids");
  app.add_option("--grid", g.grid, "Direction grid size for quadrature")->check(CLI::PositiveNumber);
  app.add_option("--tol", g.tol, "Tolerance for containment and validity tests");
  app.add_flag("--pretty", g.pretty, "Indent JSON output");

  std::string a_path, b_path, ip_path, out_path, svg_path;

  auto* ip_cmd = app.add_subcommand("ip", "Inner product, norms and distance of two bodies");
  ip_cmd->add_option("a", a_path, "Body JSON")->required();
  ip_cmd->add_option("b", b_path, "Body JSON")->required();
  ip_cmd->add_option("--ip", ip_path, "Set inner product JSON (default: spherical L2)");

  std::string tree_path, leaves_path;
  bool strict = true, canonical = false;
  auto* rec = app.add_subcommand("reconstruct", "Minimum squared-parsimony ancestral bodies on a tree");
  rec->add_option("tree", tree_path, "Newick file")->required();
  rec->add_option("leaves", leaves_path, "Leaf assignment JSON")->required();
  rec->add_option("--ip", ip_path, "Set inner product used for the tree length");
  rec->add_flag("--strict-binary,!--no-strict-binary", strict, "Require degree-3 internal nodes (default on)");
  rec->add_flag("--canonicalize", canonical, "Write 2D polytope ancestors as explicit polygons");
  rec->add_option("--svg", svg_path, "Also draw the tree with its bodies");
  rec->add_option("-o,--output", out_path, "Write JSON here instead of stdout");

  std::size_t frames = 5;
  auto* seg = app.add_subcommand("segment", "Draw the segment alpha S + (1-alpha) C");
  seg->add_option("s", a_path, "Body S (alpha = 1)")->required();
  seg->add_option("c", b_path, "Body C (alpha = 0)")->required();
  seg->add_option("--frames", frames, "Number of frames")->check(CLI::PositiveNumber);
  seg->add_option("-o,--output", out_path, "SVG path")->required();

  std::size_t steps = 4;
  double spacing = 0.5;
  auto* plane = app.add_subcommand("plane", "Draw the cone alpha C + beta T over a lattice");
  plane->add_option("c", a_path, "Body C")->required();
  plane->add_option("t", b_path, "Body T")->required();
  plane->add_option("--steps", steps, "Lattice points per axis")->check(CLI::PositiveNumber);
  plane->add_option("--spacing", spacing, "Lattice spacing")->check(CLI::PositiveNumber);
  plane->add_option("-o,--output", out_path, "SVG path")->required();

  std::size_t trials = 1000;
  std::size_t dim = 2;
  std::string form = "ip";
  auto* ax = app.add_subcommand("axioms", "Check the set inner product axioms on random bodies");
  ax->add_option("--ip", ip_path, "Set inner product JSON (default: spherical L2)");
  ax->add_option("--dim", dim, "Dimension when no --ip is given")->check(CLI::PositiveNumber);
  ax->add_option("--trials", trials, "Number of random triples")->check(CLI::PositiveNumber);
  ax->add_option("--form", form, "ip | counterexample")->check(CLI::IsMember({"ip", "counterexample"}));

  auto* cex = app.add_subcommand("counterexample", "Cauchy-Schwarz gap of the counterexample form");

  std::string points_path;
  auto* div = app.add_subcommand("diversity", "Diversity of a finite point set");
  div->add_option("points", points_path, "PointSet JSON")->required();
  div->add_option("--ip", ip_path, "Set inner product JSON (default: spherical L2)");

  auto* cls = app.add_subcommand("classify", "Classify the line through two planar bodies");
  cls->add_option("a", a_path, "Body JSON")->required();
  cls->add_option("b", b_path, "Body JSON")->required();

  auto* st = app.add_subcommand("steiner", "Center / Steiner point of a body");
  st->add_option("a", a_path, "Body JSON")->required();
  st->add_option("--ip", ip_path, "Set inner product JSON (default: spherical L2)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  if (*ip_cmd) {
    const Body a = load_body(a_path), b = load_body(b_path);
    require_dim(b.dim(), a.dim(), "ip");
    const InnerProduct ip = load_ip(ip_path, a.dim(), g);
    const auto pa = ip.profile(a), pb = ip.profile(b);
    const double ab = ip.inner(pa, pb), aa = ip.inner(pa, pa), bb = ip.inner(pb, pb);
    emit({{"ip", ab},
          {"norm_a", std::sqrt(std::max(0.0, aa))},
          {"norm_b", std::sqrt(std::max(0.0, bb))},
          {"distance", std::sqrt(std::max(0.0, ip.distance_sq(pa, pb)))}},
         g);
  } else if (*rec) {
    const Phylogeny tree = parse_newick(read_text_file(tree_path), {strict});
    for (const auto& w : tree.warnings) std::cerr << "warning: " << w << "\n";
    const LeafAssignment chi = leaves_from_json(read_json_file(leaves_path), leaves_path);
    check_assignment(tree, chi);
    const LambdaMatrix lambda = lambda_coefficients(tree, {strict});
    const Extension ext = reconstruct(tree, chi, lambda, {canonical});
    const InnerProduct ip = load_ip(ip_path, chi.begin()->second.dim(), g);
    Json ancestors = Json::object();
    for (std::size_t v = 0; v < tree.size(); ++v)
      if (!tree.is_leaf(v)) ancestors[ext.node_ids[v]] = to_json(ext.bodies[v]);
    emit({{"lambda", to_json(lambda)}, {"ancestors", ancestors}, {"length", tree_length(ip, tree, ext)}}, g,
         out_path);
    if (!svg_path.empty()) write_text(svg_path, render_tree(tree, ext));
  } else if (*seg) {
    write_text(out_path, render_segment(load_body(a_path), load_body(b_path), frames));
  } else if (*plane) {
    write_text(out_path, render_plane(load_body(a_path), load_body(b_path), steps, spacing));
  } else if (*ax) {
    AxiomCheckOptions opt;
    opt.trials = trials;
    opt.seed = g.seed;
    opt.tolerance = g.tol;
    AxiomReport report;
    if (form == "counterexample") {
      opt.extra_pairs.emplace_back(Body::ball({0.0, 0.0}, 1.0),
                                   polytope_from_points({{0.0, 0.0}, {1.0, 0.0}, {0.0, 1.0}}));
      report = axiom_check(counterexample_form, sampler_for(2), opt);
    } else {
      std::optional<InnerProduct> ip;
      if (ip_path.empty()) {
        ip.emplace(load_ip({}, dim, g));
      } else {
        ip.emplace(setip_from_json(read_json_file(ip_path), ip_path));
      }
      report = axiom_check(*ip, sampler_for(ip->dim()), opt);
    }
    emit(to_json(report), g);
  } else if (*cex) {
    emit({{"gap", counterexample_gap()}}, g);
  } else if (*div) {
    const PointSet s = point_set_from_json(read_json_file(points_path), points_path);
    const InnerProduct ip = load_ip(ip_path, s.dim(), g);
    emit({{"diversity", diversity(ip, s)}, {"points", s.size()}}, g);
  } else if (*cls) {
    const Body a = load_body(a_path), b = load_body(b_path);
    Json verdict = to_json(classify_line(a, b, g.tol));
    emit(verdict, g);
  } else if (*st) {
    const Body a = load_body(a_path);
    const InnerProduct ip = load_ip(ip_path, a.dim(), g);
    const Vec k = ip.center(a);
    Json out{{"center", k}, {"contained", contains_point(a, k, g.tol)}};
    if (std::holds_alternative<SphericalL2>(ip.spec())) out["steiner_point"] = steiner_point(a, {g.grid, g.seed});
    emit(out, g);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const cvx::InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const cvx::InvariantError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
}
