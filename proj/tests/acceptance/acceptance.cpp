// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "common/oracles.hpp"

using namespace cvx;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail << " [failed: " << what << "]";
    }
  }
};

Body unit_triangle() { return polytope_from_points({{0, 0}, {1, 0}, {0, 1}}); }
Body square(double lo, double hi) { return polytope_from_points({{lo, lo}, {hi, lo}, {hi, hi}, {lo, hi}}); }

Body as_body(const std::vector<Vec2>& pts) {
  std::vector<Vec> v;
  for (auto p : pts) v.push_back({p.x, p.y});
  return polytope_from_points(v);
}

double rel(double got, double want) { return std::abs(got - want) / std::max(1.0, std::abs(want)); }

void criterion_1(Outcome& o) {
  double gap = 0.0;
  const double secs = oracle::seconds([&] { gap = counterexample_gap(); });
  const double want = 6.0 * std::sqrt(2.0) - 33.0 / 4.0;
  o.detail.precision(12);
  o.detail << "gap=" << gap << " err=" << std::abs(gap - want) << " t=" << secs * 1e3 << "ms";
  o.require(std::abs(gap - want) <= 1e-9, "value");
  o.require(secs < 0.010, "runtime");
}

void criterion_2(Outcome& o) {
  const double v = ip(Matrix1D{}, Interval{0, 1}, Interval{0, 2});
  o.detail << "<[0,1],[0,2]>=" << v;
  o.require(v == 2.0, "exact value");
}

void criterion_3(Outcome& o) {
  const Matrix1D m{{{{2, 3}, {3, 5}}}};
  const double k = center(m, Interval{0, 1});
  const bool inside = subset(Body::point({k}), polytope_from_points({{0.0}, {1.0}}));
  o.detail << "k_A=" << k << " inside=" << inside;
  o.require(std::abs(k + 1.0) <= 1e-12, "center");
  o.require(!inside, "membership");
}

void criterion_4(Outcome& o) {
  std::mt19937_64 rng(4);
  std::string nwk = "(";
  for (int i = 0; i < 10; ++i) nwk += (i ? ",L" : "L") + std::to_string(i);
  nwk += ");";
  const Phylogeny t = parse_newick(nwk, {.strict_binary = false});
  double worst = 0.0;
  for (int rep = 0; rep < 20; ++rep) {
    LeafAssignment chi;
    std::vector<Vec2> sum{{0, 0}};
    for (const auto& n : t.leaf_names()) {
      const Body b = random_polygon(rng);
      chi.emplace(n, b);
      sum = oracle::pairwise_sum_hull(sum, polygon_vertices(b));
    }
    for (auto& p : sum) p = 0.1 * p;
    const Extension ext = reconstruct(t, chi, LambdaOptions{.strict_binary = false});
    worst = std::max(worst, hausdorff(ext.at("i0"), as_body(sum)));
  }
  o.detail << "20 stars of 10 polygons, worst hausdorff=" << worst;
  o.require(worst <= 1e-9, "mean");
}

void criterion_5(Outcome& o) {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<std::size_t> leaves(4, 64);
  double gap = 0.0, row_err = 0.0;
  bool diag = true;
  const double secs = oracle::seconds([&] {
    for (int rep = 0; rep < 50; ++rep) {
      const Phylogeny t = oracle::random_binary_tree(leaves(rng), rng);
      const LambdaMatrix m = lambda_coefficients(t), ref = laplacian_oracle(t);
      for (std::size_t v = 0; v < t.size(); ++v) {
        double s = 0.0;
        for (std::size_t j = 0; j < m.leaf_names.size(); ++j) {
          gap = std::max(gap, std::abs(m.at(v, j) - ref.at(v, j)));
          s += m.at(v, j);
        }
        row_err = std::max(row_err, std::abs(s - 1.0));
      }
      for (std::size_t j = 0; j < m.leaf_nodes.size(); ++j) diag = diag && m.at(m.leaf_nodes[j], j) == 1.0;
    }
  });
  o.detail << "50 trees, max gap=" << gap << " row err=" << row_err << " t=" << secs << "s";
  o.require(gap <= 1e-10, "oracle");
  o.require(row_err <= 1e-10, "row sums");
  o.require(diag, "leaf indicators");
  o.require(secs < 5.0, "runtime");
}

void criterion_6(Outcome& o) {
  const Phylogeny t = parse_newick("((A,B),(C,D));");
  const LambdaMatrix m = lambda_coefficients(t);
  const std::vector<std::vector<double>> want{{0.375, 0.375, 0.125, 0.125}, {0.125, 0.125, 0.375, 0.375}};
  double err = 0.0;
  std::size_t row = 0;
  for (std::size_t v = 0; v < t.size(); ++v) {
    if (t.is_leaf(v)) continue;
    for (std::size_t j = 0; j < 4; ++j) err = std::max(err, std::abs(m.at(v, j) - want.at(row)[j]));
    ++row;
  }
  o.detail << "internal rows=" << row << " max err=" << err;
  o.require(row == 2 && err <= 1e-12, "rows");
}

void criterion_7(Outcome& o) {
  std::mt19937_64 rng(7);
  const InnerProduct plain{SphericalL2{}}, weighted{oracle::weighted_l2()};
  std::uniform_int_distribution<std::size_t> leaves(4, 10);
  double margin = 1e300;
  for (int rep = 0; rep < 20; ++rep) {
    const Phylogeny t = oracle::random_binary_tree(leaves(rng), rng);
    const LeafAssignment chi = oracle::random_leaves(t, rng);
    const Extension best = reconstruct(t, chi);
    for (const InnerProduct* ip : {&plain, &weighted}) {
      const double base = tree_length(*ip, t, best);
      for (int k = 0; k < 100; ++k) margin = std::min(margin, tree_length(*ip, t, oracle::perturb(t, best, 0.05, rng)) - base);
    }
  }
  o.detail << "20 instances x 100 perturbations x 2 ips, min excess=" << margin;
  o.require(margin >= -1e-9, "optimality");
}

void criterion_8(Outcome& o) {
  const InnerProduct l2{SphericalL2{}};
  const AxiomReport def = axiom_check(l2, [](std::mt19937_64& rng) { return random_polygon(rng); }, {1000, 0, 1e-9, {}});
  o.detail << "default all_passed=" << def.all_passed() << " CS slack=" << def["A4"].worst;
  o.require(def.all_passed(), "default form");
  o.require(def["A4"].worst >= -1e-9, "slack");

  const Body disc = Body::ball({0, 0}, 1), tri = unit_triangle();
  const AxiomReport bad = axiom_check(counterexample_form, [](std::mt19937_64& rng) { return random_polygon(rng); },
                                      {200, 0, 1e-9, {{disc, tri}}});
  o.detail << "; F on random pairs: A4 violations=" << bad["A4"].violations;
  o.require(!bad["A4"].passed, "F fails A4");
  o.require(bad["A1"].passed && bad["A2"].passed && bad["A3"].passed, "F keeps A1-A3");

  int calls = 0;
  const AxiomReport pair =
      axiom_check(counterexample_form, [&](std::mt19937_64&) { return calls++ % 2 ? tri : disc; }, {1, 0, 1e-9, {}});
  const auto& a4 = pair["A4"];
  const bool witness = !a4.passed && a4.witness && a4.witness->bodies.size() == 2 &&
                       hausdorff(a4.witness->bodies[0], disc) == 0.0 && hausdorff(a4.witness->bodies[1], tri) == 0.0;
  o.detail << "; ball/triangle slack=" << a4.worst << " witness=" << witness;
  o.require(witness, "witness");
}

void criterion_9(Outcome& o) {
  const InnerProduct l2{SphericalL2{}};
  std::mt19937_64 rng(9);
  double worst = 0.0;
  for (int i = 0; i < 200; ++i) {
    const Body a = random_polygon(rng), b = random_polygon(rng);
    worst = std::max(worst, rel(l2(a, b), oracle::quadrature_ip(a, b, 10000)));
  }
  const Body ball = Body::ball({0, 0}, 1), sq = square(-1, 1);
  const double bb = l2(ball, ball), ss = l2(sq, sq);
  const double mc_b = oracle::gaussian_ip(ball, ball, 2000000), mc_s = oracle::gaussian_ip(sq, sq, 2000000);
  o.detail << "200 pairs worst rel=" << worst << " ball=" << bb << " square=" << ss << " (mc " << mc_b << ", "
           << mc_s << ")";
  o.require(worst <= 1e-4, "quadrature");
  o.require(std::abs(bb - 2.0) <= 1e-9, "ball");
  o.require(std::abs(ss - (2.0 + 4.0 / kPi)) <= 1e-9, "square");
  o.require(rel(bb, mc_b) <= 1e-2 && rel(ss, mc_s) <= 1e-2, "monte carlo");
}

void criterion_10(Outcome& o) {
  std::mt19937_64 rng(10);
  int outside = 0;
  for (int i = 0; i < 200; ++i) {
    const Body p = random_polygon(rng);
    if (!subset(Body::point(steiner_point(p)), p, 1e-9)) ++outside;
  }
  o.detail << "200 polygons, outside=" << outside;
  o.require(outside == 0, "membership");
}

void criterion_11(Outcome& o) {
  const InnerProduct l2{SphericalL2{}};
  const DiversityReport r =
      diversity_axiom_check(l2, [](std::mt19937_64& rng) { return random_point_set(rng); }, 500, 0, 1e-9);
  o.detail << "500 triples:";
  for (const auto& c : r.checks) o.detail << " " << c.name << "=" << c.worst + 0.0;
  o.require(r.all_passed(), "axioms");
}

void criterion_12(Outcome& o) {
  const Body tri = unit_triangle(), sq = square(-1, 1);
  const LineClass tr = classify_line(translate(tri, {2, -1}), tri);
  const auto* t = std::get_if<Translation>(&tr);
  o.require(t && std::abs(t->direction.x - 2.0) <= 1e-12 && std::abs(t->direction.y + 1.0) <= 1e-12, "translation");

  double scan_err = 0.0;
  const std::vector<std::pair<Body, Body>> rays{
      {minkowski_sum(sq, tri), sq},
      {Body::sum({sq, scale(tri, 1.7)}), Body::sum({sq, scale(tri, 0.7)})},
  };
  for (const auto& [a, b] : rays) {
    const LineClass c = classify_line(a, b);
    const auto* r = std::get_if<Ray>(&c);
    o.require(r != nullptr, "ray");
    if (r) scan_err = std::max(scan_err, std::abs(r->parameter - oracle::scan_line_minimum(a, b, -3.0, 1.0)));
  }
  const LineClass seg = classify_line(Body::ball({0, 0}, 1), tri);
  o.require(std::holds_alternative<Segment>(seg), "segment");
  o.detail << "classes: " << line_class_name(tr) << ", ray, " << line_class_name(seg) << "; ray scan err=" << scan_err;
  o.require(scan_err <= 1e-6, "ray parameter");
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Outcome&)>>> criteria{
      {"counterexample regression", criterion_1},
      {"interval inner product", criterion_2},
      {"center outside body", criterion_3},
      {"star mean", criterion_4},
      {"lambda oracle equivalence", criterion_5},
      {"cherry-tree golden", criterion_6},
      {"optimality probe", criterion_7},
      {"axiom suite", criterion_8},
      {"exact vs quadrature", criterion_9},
      {"steiner membership", criterion_10},
      {"diversity axioms", criterion_11},
      {"line classification", criterion_12},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      criteria[i].second(o);
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    failed += !o.pass;
    std::printf("%s %2zu %-26s %s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(), o.detail.str().c_str());
  }
  std::printf("%zu/%zu criteria passed\n", criteria.size() - static_cast<std::size_t>(failed), criteria.size());
  return failed ? 1 : 0;
}
