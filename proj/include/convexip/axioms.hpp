// Empirical verification of the set inner product axioms, and a bilinear form
// that satisfies symmetry, Minkowski linearity and positivity but violates
// Cauchy-Schwarz.
#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "convexip/body.hpp"
#include "convexip/body_metric.hpp"
#include "convexip/inner_product.hpp"

namespace cvx {

/// F(A,B) built from support values at +-e1, +-e2, +-(e1+e2). Symmetric,
/// Minkowski bilinear and positive definite, yet not Cauchy-Schwarz.
inline double counterexample_form(const Body& a, const Body& b) {
  require_dim(a.dim(), 2, "counterexample form");
  require_dim(b.dim(), 2, "counterexample form");
  struct Values {
    double e1, e2, m1, m2, d, md;  // h(e1), h(e2), h(-e1), h(-e2), h(e1+e2), h(-e1-e2)
  };
  auto values = [](const Body& x) {
    return Values{support(x, Vec2{1, 0}),  support(x, Vec2{0, 1}), support(x, Vec2{-1, 0}),
                  support(x, Vec2{0, -1}), support(x, Vec2{1, 1}), support(x, Vec2{-1, -1})};
  };
  const Values ha = values(a), hb = values(b);
  const double diag = (ha.e1 * hb.e1 + ha.e2 * hb.e2 + ha.m1 * hb.m1 + ha.m2 * hb.m2) / 8.0;
  const double cross_ab = (ha.e1 + ha.e2 - ha.d) * (hb.m1 + hb.m2 - hb.md);
  const double cross_ba = (hb.e1 + hb.e2 - hb.d) * (ha.m1 + ha.m2 - ha.md);
  return diag + cross_ab + cross_ba;
}

/// -F(A,A) + 2F(A,B) - F(B,B) for A the unit disc and B the triangle
/// (0,0),(1,0),(0,1); positive, so F(A,B)^2 > F(A,A)F(B,B).
inline double counterexample_gap() {
  const Body disc = Body::ball({0.0, 0.0}, 1.0);
  const Body tri = polytope_from_points({{0.0, 0.0}, {1.0, 0.0}, {0.0, 1.0}});
  return -counterexample_form(disc, disc) + 2.0 * counterexample_form(disc, tri) - counterexample_form(tri, tri);
}

using BilinearForm = std::function<double(const Body&, const Body&)>;
using BodySampler = std::function<Body(std::mt19937_64&)>;

struct AxiomWitness {
  std::vector<Body> bodies;
  std::vector<double> coefficients;
};

struct AxiomResult {
  std::string name;
  bool passed = true;
  std::size_t violations = 0;
  /// Worst observed residual: for A1/A2 the largest relative defect, for A3
  /// the smallest <A,A>, for A4 the smallest normalized Cauchy-Schwarz slack.
  double worst = 0.0;
  std::optional<AxiomWitness> witness;
};

struct AxiomReport {
  std::size_t trials = 0;
  std::vector<AxiomResult> axioms;

  bool all_passed() const {
    return std::all_of(axioms.begin(), axioms.end(), [](const AxiomResult& r) { return r.passed; });
  }
  const AxiomResult& operator[](const std::string& name) const {
    for (const auto& r : axioms)
      if (r.name == name) return r;
    throw InputError("axiom report: no axiom named " + name);
  }
};

struct AxiomCheckOptions {
  std::size_t trials = 1000;
  std::uint64_t seed = 0;
  double tolerance = 1e-9;
  /// Pairs checked for (A3)/(A4) in addition to the random ones.
  std::vector<std::pair<Body, Body>> extra_pairs;
};

namespace detail {

inline double relative(double defect, double scale) { return std::abs(defect) / std::max(1.0, std::abs(scale)); }

inline bool is_zero_body(const Body& a) { return hausdorff(a, zero_set(a.dim())) <= 1e-12; }

}  // namespace detail

/// Runs (A1)-(A4) on `trials` sampled triples. Each trial draws from its own
/// generator seeded by (seed, trial), so results do not depend on evaluation order.
inline AxiomReport axiom_check(const BilinearForm& form, const BodySampler& sampler,
                               const AxiomCheckOptions& opt = {}) {
  if (opt.trials == 0) throw InputError("axiom_check: trials must be at least 1");
  AxiomResult a1, a2, a3, a4;
  a1.name = "A1", a2.name = "A2", a3.name = "A3", a4.name = "A4";
  a3.worst = std::numeric_limits<double>::infinity();
  a4.worst = std::numeric_limits<double>::infinity();

  auto note = [](AxiomResult& r, bool bad, double value, bool larger_is_worse, AxiomWitness w) {
    const bool worse = larger_is_worse ? value > r.worst : value < r.worst;
    if (bad) {
      if (r.passed || worse) r.witness = std::move(w);
      r.passed = false;
      ++r.violations;
    } else if (r.passed && worse) {
      r.witness = std::move(w);
    }
    if (worse) r.worst = value;
  };

  auto check_pair = [&](const Body& a, const Body& b, std::mt19937_64& rng) {
    const double aa = form(a, a), bb = form(b, b), ab = form(a, b);
    if (!detail::is_zero_body(a)) note(a3, !(aa > 0.0), aa, false, {{a}, {}});
    if (!detail::is_zero_body(b)) note(a3, !(bb > 0.0), bb, false, {{b}, {}});

    const double slack = (aa * bb - ab * ab) / std::max(1.0, std::abs(aa * bb));
    bool bad = slack < -opt.tolerance;
    if (!bad && slack < opt.tolerance && bb > 0.0 && !detail::is_zero_body(b)) {
      // Equality claims proportionality; confirm it geometrically.
      const double lambda = std::sqrt(std::max(0.0, aa / bb));
      bad = ab < 0.0 || hausdorff(a, scale(b, lambda)) >= 1e-6;
    }
    note(a4, bad, slack, false, {{a, b}, {}});

    // Equality side: A = lambda B must give zero slack.
    std::uniform_real_distribution<double> lam(0.1, 3.0);
    const double l = lam(rng);
    const Body lb = scale(b, l);
    const double la = form(lb, lb), lab = form(lb, b);
    const double eq_slack = (la * bb - lab * lab) / std::max(1.0, std::abs(la * bb));
    note(a4, std::abs(eq_slack) > 1e-7, std::min(slack, eq_slack), false, {{lb, b}, {l}});
  };

  for (std::size_t t = 0; t < opt.trials; ++t) {
    std::mt19937_64 rng(opt.seed * 0x9E3779B97F4A7C15ULL + t + 1);
    const Body a = sampler(rng), b = sampler(rng), c = sampler(rng);
    std::uniform_real_distribution<double> coef(0.0, 3.0);
    const double alpha = coef(rng), beta = coef(rng);

    const double ab = form(a, b), ba = form(b, a);
    const double sym = detail::relative(ab - ba, std::max(std::abs(ab), std::abs(ba)));
    note(a1, sym > opt.tolerance, sym, true, {{a, b}, {}});

    const double lhs = form(Body::sum({scale(a, alpha), scale(b, beta)}), c);
    const double ac = form(a, c), bc = form(b, c);
    const double rhs = alpha * ac + beta * bc;
    const double lin = detail::relative(lhs - rhs, std::abs(alpha * ac) + std::abs(beta * bc));
    note(a2, lin > opt.tolerance, lin, true, {{a, b, c}, {alpha, beta}});

    check_pair(a, b, rng);
  }
  std::mt19937_64 rng(opt.seed);
  for (const auto& [a, b] : opt.extra_pairs) check_pair(a, b, rng);

  AxiomReport report;
  report.trials = opt.trials;
  report.axioms = {a1, a2, a3, a4};
  return report;
}

inline AxiomReport axiom_check(const InnerProduct& ip, const BodySampler& sampler, const AxiomCheckOptions& opt = {}) {
  return axiom_check([&ip](const Body& a, const Body& b) { return ip(a, b); }, sampler, opt);
}

/// The matrix form wrapped without the positive-definiteness check, so that
/// invalid matrices can be exercised against the axioms.
inline BilinearForm unchecked_matrix_form(const Matrix1D& m) {
  return [m](const Body& a, const Body& b) { return matrix_form(m, to_interval(a), to_interval(b)); };
}

/// Random convex polygon: hull of 3-8 points in a box around a random centre.
inline Body random_polygon(std::mt19937_64& rng, double spread = 1.0) {
  std::uniform_int_distribution<int> count(3, 8);
  std::uniform_real_distribution<double> u(-spread, spread);
  const Vec2 centre{u(rng), u(rng)};
  std::vector<Vec> pts;
  const int n = count(rng);
  for (int i = 0; i < n; ++i) pts.push_back({centre.x + u(rng), centre.y + u(rng)});
  return polytope_from_points(pts);
}

inline Body random_interval(std::mt19937_64& rng, double spread = 1.0) {
  std::uniform_real_distribution<double> u(-spread, spread);
  double a = u(rng), b = u(rng);
  if (a > b) std::swap(a, b);
  return Body::polytope({{a}, {b}});
}

}  // namespace cvx
