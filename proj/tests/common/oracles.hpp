// Reference computations for the test suites. Nothing here goes through
// SupportCurve or the InnerProduct integration paths; everything is built from
// raw support evaluations, dense sampling, or linear algebra.
#pragma once

#include <algorithm>
#include <chrono>
#include <cmath>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "convexip/convexip.hpp"

namespace oracle {

using cvx::Body;
using cvx::Vec;
using cvx::Vec2;

/// (1/pi) * (2pi/n) * sum over n equally spaced angles of h_A h_B.
inline double quadrature_ip(const Body& a, const Body& b, std::size_t n = 10000) {
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double t = cvx::kTwoPi * (static_cast<double>(i) + 0.5) / static_cast<double>(n);
    const Vec2 u{std::cos(t), std::sin(t)};
    s += cvx::support(a, u) * cvx::support(b, u);
  }
  return 2.0 * s / static_cast<double>(n);
}

/// E[h_A(g) h_B(g)] for g standard Gaussian in the plane.
inline double gaussian_ip(const Body& a, const Body& b, std::size_t samples, std::uint64_t seed = 7) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> n(0.0, 1.0);
  double s = 0.0;
  for (std::size_t i = 0; i < samples; ++i) {
    const Vec2 g{n(rng), n(rng)};
    s += cvx::support(a, g) * cvx::support(b, g);
  }
  return s / static_cast<double>(samples);
}

/// (1/pi) integral of u h(u) at n equally spaced angles.
inline Vec2 quadrature_steiner(const Body& a, std::size_t n = 100000) {
  Vec2 s{0, 0};
  for (std::size_t i = 0; i < n; ++i) {
    const double t = cvx::kTwoPi * (static_cast<double>(i) + 0.5) / static_cast<double>(n);
    const Vec2 u{std::cos(t), std::sin(t)};
    s = s + cvx::support(a, u) * u;
  }
  return (2.0 / static_cast<double>(n)) * s;
}

/// max over n angles of |h_A - h_B|.
inline double dense_hausdorff(const Body& a, const Body& b, std::size_t n = 200000) {
  double m = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double t = cvx::kTwoPi * static_cast<double>(i) / static_cast<double>(n);
    const Vec2 u{std::cos(t), std::sin(t)};
    m = std::max(m, std::abs(cvx::support(a, u) - cvx::support(b, u)));
  }
  return m;
}

/// Sublinearity of a positively homogeneous function given on the circle,
/// tested on pairs of grid directions: f(u_i + u_j) <= f(u_i) + f(u_j).
/// `f` takes an angle. Returns the most negative slack.
template <class F>
double worst_sublinearity(F&& f, std::size_t n = 720) {
  std::vector<double> val(n);
  std::vector<Vec2> dir(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double t = cvx::kTwoPi * static_cast<double>(i) / static_cast<double>(n);
    dir[i] = {std::cos(t), std::sin(t)};
    val[i] = f(t);
  }
  double worst = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const Vec2 s = dir[i] + dir[j];
      const double len = cvx::length(s);
      if (len < 1e-9) continue;
      const double fs = len * f(std::atan2(s.y, s.x));
      worst = std::min(worst, val[i] + val[j] - fs);
    }
  return worst;
}

/// Neighbour form of the sublinearity test, cheap enough to scan a parameter:
/// h(t - d) + h(t + d) >= 2 cos(d) h(t) on an n-point grid.
template <class F>
double worst_local_sublinearity(F&& f, std::size_t n = 720) {
  std::vector<double> val(n);
  for (std::size_t i = 0; i < n; ++i) val[i] = f(cvx::kTwoPi * static_cast<double>(i) / static_cast<double>(n));
  const double c = std::cos(cvx::kTwoPi / static_cast<double>(n));
  double worst = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    worst = std::min(worst, val[(i + n - 1) % n] + val[(i + 1) % n] - 2.0 * c * val[i]);
  return worst;
}

/// Smallest t in [lo, hi] for which h_B + t (h_A - h_B) passes the neighbour
/// sublinearity test, found by a `steps`-point scan down from hi (assumed
/// valid) followed by bisection on the bracketing step.
inline double scan_line_minimum(const Body& a, const Body& b, double lo, double hi, std::size_t steps = 1000) {
  auto valid = [&](double t) {
    return worst_local_sublinearity([&](double th) {
             const Vec2 u{std::cos(th), std::sin(th)};
             const double hb = cvx::support(b, u);
             return hb + t * (cvx::support(a, u) - hb);
           }) >= -1e-12;
  };
  double good = hi;
  for (std::size_t k = 1; k <= steps; ++k) {
    const double t = hi - (hi - lo) * static_cast<double>(k) / static_cast<double>(steps);
    if (valid(t)) {
      good = t;
      continue;
    }
    double bad = t;
    for (int i = 0; i < 60; ++i) {
      const double mid = 0.5 * (good + bad);
      (valid(mid) ? good : bad) = mid;
    }
    return good;
  }
  return lo;
}

/// Hull of {a + b} by brute force over vertex pairs.
inline std::vector<Vec2> pairwise_sum_hull(const std::vector<Vec2>& p, const std::vector<Vec2>& q) {
  std::vector<Vec2> pts;
  for (auto a : p)
    for (auto b : q) pts.push_back(a + b);
  return cvx::convex_hull(pts);
}

/// Random unrooted binary tree: start from a star on three leaves and keep
/// subdividing a random edge with a new pendant leaf.
inline cvx::Phylogeny random_binary_tree(std::size_t leaves, std::mt19937_64& rng) {
  std::vector<std::string> names{"", "L0", "L1", "L2"};
  std::vector<std::pair<std::size_t, std::size_t>> edges{{0, 1}, {0, 2}, {0, 3}};
  for (std::size_t k = 3; k < leaves; ++k) {
    const auto e = std::uniform_int_distribution<std::size_t>(0, edges.size() - 1)(rng);
    const auto [u, v] = edges[e];
    const std::size_t mid = names.size(), leaf = names.size() + 1;
    names.emplace_back();
    names.push_back("L" + std::to_string(k));
    edges[e] = {u, mid};
    edges.emplace_back(mid, v);
    edges.emplace_back(mid, leaf);
  }
  return cvx::Phylogeny::from_edges(names, edges);
}

inline cvx::LeafAssignment random_leaves(const cvx::Phylogeny& t, std::mt19937_64& rng) {
  cvx::LeafAssignment chi;
  for (const auto& n : t.leaf_names()) chi.emplace(n, cvx::random_polygon(rng));
  return chi;
}

/// Extension whose internal bodies are translated by independent Gaussian vectors.
inline cvx::Extension perturb(const cvx::Phylogeny& t, cvx::Extension ext, double sigma, std::mt19937_64& rng) {
  std::normal_distribution<double> n(0.0, sigma);
  for (std::size_t v = 0; v < t.size(); ++v)
    if (!t.is_leaf(v)) ext.bodies[v] = cvx::translate(ext.bodies[v], {n(rng), n(rng)});
  return ext;
}

/// Positive weight table on the default 2D quadrature grid, smooth in angle.
inline cvx::SphericalL2 weighted_l2(std::size_t grid = 2048) {
  cvx::SphericalL2 s;
  s.dim = 2;
  s.grid = grid;
  const auto g = cvx::make_direction_grid(2, grid, 0);
  std::vector<double> w;
  for (double t : g.angles) w.push_back(1.0 + 0.6 * std::cos(t) + 0.3 * std::sin(2.0 * t));
  s.weight = w;
  return s;
}

template <class Fn>
double seconds(Fn&& fn) {
  const auto t0 = std::chrono::steady_clock::now();
  fn();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace oracle
