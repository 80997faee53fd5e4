// Containment and Hausdorff distance through support functions.
//
// 2D answers are exact: the difference of two support curves is a single
// sinusoid on every arc of the common refinement, so its extrema come from arc
// endpoints and at most two critical angles. Other dimensions use a direction grid.
#pragma once

#include <algorithm>
#include <cmath>

#include "convexip/body.hpp"
#include "convexip/directions.hpp"
#include "convexip/support_curve.hpp"

namespace cvx {

struct GridOptions {
  std::size_t size = 4096;
  std::uint64_t seed = 0;
};

namespace detail {

// Largest and smallest value of h_A - h_B over the unit sphere.
inline std::pair<double, double> support_gap_range(const Body& a, const Body& b, const GridOptions& grid) {
  require_dim(b.dim(), a.dim(), "support comparison");
  if (a.dim() == 2) {
    const SupportCurve diff = support_curve(a) - support_curve(b);
    return {max_on_circle(diff), min_on_circle(diff)};
  }
  const auto g = make_direction_grid(a.dim(), grid.size, grid.seed);
  double hi = -std::numeric_limits<double>::infinity(), lo = std::numeric_limits<double>::infinity();
  for (const auto& u : g.directions) {
    const double d = support(a, u) - support(b, u);
    hi = std::max(hi, d);
    lo = std::min(lo, d);
  }
  return {hi, lo};
}

}  // namespace detail

/// A subset of B (up to tol) iff h_A <= h_B + tol on the sphere.
inline bool subset(const Body& a, const Body& b, double tolerance = 1e-9, const GridOptions& grid = {}) {
  return detail::support_gap_range(a, b, grid).first <= tolerance;
}

/// d_H(A, B) = sup over the sphere of |h_A - h_B|.
inline double hausdorff(const Body& a, const Body& b, const GridOptions& grid = {}) {
  const auto [hi, lo] = detail::support_gap_range(a, b, grid);
  return std::max({hi, -lo, 0.0});
}

inline bool contains_point(const Body& body, const Vec& p, double tolerance = 1e-9) {
  return subset(Body::point(p), body, tolerance);
}

}  // namespace cvx
