#pragma once

#include <algorithm>
#include <cmath>
#include <vector>

#include "convexip/core.hpp"

namespace cvx {

struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  friend Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
  friend Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
  friend Vec2 operator*(double s, Vec2 a) { return {s * a.x, s * a.y}; }
  friend Vec2 operator-(Vec2 a) { return {-a.x, -a.y}; }
  friend bool operator==(Vec2, Vec2) = default;
};

inline double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
inline double cross(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }
inline double length(Vec2 a) { return std::hypot(a.x, a.y); }
inline Vec2 unit_at(double theta) { return {std::cos(theta), std::sin(theta)}; }
/// Derivative of unit_at with respect to the angle.
inline Vec2 unit_tangent_at(double theta) { return {-std::sin(theta), std::cos(theta)}; }

/// Andrew's monotone chain. Returns the extreme points in counterclockwise order,
/// starting from the lexicographically smallest; collinear and duplicate points
/// (within `eps`) are dropped. One or two points come back as-is after dedup.
inline std::vector<Vec2> convex_hull(std::vector<Vec2> pts, double eps = tol::kCoord) {
  std::sort(pts.begin(), pts.end(),
            [](Vec2 a, Vec2 b) { return a.x < b.x || (a.x == b.x && a.y < b.y); });
  std::vector<Vec2> uniq;
  for (const auto& p : pts) {
    if (uniq.empty() || std::abs(p.x - uniq.back().x) > eps || std::abs(p.y - uniq.back().y) > eps)
      uniq.push_back(p);
  }
  // Points equal within eps may be non-adjacent after sorting (x ties broken by y).
  std::vector<Vec2> dedup;
  for (const auto& p : uniq) {
    bool dup = std::any_of(dedup.begin(), dedup.end(), [&](Vec2 q) {
      return std::abs(p.x - q.x) <= eps && std::abs(p.y - q.y) <= eps;
    });
    if (!dup) dedup.push_back(p);
  }
  if (dedup.size() < 3) return dedup;

  // Orientation test scaled by the edge lengths, so "collinear" means the
  // sine of the turn angle is below eps rather than an absolute area.
  auto turns_left = [eps](Vec2 o, Vec2 a, Vec2 b) {
    const Vec2 u = a - o, v = b - o;
    return cross(u, v) > eps * std::max(1.0, length(u) * length(v));
  };

  std::vector<Vec2> hull(2 * dedup.size());
  std::size_t k = 0;
  for (std::size_t i = 0; i < dedup.size(); ++i) {
    while (k >= 2 && !turns_left(hull[k - 2], hull[k - 1], dedup[i])) --k;
    hull[k++] = dedup[i];
  }
  for (std::size_t i = dedup.size() - 1, t = k + 1; i-- > 0;) {
    while (k >= t && !turns_left(hull[k - 2], hull[k - 1], dedup[i])) --k;
    hull[k++] = dedup[i];
  }
  hull.resize(k - 1);
  return hull;
}

}  // namespace cvx
