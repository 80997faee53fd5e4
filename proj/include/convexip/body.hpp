// Convex bodies as closed Minkowski expressions over points, polytopes and balls.
//
// A Body never materializes a hull unless asked: the support function of a
// polytope is the maximum over its generating points whether or not those are
// extreme, and sums/scalings act on support functions term by term. Explicit
// canonical polygons are produced only in 2D.
#pragma once

#include <algorithm>
#include <memory>
#include <span>
#include <variant>
#include <vector>

#include "convexip/core.hpp"
#include "convexip/hull.hpp"

namespace cvx {

class Body {
 public:
  struct Point {
    Vec coords;
  };
  struct Polytope {
    std::vector<Vec> vertices;
  };
  struct Ball {
    Vec center;
    double radius = 0.0;
  };
  struct Sum {
    std::shared_ptr<const std::vector<Body>> terms;
  };
  struct Scaled {
    double factor = 1.0;
    std::shared_ptr<const Body> inner;
  };
  using Node = std::variant<Point, Polytope, Ball, Sum, Scaled>;

  static Body point(Vec coords) {
    if (coords.empty()) throw InputError("point: empty coordinate vector");
    const auto n = coords.size();
    return Body(Point{std::move(coords)}, n);
  }

  /// Explicit vertex list, kept as given (no hull). See polytope_from_points
  /// for the canonical 2D form.
  static Body polytope(std::vector<Vec> vertices) {
    if (vertices.empty()) throw InputError("polytope: empty vertex list");
    const auto n = vertices.front().size();
    if (n == 0) throw InputError("polytope: zero-dimensional vertex");
    for (const auto& v : vertices) require_dim(v.size(), n, "polytope");
    return Body(Polytope{std::move(vertices)}, n);
  }

  static Body ball(Vec center, double radius) {
    if (center.empty()) throw InputError("ball: empty center");
    if (!(radius >= 0.0)) throw InputError("ball: radius must be nonnegative");
    const auto n = center.size();
    return Body(Ball{std::move(center), radius}, n);
  }

  static Body sum(std::vector<Body> terms) {
    if (terms.empty()) throw InputError("sum: no terms");
    const auto n = terms.front().dim();
    for (const auto& t : terms) require_dim(t.dim(), n, "sum");
    return Body(Sum{std::make_shared<const std::vector<Body>>(std::move(terms))}, n);
  }

  static Body scaled(double factor, Body inner) {
    if (!(factor >= 0.0)) throw InputError("scaled: Minkowski scaling needs a nonnegative factor");
    const auto n = inner.dim();
    return Body(Scaled{factor, std::make_shared<const Body>(std::move(inner))}, n);
  }

  std::size_t dim() const noexcept { return dim_; }
  const Node& node() const noexcept { return node_; }

  template <class T>
  const T* as() const noexcept {
    return std::get_if<T>(&node_);
  }

 private:
  Body(Node node, std::size_t dim) : node_(std::move(node)), dim_(dim) {}

  Node node_;
  std::size_t dim_;
};

template <class... Fs>
struct Overloaded : Fs... {
  using Fs::operator()...;
};
template <class... Fs>
Overloaded(Fs...) -> Overloaded<Fs...>;

/// h_A(x) = sup { a.x : a in A }, evaluated exactly.
inline double support(const Body& body, std::span<const double> x) {
  require_dim(x.size(), body.dim(), "support");
  return std::visit(
      Overloaded{
          [&](const Body::Point& p) { return dot(p.coords, x); },
          [&](const Body::Polytope& p) {
            double best = dot(p.vertices.front(), x);
            for (std::size_t i = 1; i < p.vertices.size(); ++i)
              best = std::max(best, dot(p.vertices[i], x));
            return best;
          },
          [&](const Body::Ball& b) { return dot(b.center, x) + b.radius * norm(x); },
          [&](const Body::Sum& s) {
            double total = 0.0;
            for (const auto& t : *s.terms) total += support(t, x);
            return total;
          },
          [&](const Body::Scaled& s) {
            return s.factor == 0.0 ? 0.0 : s.factor * support(*s.inner, x);
          },
      },
      body.node());
}

inline double support(const Body& body, Vec2 x) {
  const double xs[2] = {x.x, x.y};
  return support(body, std::span<const double>(xs, 2));
}

inline Body zero_set(std::size_t dim) { return Body::point(Vec(dim, 0.0)); }

inline Vec2 to_vec2(const Vec& v) {
  require_dim(v.size(), 2, "2D point");
  return {v[0], v[1]};
}
inline Vec to_vec(Vec2 v) { return {v.x, v.y}; }

/// Canonical polytope: in 2D the monotone-chain hull (CCW, strictly convex,
/// duplicates merged within 1e-12); in other dimensions the points as given.
inline Body polytope_from_points(const std::vector<Vec>& points) {
  if (points.empty()) throw InputError("polytope_from_points: empty input");
  const auto n = points.front().size();
  for (const auto& p : points) require_dim(p.size(), n, "polytope_from_points");
  if (n != 2) return Body::polytope(points);
  std::vector<Vec2> pts;
  pts.reserve(points.size());
  for (const auto& p : points) pts.push_back({p[0], p[1]});
  std::vector<Vec> verts;
  for (auto v : convex_hull(std::move(pts))) verts.push_back(to_vec(v));
  return Body::polytope(std::move(verts));
}

/// True for bodies built only from points and polytopes (balls of radius 0 count).
inline bool is_polytopal(const Body& body) {
  return std::visit(Overloaded{
                        [](const Body::Point&) { return true; },
                        [](const Body::Polytope&) { return true; },
                        [](const Body::Ball& b) { return b.radius == 0.0; },
                        [](const Body::Sum& s) {
                          return std::all_of(s.terms->begin(), s.terms->end(),
                                             [](const Body& t) { return is_polytopal(t); });
                        },
                        [](const Body::Scaled& s) { return is_polytopal(*s.inner); },
                    },
                    body.node());
}

namespace detail {

inline std::vector<Vec2> polygon_of(const Body& body) {
  return std::visit(
      Overloaded{
          [](const Body::Point& p) { return std::vector<Vec2>{to_vec2(p.coords)}; },
          [](const Body::Polytope& p) {
            std::vector<Vec2> pts;
            for (const auto& v : p.vertices) pts.push_back(to_vec2(v));
            return convex_hull(std::move(pts));
          },
          [](const Body::Ball& b) -> std::vector<Vec2> {
            if (b.radius != 0.0) throw InputError("canonicalize: body contains a ball");
            return {to_vec2(b.center)};
          },
          [](const Body::Sum& s) {
            std::vector<Vec2> acc{{0.0, 0.0}};
            for (const auto& t : *s.terms) {
              const auto poly = polygon_of(t);
              std::vector<Vec2> sums;
              sums.reserve(acc.size() * poly.size());
              for (auto a : acc)
                for (auto b : poly) sums.push_back(a + b);
              acc = convex_hull(std::move(sums));
            }
            return acc;
          },
          [](const Body::Scaled& s) {
            if (s.factor == 0.0) return std::vector<Vec2>{{0.0, 0.0}};
            auto poly = polygon_of(*s.inner);
            for (auto& v : poly) v = s.factor * v;
            return poly;
          },
      },
      body.node());
}

}  // namespace detail

/// Flattens a polytope-only 2D expression to an explicit canonical Polytope.
inline Body canonicalize_2d(const Body& body) {
  require_dim(body.dim(), 2, "canonicalize_2d");
  std::vector<Vec> verts;
  for (auto v : detail::polygon_of(body)) verts.push_back(to_vec(v));
  return Body::polytope(std::move(verts));
}

/// Canonical CCW vertex list of a polytope-only 2D body.
inline std::vector<Vec2> polygon_vertices(const Body& body) {
  require_dim(body.dim(), 2, "polygon_vertices");
  return detail::polygon_of(body);
}

inline bool is_explicit_polytope(const Body& b) {
  return b.as<Body::Point>() != nullptr || b.as<Body::Polytope>() != nullptr;
}

inline Body minkowski_sum(const Body& a, const Body& b) {
  require_dim(b.dim(), a.dim(), "minkowski_sum");
  if (a.dim() == 2 && is_explicit_polytope(a) && is_explicit_polytope(b))
    return canonicalize_2d(Body::sum({a, b}));
  return Body::sum({a, b});
}

inline Body scale(const Body& a, double t) {
  if (!(t >= 0.0)) throw InputError("scale: Minkowski scaling is undefined for negative factors");
  if (t == 0.0) return zero_set(a.dim());
  if (t == 1.0) return a;
  if (const auto* p = a.as<Body::Point>()) {
    Vec c = p->coords;
    for (auto& x : c) x *= t;
    return Body::point(std::move(c));
  }
  if (const auto* p = a.as<Body::Polytope>()) {
    auto verts = p->vertices;
    for (auto& v : verts)
      for (auto& x : v) x *= t;
    return Body::polytope(std::move(verts));
  }
  return Body::scaled(t, a);
}

inline Body translate(const Body& a, const Vec& v) {
  require_dim(v.size(), a.dim(), "translate");
  return minkowski_sum(a, Body::point(v));
}

/// The reflection -A = {-a : a in A}. Structural; not a Minkowski scaling.
inline Body negate(const Body& body) {
  auto neg = [](Vec v) {
    for (auto& x : v) x = -x;
    return v;
  };
  return std::visit(Overloaded{
                        [&](const Body::Point& p) { return Body::point(neg(p.coords)); },
                        [&](const Body::Polytope& p) {
                          std::vector<Vec> verts;
                          for (const auto& v : p.vertices) verts.push_back(neg(v));
                          return Body::polytope(std::move(verts));
                        },
                        [&](const Body::Ball& b) { return Body::ball(neg(b.center), b.radius); },
                        [&](const Body::Sum& s) {
                          std::vector<Body> terms;
                          for (const auto& t : *s.terms) terms.push_back(negate(t));
                          return Body::sum(std::move(terms));
                        },
                        [&](const Body::Scaled& s) { return Body::scaled(s.factor, negate(*s.inner)); },
                    },
                    body.node());
}

/// A - A = A + (-1)A; origin-symmetric.
inline Body difference_body(const Body& a) { return minkowski_sum(a, negate(a)); }

}  // namespace cvx
