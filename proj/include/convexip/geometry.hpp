// Lines in the space of planar convex bodies, Minkowski summands and endpoints.
//
// Along a line t -> h_B + t (h_A - h_B) every validity condition of a support
// curve (breakpoint derivative jumps >= 0, arc constants >= 0) is affine in t,
// so the set of parameters giving a convex body is an interval computed in
// closed form.
#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <variant>
#include <vector>

#include "convexip/body.hpp"
#include "convexip/body_metric.hpp"
#include "convexip/support_curve.hpp"

namespace cvx {

/// Constraint p + t q >= 0 on the line parameter.
struct AffineConstraint {
  double p = 0.0;
  double q = 0.0;
};

/// Validity constraints of base + t * direction on their common refinement.
inline std::vector<AffineConstraint> validity_constraints(const SupportCurve& base, const SupportCurve& direction) {
  struct Piece {
    double start;
    Generator gb, gd;
  };
  std::vector<Piece> pieces;
  SupportCurve::for_each_common_arc(base, direction, [&](double s, double, Generator gb, Generator gd) {
    pieces.push_back({s, gb, gd});
  });
  std::vector<AffineConstraint> out;
  for (std::size_t k = 0; k < pieces.size(); ++k) {
    out.push_back({pieces[k].gb.c, pieces[k].gd.c});
    if (pieces.size() > 1) {
      const auto& prev = pieces[(k + pieces.size() - 1) % pieces.size()];
      const Vec2 tangent = unit_tangent_at(pieces[k].start);
      out.push_back({dot(pieces[k].gb.a - prev.gb.a, tangent), dot(pieces[k].gd.a - prev.gd.a, tangent)});
    }
  }
  return out;
}

struct ParameterInterval {
  double lo = -std::numeric_limits<double>::infinity();
  double hi = std::numeric_limits<double>::infinity();
};

/// {t : base + t * direction is a support function}.
inline ParameterInterval feasible_parameters(const SupportCurve& base, const SupportCurve& direction,
                                             double tolerance = tol::kAngle) {
  ParameterInterval r;
  for (const auto& c : validity_constraints(base, direction)) {
    if (c.q > tolerance)
      r.lo = std::max(r.lo, -c.p / c.q);
    else if (c.q < -tolerance)
      r.hi = std::min(r.hi, -c.p / c.q);
  }
  return r;
}

struct Translation {
  Vec2 direction;  // A = B + {direction}
};

struct Ray {
  Body endpoint;
  Body generator;    // the ray is {endpoint + s * generator : s >= 0}
  double parameter;  // endpoint = h_B + parameter * (h_A - h_B)
};

struct Segment {
  Body end_a;  // endpoint on A's side
  Body end_b;  // endpoint on B's side
  double t_a;
  double t_b;
};

using LineClass = std::variant<Translation, Ray, Segment>;

inline const char* line_class_name(const LineClass& c) {
  return std::visit(Overloaded{[](const Translation&) { return "translation"; },
                               [](const Ray&) { return "ray"; }, [](const Segment&) { return "segment"; }},
                    c);
}

/// Classifies the line through A and B as a translation, ray or segment.
inline LineClass classify_line(const Body& a, const Body& b, double tolerance = tol::kAngle) {
  require_dim(a.dim(), 2, "classify_line");
  require_dim(b.dim(), 2, "classify_line");
  const SupportCurve hb = support_curve(b);
  const SupportCurve f = support_curve(a) - hb;
  if (std::max(max_on_circle(f), -min_on_circle(f)) <= tolerance)
    throw InputError("classify_line: A and B coincide, there is no line");
  if (auto v = linear_part(f, tolerance)) return Translation{*v};

  const auto range = feasible_parameters(hb, f, tolerance);
  auto body_at = [&](double t) { return curve_to_body(hb + f * t, tolerance); };
  if (is_support_function(f, tolerance)) return Ray{body_at(range.lo), curve_to_body(f, tolerance), range.lo};
  const SupportCurve g = f * -1.0;
  if (is_support_function(g, tolerance)) return Ray{body_at(range.hi), curve_to_body(g, tolerance), range.hi};
  return Segment{body_at(range.hi), body_at(range.lo), range.hi, range.lo};
}

/// L is a summand of K iff h_K - h_L is a support function.
inline bool is_summand(const Body& l, const Body& k, double tolerance = tol::kAngle) {
  require_dim(l.dim(), 2, "is_summand");
  require_dim(k.dim(), 2, "is_summand");
  return is_support_function(support_curve(k) - support_curve(l), tolerance);
}

/// M with L + M = K, when L is a summand of K.
inline std::optional<Body> summand_complement(const Body& l, const Body& k, double tolerance = tol::kAngle) {
  const SupportCurve diff = support_curve(k) - support_curve(l);
  if (!is_support_function(diff, tolerance)) return std::nullopt;
  return curve_to_body(diff, tolerance);
}

/// A is an endpoint of the line through A and B iff no eps in (0,1) makes eps*B
/// a summand of A, i.e. no t < 0 keeps h_A + t (h_B - h_A) valid.
inline bool is_endpoint(const Body& a, const Body& b, double tolerance = tol::kAngle) {
  require_dim(a.dim(), 2, "is_endpoint");
  require_dim(b.dim(), 2, "is_endpoint");
  const SupportCurve ha = support_curve(a);
  const SupportCurve dir = support_curve(b) - ha;
  if (std::max(max_on_circle(dir), -min_on_circle(dir)) <= tolerance) return false;
  return feasible_parameters(ha, dir, tolerance).lo >= -tolerance;
}

/// Points, segments and triangles; the only indecomposable planar polytopes.
inline bool is_indecomposable_2d(const Body& a) {
  require_dim(a.dim(), 2, "is_indecomposable_2d");
  if (!is_polytopal(a)) throw InputError("is_indecomposable_2d: only polytopes are classified");
  return polygon_vertices(a).size() <= 3;
}

/// A unit segment lying in a supporting line of A through an exposed point,
/// so that A is an endpoint of the line through A and A + segment. For
/// polytopes the exposed point is the lexicographically largest vertex and
/// the supporting line is normal to the bisector of its normal cone; for
/// bodies with a round part the supporting line is taken at angle 0 (or, when
/// 0 is a breakpoint, at the middle of the arc that starts there). The
/// segment runs from the point in the positive tangent direction.
inline Body endpoint_witness(const Body& a) {
  require_dim(a.dim(), 2, "endpoint_witness");
  const SupportCurve h = support_curve(a);
  double theta = 0.0;
  std::size_t arc = h.arc_index(0.0);
  const double c = h.arcs().front().gen.c;
  if (h.size() == 1) {
    theta = 0.0;
  } else if (c > tol::kAngle) {
    const bool on_break = std::any_of(h.arcs().begin(), h.arcs().end(), [](const Arc& x) {
      return std::min(x.start, kTwoPi - x.start) <= tol::kAngle;
    });
    if (on_break) {
      arc = h.arc_index(2.0 * tol::kAngle);
      theta = 0.5 * (h.arc_start(arc) + h.arc_end(arc));
    }
  } else {
    for (std::size_t i = 0; i < h.size(); ++i) {
      const Vec2 v = h.arcs()[i].gen.a, best = h.arcs()[arc].gen.a;
      if (v.x > best.x || (v.x == best.x && v.y > best.y)) arc = i;
    }
    theta = 0.5 * (h.arc_start(arc) + h.arc_end(arc));
  }
  const Generator g = h.generator_at(theta);
  const Vec2 p = g.a + g.c * unit_at(theta);
  const Vec2 q = p + unit_tangent_at(theta);
  return Body::polytope({to_vec(p), to_vec(q)});
}

}  // namespace cvx
