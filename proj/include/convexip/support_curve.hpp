// Exact 2D support functions restricted to the unit circle.
//
// On each arc the function is a.u(theta) + c with u = (cos, sin). Polygons
// contribute piecewise-linear generators (c = 0) that switch at outward edge
// normals; balls add a constant c. Differences of support curves use the same
// representation with c of either sign, which is what the summand and line
// machinery needs.
#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <span>
#include <vector>

#include "convexip/body.hpp"
#include "convexip/core.hpp"
#include "convexip/hull.hpp"

namespace cvx {

struct Generator {
  Vec2 a;
  double c = 0.0;

  double at(double theta) const { return dot(a, unit_at(theta)) + c; }
  friend Generator operator+(Generator f, Generator g) { return {f.a + g.a, f.c + g.c}; }
  friend Generator operator-(Generator f, Generator g) { return {f.a - g.a, f.c - g.c}; }
  friend Generator operator*(double s, Generator f) { return {s * f.a, s * f.c}; }
};

struct Arc {
  double start = 0.0;  // radians in [0, 2pi)
  Generator gen;
};

class SupportCurve {
 public:
  SupportCurve() : arcs_{Arc{0.0, {}}} {}

  static SupportCurve constant(Generator g) {
    SupportCurve s;
    s.arcs_ = {Arc{0.0, g}};
    return s;
  }

  /// Sorts, merges breakpoints closer than `angle_tol` and fuses neighbouring
  /// arcs whose generators coincide.
  static SupportCurve from_arcs(std::vector<Arc> arcs, double angle_tol = tol::kAngle) {
    if (arcs.empty()) throw InputError("support curve: no arcs");
    for (auto& a : arcs) a.start = wrap_angle(a.start);
    std::sort(arcs.begin(), arcs.end(), [](const Arc& l, const Arc& r) { return l.start < r.start; });
    std::vector<Arc> merged;
    for (const auto& a : arcs) {
      // A breakpoint within tolerance of the previous one collapses onto it; the
      // later generator wins since the earlier arc has (numerically) zero length.
      if (!merged.empty() && a.start - merged.back().start <= angle_tol)
        merged.back().gen = a.gen;
      else
        merged.push_back(a);
    }
    // Same rule across the 2pi seam: the vanishing last arc is dropped.
    if (merged.size() > 1 && merged.front().start + kTwoPi - merged.back().start <= angle_tol)
      merged.pop_back();
    SupportCurve s;
    s.arcs_ = std::move(merged);
    s.fuse_equal_neighbours();
    return s;
  }

  std::span<const Arc> arcs() const { return arcs_; }
  std::size_t size() const { return arcs_.size(); }

  double arc_start(std::size_t i) const { return arcs_[i].start; }
  double arc_end(std::size_t i) const {
    return i + 1 < arcs_.size() ? arcs_[i + 1].start : arcs_.front().start + kTwoPi;
  }
  double arc_length(std::size_t i) const { return arc_end(i) - arc_start(i); }

  /// Breakpoint angles; empty when the curve is a single generator.
  std::vector<double> breakpoints() const {
    std::vector<double> out;
    if (arcs_.size() > 1)
      for (const auto& a : arcs_) out.push_back(a.start);
    return out;
  }

  std::size_t arc_index(double theta) const {
    const double t = wrap_angle(theta);
    auto it = std::upper_bound(arcs_.begin(), arcs_.end(), t,
                               [](double v, const Arc& a) { return v < a.start; });
    if (it == arcs_.begin()) return arcs_.size() - 1;
    return static_cast<std::size_t>(it - arcs_.begin()) - 1;
  }

  const Generator& generator_at(double theta) const { return arcs_[arc_index(theta)].gen; }

  double operator()(double theta) const { return generator_at(theta).at(theta); }

  /// Positively homogeneous extension to the plane.
  double eval(Vec2 x) const {
    const double r = length(x);
    if (r == 0.0) return 0.0;
    return r * (*this)(std::atan2(x.y, x.x));
  }

  /// Evaluates at ascending angles in [0, 2pi) with a single sweep.
  std::vector<double> sample(std::span<const double> sorted_angles) const {
    std::vector<double> out(sorted_angles.size());
    std::size_t k = arcs_.size() - 1;  // arc covering angles before the first start
    std::size_t next = 0;
    for (std::size_t i = 0; i < sorted_angles.size(); ++i) {
      const double t = sorted_angles[i];
      while (next < arcs_.size() && arcs_[next].start <= t) k = next++;
      out[i] = arcs_[k].gen.at(t);
    }
    return out;
  }

  /// Right minus left angular derivative at the start of arc i.
  double derivative_jump(std::size_t i) const {
    const auto& prev = arcs_[(i + arcs_.size() - 1) % arcs_.size()].gen;
    return dot(arcs_[i].gen.a - prev.a, unit_tangent_at(arcs_[i].start));
  }

  /// Right minus left value at the start of arc i; zero for continuous curves.
  double value_jump(std::size_t i) const {
    const auto& prev = arcs_[(i + arcs_.size() - 1) % arcs_.size()].gen;
    const double t = arcs_[i].start;
    return arcs_[i].gen.at(t) - prev.at(t);
  }

  SupportCurve operator*(double s) const {
    SupportCurve out = *this;
    for (auto& a : out.arcs_) a.gen = s * a.gen;
    if (s == 0.0) return constant({});
    return out;
  }

  friend SupportCurve operator+(const SupportCurve& f, const SupportCurve& g) {
    return combine(f, g, [](Generator x, Generator y) { return x + y; });
  }
  friend SupportCurve operator-(const SupportCurve& f, const SupportCurve& g) {
    return combine(f, g, [](Generator x, Generator y) { return x - y; });
  }

  /// Sorted union of both curves' breakpoints, merged within the angular tolerance.
  static std::vector<double> merged_breakpoints(const SupportCurve& f, const SupportCurve& g) {
    std::vector<double> bp = f.breakpoints();
    const auto gb = g.breakpoints();
    bp.insert(bp.end(), gb.begin(), gb.end());
    std::sort(bp.begin(), bp.end());
    std::vector<double> out;
    for (double b : bp)
      if (out.empty() || b - out.back() > tol::kAngle) out.push_back(b);
    if (out.size() > 1 && out.front() + kTwoPi - out.back() <= tol::kAngle) out.pop_back();
    return out;
  }

  /// Calls fn(start, end, f_generator, g_generator) on each arc of the common refinement.
  template <class Fn>
  static void for_each_common_arc(const SupportCurve& f, const SupportCurve& g, Fn&& fn) {
    const auto bp = merged_breakpoints(f, g);
    if (bp.empty()) {
      fn(0.0, kTwoPi, f.arcs_.front().gen, g.arcs_.front().gen);
      return;
    }
    for (std::size_t k = 0; k < bp.size(); ++k) {
      const double s = bp[k];
      const double e = k + 1 < bp.size() ? bp[k + 1] : bp.front() + kTwoPi;
      const double mid = 0.5 * (s + e);
      fn(s, e, f.generator_at(mid), g.generator_at(mid));
    }
  }

 private:
  template <class Op>
  static SupportCurve combine(const SupportCurve& f, const SupportCurve& g, Op op) {
    std::vector<Arc> arcs;
    for_each_common_arc(f, g, [&](double s, double, Generator gf, Generator gg) {
      arcs.push_back({s, op(gf, gg)});
    });
    return from_arcs(std::move(arcs));
  }

  static bool same_generator(const Generator& x, const Generator& y) {
    const double scale = std::max({1.0, length(x.a), length(y.a), std::abs(x.c), std::abs(y.c)});
    return length(x.a - y.a) <= 1e-12 * scale && std::abs(x.c - y.c) <= 1e-12 * scale;
  }

  void fuse_equal_neighbours() {
    std::vector<Arc> out;
    for (const auto& a : arcs_)
      if (out.empty() || !same_generator(out.back().gen, a.gen)) out.push_back(a);
    if (out.size() > 1 && same_generator(out.front().gen, out.back().gen)) {
      out.front().start = out.back().start;
      out.pop_back();
      std::sort(out.begin(), out.end(), [](const Arc& l, const Arc& r) { return l.start < r.start; });
    }
    if (out.size() == 1) out.front().start = 0.0;
    arcs_ = std::move(out);
  }

  std::vector<Arc> arcs_;
};

/// Support curve of a canonical CCW polygon.
inline SupportCurve polygon_curve(const std::vector<Vec2>& poly) {
  if (poly.empty()) throw InputError("polygon_curve: empty polygon");
  if (poly.size() == 1) return SupportCurve::constant({poly.front(), 0.0});
  std::vector<Arc> arcs;
  for (std::size_t i = 0; i < poly.size(); ++i) {
    const Vec2 next = poly[(i + 1) % poly.size()];
    const Vec2 e = next - poly[i];
    arcs.push_back({std::atan2(e.y, e.x) - 0.5 * kPi, {next, 0.0}});
  }
  return SupportCurve::from_arcs(std::move(arcs));
}

/// Exact support curve of a 2D body.
inline SupportCurve support_curve(const Body& body) {
  require_dim(body.dim(), 2, "support_curve");
  return std::visit(
      Overloaded{
          [](const Body::Point& p) { return SupportCurve::constant({to_vec2(p.coords), 0.0}); },
          [](const Body::Polytope& p) {
            std::vector<Vec2> pts;
            for (const auto& v : p.vertices) pts.push_back(to_vec2(v));
            return polygon_curve(convex_hull(std::move(pts)));
          },
          [](const Body::Ball& b) { return SupportCurve::constant({to_vec2(b.center), b.radius}); },
          [](const Body::Sum& s) {
            SupportCurve acc = SupportCurve::constant({});
            for (const auto& t : *s.terms) acc = acc + support_curve(t);
            return acc;
          },
          [](const Body::Scaled& s) { return support_curve(*s.inner) * s.factor; },
      },
      body.node());
}

/// Distributional test of h'' + h >= 0: every breakpoint derivative jump and
/// every arc's constant term must be nonnegative, and the curve continuous.
inline bool is_support_function(const SupportCurve& f, double tolerance = tol::kAngle) {
  for (std::size_t i = 0; i < f.size(); ++i) {
    const double scale = 1.0 + length(f.arcs()[i].gen.a) + std::abs(f.arcs()[i].gen.c);
    if (f.size() > 1) {
      if (std::abs(f.value_jump(i)) > tolerance * scale) return false;
      if (f.derivative_jump(i) < -tolerance * scale) return false;
    }
    if (f.arcs()[i].gen.c < -tolerance * scale) return false;
  }
  return true;
}

/// True when f is the support function of a singleton, i.e. linear.
inline std::optional<Vec2> linear_part(const SupportCurve& f, double tolerance = tol::kAngle) {
  const Vec2 a = f.arcs().front().gen.a;
  for (const auto& arc : f.arcs()) {
    const double scale = 1.0 + length(a);
    if (length(arc.gen.a - a) > tolerance * scale || std::abs(arc.gen.c) > tolerance * scale)
      return std::nullopt;
  }
  return a;
}

namespace detail {

// Antiderivatives of the trigonometric monomials on [s, e].
struct TrigIntegrals {
  double one, cos1, sin1, cos2, sin2, sincos;
  TrigIntegrals(double s, double e)
      : one(e - s),
        cos1(std::sin(e) - std::sin(s)),
        sin1(std::cos(s) - std::cos(e)),
        cos2(0.5 * (e - s) + 0.25 * (std::sin(2 * e) - std::sin(2 * s))),
        sin2(0.5 * (e - s) - 0.25 * (std::sin(2 * e) - std::sin(2 * s))),
        sincos(0.5 * (std::sin(e) * std::sin(e) - std::sin(s) * std::sin(s))) {}
};

inline double integrate_product(Generator f, Generator g, double s, double e) {
  const TrigIntegrals I(s, e);
  return f.a.x * g.a.x * I.cos2 + f.a.y * g.a.y * I.sin2 + (f.a.x * g.a.y + f.a.y * g.a.x) * I.sincos +
         (g.c * f.a.x + f.c * g.a.x) * I.cos1 + (g.c * f.a.y + f.c * g.a.y) * I.sin1 + f.c * g.c * I.one;
}

inline Vec2 integrate_moment(Generator f, double s, double e) {
  const TrigIntegrals I(s, e);
  return {f.a.x * I.cos2 + f.a.y * I.sincos + f.c * I.cos1,
          f.a.x * I.sincos + f.a.y * I.sin2 + f.c * I.sin1};
}

/// Maximum of a.u(theta) + c over [s, e].
inline double max_on_arc(Generator f, double s, double e) {
  double best = std::max(f.at(s), f.at(e));
  if (length(f.a) > 0.0) {
    const double phi = std::atan2(f.a.y, f.a.x);
    for (double crit : {phi, phi + kPi}) {
      const double off = wrap_angle(crit - s);
      if (off <= e - s) best = std::max(best, f.at(s + off));
    }
  }
  return best;
}

}  // namespace detail

/// Exact integral over the circle of f * g.
inline double integrate_product(const SupportCurve& f, const SupportCurve& g) {
  double total = 0.0;
  SupportCurve::for_each_common_arc(f, g, [&](double s, double e, Generator gf, Generator gg) {
    total += detail::integrate_product(gf, gg, s, e);
  });
  return total;
}

/// Exact integral over the circle of u(theta) * f(theta).
inline Vec2 integrate_moment(const SupportCurve& f) {
  Vec2 total;
  for (std::size_t i = 0; i < f.size(); ++i)
    total = total + detail::integrate_moment(f.arcs()[i].gen, f.arc_start(i), f.arc_end(i));
  return total;
}

inline double max_on_circle(const SupportCurve& f) {
  double best = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < f.size(); ++i)
    best = std::max(best, detail::max_on_arc(f.arcs()[i].gen, f.arc_start(i), f.arc_end(i)));
  return best;
}

inline double min_on_circle(const SupportCurve& f) { return -max_on_circle(f * -1.0); }

/// Recovers a body from a valid curve whose constant term is the same on every
/// arc (true of any affine combination of Body curves): the polygon of its
/// generators plus a centred ball of that radius.
inline Body curve_to_body(const SupportCurve& f, double tolerance = tol::kAngle) {
  if (!is_support_function(f, tolerance))
    throw InputError("curve_to_body: curve is not a support function");
  const double c = f.arcs().front().gen.c;
  std::vector<Vec> verts;
  for (const auto& arc : f.arcs()) {
    if (std::abs(arc.gen.c - c) > tolerance * (1.0 + std::abs(c)))
      throw InputError("curve_to_body: non-uniform smooth part is not representable");
    const Vec v = to_vec(arc.gen.a);
    if (verts.empty() || std::abs(verts.back()[0] - v[0]) > tol::kCoord ||
        std::abs(verts.back()[1] - v[1]) > tol::kCoord)
      verts.push_back(v);
  }
  Body poly = polytope_from_points(verts);
  if (std::abs(c) <= tolerance) return poly;
  if (const auto& vs = poly.as<Body::Polytope>()->vertices; vs.size() == 1) return Body::ball(vs.front(), std::max(c, 0.0));
  return Body::sum({poly, Body::ball({0.0, 0.0}, std::max(c, 0.0))});
}

}  // namespace cvx
