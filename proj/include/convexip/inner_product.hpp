// Set inner products: the spherical L2 family and the 1D matrix form.
//
// Every set inner product is an ordinary inner product on support functions,
// so a body is reduced once to a "profile" (exact 2D curve, sampled support
// values, or interval endpoints) and pairs of profiles are combined.
#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

#include <Eigen/Dense>

#include "convexip/body.hpp"
#include "convexip/body_metric.hpp"
#include "convexip/directions.hpp"
#include "convexip/support_curve.hpp"

namespace cvx {

/// Spherical L2 form: <A,B> = normalization * integral of h_A h_B against a
/// probability measure on the sphere (uniform, or a positive weight table on
/// the grid). With the default normalization (= dim) and no weights the
/// restriction to singletons is the dot product, which also makes it equal to
/// the Gaussian form integral h_A h_B dphi.
struct SphericalL2 {
  std::size_t dim = 2;
  std::size_t grid = 4096;
  std::uint64_t seed = 0;
  std::optional<std::vector<double>> weight;
  std::optional<double> normalization;

  double scale() const { return normalization.value_or(static_cast<double>(dim)); }
  /// 2D without weights is integrated in closed form.
  bool exact() const { return dim == 2 && !weight; }
};

/// Closed interval [lo, hi] of the real line.
struct Interval {
  double lo = 0.0;
  double hi = 0.0;
};

/// <[a,b],[c,d]> = (b, -a) M (d, -c)^T with M symmetric positive definite.
struct Matrix1D {
  std::array<std::array<double, 2>, 2> m{{{1.0, 0.0}, {0.0, 1.0}}};
};

using SetIP = std::variant<SphericalL2, Matrix1D>;

inline std::size_t ip_dim(const SetIP& spec) {
  return std::visit(Overloaded{[](const SphericalL2& s) { return s.dim; },
                               [](const Matrix1D&) { return std::size_t{1}; }},
                    spec);
}

inline bool is_positive_definite(const Matrix1D& mat) {
  const auto& m = mat.m;
  if (std::abs(m[0][1] - m[1][0]) > 1e-12 * (1.0 + std::abs(m[0][1]))) return false;
  return m[0][0] > 0.0 && m[0][0] * m[1][1] - m[0][1] * m[1][0] > 0.0;
}

/// Throws InputError when the spec violates its invariants.
inline void validate(const SetIP& spec) {
  std::visit(Overloaded{
                 [](const SphericalL2& s) {
                   if (s.dim == 0) throw InputError("spherical_l2: dimension must be positive");
                   if (s.grid == 0) throw InputError("spherical_l2: grid must be positive");
                   if (s.normalization && !(*s.normalization > 0.0))
                     throw InputError("spherical_l2: normalization must be positive");
                   if (s.weight) {
                     const std::size_t want = s.dim == 1 ? 2 : s.grid;
                     if (s.weight->size() != want)
                       throw InputError("spherical_l2: weight table has " + std::to_string(s.weight->size()) +
                                        " entries, grid has " + std::to_string(want));
                     for (double w : *s.weight)
                       if (!(w > 0.0)) throw InputError("spherical_l2: weights must be strictly positive");
                   }
                 },
                 [](const Matrix1D& m) {
                   if (!is_positive_definite(m)) throw InputError("matrix1d: M is not symmetric positive definite");
                 },
             },
             spec);
}

inline Interval to_interval(const Body& body) {
  require_dim(body.dim(), 1, "interval");
  const double plus[1] = {1.0}, minus[1] = {-1.0};
  return {-support(body, std::span<const double>(minus, 1)), support(body, std::span<const double>(plus, 1))};
}

/// The matrix form without the positive-definiteness check.
inline double matrix_form(const Matrix1D& mat, Interval a, Interval b) {
  const auto& m = mat.m;
  const double u0 = a.hi, u1 = -a.lo, v0 = b.hi, v1 = -b.lo;
  return u0 * (m[0][0] * v0 + m[0][1] * v1) + u1 * (m[1][0] * v0 + m[1][1] * v1);
}

inline double ip(const Matrix1D& mat, Interval a, Interval b) {
  if (!is_positive_definite(mat)) throw InputError("matrix1d: M is not symmetric positive definite");
  return matrix_form(mat, a, b);
}

/// k_A = (b, -a) M (1, -1)^T.
inline double center(const Matrix1D& mat, Interval a) { return ip(mat, a, Interval{1.0, 1.0}); }

/// A body reduced to what a particular inner product needs.
using Profile = std::variant<SupportCurve, std::vector<double>, Interval>;

class InnerProduct {
 public:
  explicit InnerProduct(SetIP spec) : spec_(std::move(spec)) {
    validate(spec_);
    if (const auto* s = std::get_if<SphericalL2>(&spec_); s && !s->exact()) {
      grid_ = make_direction_grid(s->dim, s->grid, s->seed);
      if (s->weight) {
        double total = 0.0;
        for (double w : *s->weight) total += w;
        grid_.weights = *s->weight;
        for (auto& w : grid_.weights) w /= total;
      }
    }
  }

  const SetIP& spec() const { return spec_; }
  std::size_t dim() const { return ip_dim(spec_); }

  Profile profile(const Body& body) const {
    require_dim(body.dim(), dim(), "inner product");
    if (std::holds_alternative<Matrix1D>(spec_)) return to_interval(body);
    const auto& s = std::get<SphericalL2>(spec_);
    if (s.exact()) return support_curve(body);
    if (s.dim == 2) return support_curve(body).sample(grid_.angles);
    std::vector<double> values;
    values.reserve(grid_.directions.size());
    for (const auto& u : grid_.directions) values.push_back(support(body, u));
    return values;
  }

  double inner(const Profile& a, const Profile& b) const {
    if (const auto* m = std::get_if<Matrix1D>(&spec_))
      return matrix_form(*m, std::get<Interval>(a), std::get<Interval>(b));
    const double k = std::get<SphericalL2>(spec_).scale();
    if (const auto* fa = std::get_if<SupportCurve>(&a))
      return k / kTwoPi * integrate_product(*fa, std::get<SupportCurve>(b));
    const auto& va = std::get<std::vector<double>>(a);
    const auto& vb = std::get<std::vector<double>>(b);
    double total = 0.0;
    for (std::size_t i = 0; i < va.size(); ++i) total += grid_.weights[i] * va[i] * vb[i];
    return k * total;
  }

  /// <A-B, A-B> in support-function space, evaluated on the difference so it
  /// does not cancel; equals <A,A> - 2<A,B> + <B,B>.
  double distance_sq(const Profile& a, const Profile& b) const {
    if (const auto* m = std::get_if<Matrix1D>(&spec_)) {
      const auto ia = std::get<Interval>(a), ib = std::get<Interval>(b);
      return matrix_form(*m, {ia.lo - ib.lo, ia.hi - ib.hi}, {ia.lo - ib.lo, ia.hi - ib.hi});
    }
    const double k = std::get<SphericalL2>(spec_).scale();
    if (const auto* fa = std::get_if<SupportCurve>(&a)) {
      const SupportCurve d = *fa - std::get<SupportCurve>(b);
      return k / kTwoPi * integrate_product(d, d);
    }
    const auto& va = std::get<std::vector<double>>(a);
    const auto& vb = std::get<std::vector<double>>(b);
    double total = 0.0;
    for (std::size_t i = 0; i < va.size(); ++i) total += grid_.weights[i] * (va[i] - vb[i]) * (va[i] - vb[i]);
    return k * total;
  }

  double operator()(const Body& a, const Body& b) const { return inner(profile(a), profile(b)); }

  double norm(const Body& a) const {
    const auto p = profile(a);
    return std::sqrt(std::max(0.0, inner(p, p)));
  }

  double distance(const Body& a, const Body& b) const {
    const double r = distance_sq(profile(a), profile(b));
    if (r < -1e-12) throw InvariantError("distance: negative squared distance " + std::to_string(r));
    return std::sqrt(std::max(0.0, r));
  }

  /// <{a},{b}>, the induced inner product on R^n.
  double induced(const Vec& a, const Vec& b) const { return (*this)(Body::point(a), Body::point(b)); }

  Eigen::MatrixXd gram() const {
    const std::size_t n = dim();
    std::vector<Profile> basis;
    for (std::size_t i = 0; i < n; ++i) {
      Vec e(n, 0.0);
      e[i] = 1.0;
      basis.push_back(profile(Body::point(e)));
    }
    Eigen::MatrixXd g(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) g(i, j) = inner(basis[i], basis[j]);
    return g;
  }

  /// k_A: the Riesz representer of x -> <A,{x}> under the induced inner product.
  Vec center(const Body& a) const {
    const std::size_t n = dim();
    const auto pa = profile(a);
    Eigen::VectorXd c(n);
    for (std::size_t i = 0; i < n; ++i) {
      Vec e(n, 0.0);
      e[i] = 1.0;
      c(i) = inner(pa, profile(Body::point(e)));
    }
    const Eigen::MatrixXd g = gram();
    Eigen::LDLT<Eigen::MatrixXd> ldlt(g);
    if (ldlt.info() != Eigen::Success || !ldlt.isPositive() || std::abs(g.determinant()) < 1e-14)
      throw InputError("center: singular Gram matrix (invalid set inner product)");
    const Eigen::VectorXd k = ldlt.solve(c);
    return Vec(k.data(), k.data() + n);
  }

 private:
  SetIP spec_;
  DirectionGrid grid_;
};

inline double ip(const SetIP& spec, const Body& a, const Body& b) { return InnerProduct(spec)(a, b); }
inline double ip_norm(const SetIP& spec, const Body& a) { return InnerProduct(spec).norm(a); }
inline double distance(const SetIP& spec, const Body& a, const Body& b) { return InnerProduct(spec).distance(a, b); }
inline Vec center(const SetIP& spec, const Body& a) { return InnerProduct(spec).center(a); }

/// Steiner point s_A = n * E[u h_A(u)] over the uniform sphere; in 2D the
/// closed form (1/pi) * integral of u h_A(u) dtheta.
inline Vec steiner_point(const Body& a, const GridOptions& grid = {}) {
  if (a.dim() == 2) {
    const Vec2 m = integrate_moment(support_curve(a));
    return {m.x / kPi, m.y / kPi};
  }
  const auto g = make_direction_grid(a.dim(), grid.size, grid.seed);
  Vec s(a.dim(), 0.0);
  for (std::size_t i = 0; i < g.directions.size(); ++i) {
    const double h = support(a, g.directions[i]);
    for (std::size_t j = 0; j < a.dim(); ++j) s[j] += g.weights[i] * h * g.directions[i][j];
  }
  for (auto& x : s) x *= static_cast<double>(a.dim());
  return s;
}

/// A body together with its center and its centred translate A0 = A + {-k_A}.
struct CenteredBody {
  Body original;
  Vec center;
  Body centered;
};

inline CenteredBody recentre(const InnerProduct& ip, const Body& a) {
  Vec k = ip.center(a);
  Vec neg = k;
  for (auto& x : neg) x = -x;
  return {a, k, translate(a, neg)};
}

inline CenteredBody recentre(const SetIP& spec, const Body& a) { return recentre(InnerProduct(spec), a); }

/// Interval version of recentring under the matrix form.
inline Interval recentre(const Matrix1D& mat, Interval a) {
  const double k = center(mat, a);
  return {a.lo - k, a.hi - k};
}

}  // namespace cvx
