// Diversity of finite point sets: delta(S) = || conv(S - S) ||.
#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <random>
#include <string>
#include <vector>

#include "convexip/body.hpp"
#include "convexip/body_metric.hpp"
#include "convexip/inner_product.hpp"

namespace cvx {

/// Finite point set; points within 1e-12 of an earlier one are dropped.
class PointSet {
 public:
  PointSet() = default;
  explicit PointSet(const std::vector<Vec>& points) {
    for (const auto& p : points) add(p);
  }

  void add(const Vec& p) {
    if (p.empty()) throw InputError("point set: empty point");
    if (!points_.empty()) require_dim(p.size(), points_.front().size(), "point set");
    for (const auto& q : points_) {
      bool same = true;
      for (std::size_t i = 0; i < p.size() && same; ++i) same = std::abs(p[i] - q[i]) <= tol::kCoord;
      if (same) return;
    }
    points_.push_back(p);
  }

  const std::vector<Vec>& points() const { return points_; }
  std::size_t size() const { return points_.size(); }
  bool empty() const { return points_.empty(); }
  std::size_t dim() const { return points_.empty() ? 0 : points_.front().size(); }

  friend PointSet set_union(const PointSet& a, const PointSet& b) {
    PointSet out = a;
    for (const auto& p : b.points_) out.add(p);
    return out;
  }

 private:
  std::vector<Vec> points_;
};

/// conv(S - S), kept symbolic as conv(S) + (-conv(S)).
inline Body difference_hull(const PointSet& s) {
  if (s.empty()) throw InputError("diversity: empty point set");
  const Body hull = polytope_from_points(s.points());
  return Body::sum({hull, negate(hull)});
}

inline double diversity(const InnerProduct& ip, const PointSet& s) {
  if (s.empty()) throw InputError("diversity: empty point set");
  if (std::holds_alternative<Matrix1D>(ip.spec()) && s.dim() != 1)
    throw InputError("diversity: the matrix form applies to 1D point sets only");
  return ip.norm(difference_hull(s));
}

inline double diversity(const SetIP& spec, const PointSet& s) { return diversity(InnerProduct(spec), s); }

struct DiversityCheck {
  std::string name;
  bool passed = true;
  std::size_t violations = 0;
  double worst = std::numeric_limits<double>::infinity();  // smallest margin seen
};

struct DiversityReport {
  std::size_t trials = 0;
  std::vector<DiversityCheck> checks;  // D1, D2, monotone, union_lemma

  bool all_passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const DiversityCheck& c) { return c.passed; });
  }
  const DiversityCheck& operator[](const std::string& name) const {
    for (const auto& c : checks)
      if (c.name == name) return c;
    throw InputError("diversity report: no check named " + name);
  }
};

/// Draws a nonempty point set.
using PointSetSampler = std::function<PointSet(std::mt19937_64&)>;

inline PointSet random_point_set(std::mt19937_64& rng, std::size_t dim = 2, std::size_t max_points = 6) {
  std::uniform_int_distribution<std::size_t> count(1, max_points);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  PointSet s;
  const std::size_t n = count(rng);
  for (std::size_t i = 0; i < n; ++i) {
    Vec p(dim);
    for (auto& x : p) x = u(rng);
    s.add(p);
  }
  return s;
}

/// Checks (D1), (D2) with nonempty B, monotonicity under adding a point, and
/// the support inequality h_conv((A u B) - (A u B)) <= h_(A-A)+(B-B) when A and
/// B share a point. Margins are reported so that >= -tolerance means pass.
inline DiversityReport diversity_axiom_check(const InnerProduct& ip, const PointSetSampler& sampler,
                                             std::size_t trials, std::uint64_t seed = 0,
                                             double tolerance = 1e-9) {
  if (trials == 0) throw InputError("diversity_axiom_check: trials must be at least 1");
  DiversityCheck d1{"D1"}, d2{"D2"}, mono{"monotone"}, lemma{"union_lemma"};
  auto note = [tolerance](DiversityCheck& c, double margin) {
    c.worst = std::min(c.worst, margin);
    if (margin < -tolerance) {
      c.passed = false;
      ++c.violations;
    }
  };

  for (std::size_t t = 0; t < trials; ++t) {
    std::mt19937_64 rng(seed * 0x9E3779B97F4A7C15ULL + t + 1);
    const PointSet a = sampler(rng), c = sampler(rng);
    PointSet b = sampler(rng);
    // Share a point of A with B so the lemma and the (D2) chain apply.
    b.add(a.points()[std::uniform_int_distribution<std::size_t>(0, a.size() - 1)(rng)]);

    for (const PointSet* s : std::initializer_list<const PointSet*>{&a, &b, &c}) {
      const double d = diversity(ip, *s);
      // delta = 0 exactly when |S| <= 1; otherwise strictly positive.
      note(d1, s->size() <= 1 ? -std::abs(d) : (d > tolerance ? 0.0 : -1.0));
    }

    const double dab = diversity(ip, set_union(a, b));
    const double dbc = diversity(ip, set_union(b, c));
    const double dac = diversity(ip, set_union(a, c));
    note(d2, (dab + dbc - dac) / std::max(1.0, dac));

    const PointSet extra = sampler(rng);
    const PointSet grown = set_union(a, PointSet({extra.points().front()}));
    note(mono, diversity(ip, grown) - diversity(ip, a));

    // A and B share a point by construction.
    const Body lhs = difference_hull(set_union(a, b));
    const Body rhs = Body::sum({difference_hull(a), difference_hull(b)});
    const auto [hi, lo] = detail::support_gap_range(lhs, rhs, {});
    (void)lo;
    note(lemma, -hi);
  }
  DiversityReport r;
  r.trials = trials;
  r.checks = {d1, d2, mono, lemma};
  return r;
}

}  // namespace cvx
