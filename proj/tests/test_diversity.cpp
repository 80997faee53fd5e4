#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "common/oracles.hpp"

using namespace cvx;

namespace {

const InnerProduct& l2() {
  static const InnerProduct ip{SphericalL2{}};
  return ip;
}

PointSet sampler(std::mt19937_64& rng) { return random_point_set(rng); }

PointSet scaled_set(const PointSet& s, double l, Vec shift) {
  PointSet out;
  for (auto p : s.points()) {
    for (std::size_t i = 0; i < p.size(); ++i) p[i] = l * p[i] + shift[i];
    out.add(p);
  }
  return out;
}

}  // namespace

TEST(Diversity, SingletonIsZero) { EXPECT_EQ(diversity(l2(), PointSet({{0.3, -2.0}})), 0.0); }

TEST(Diversity, TwoPointsOnAxis) {
  const PointSet s({{0, 0}, {1, 0}});
  const double d = diversity(l2(), s);
  const Body seg = polytope_from_points({{-1, 0}, {1, 0}});
  const double q = oracle::quadrature_ip(seg, seg, 20000);
  EXPECT_NEAR(q, 1.0, 1e-6);
  EXPECT_NEAR(d * d, q, 1e-6);
}

TEST(Diversity, MonotoneUnderAddingPoints) {
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> u(-2, 2);
  for (int i = 0; i < 100; ++i) {
    PointSet s = random_point_set(rng);
    const double before = diversity(l2(), s);
    s.add({u(rng), u(rng)});
    EXPECT_GE(diversity(l2(), s), before - 1e-12);
  }
}

TEST(Diversity, ZeroExactlyForAtMostOnePoint) {
  std::mt19937_64 rng(2);
  for (int i = 0; i < 100; ++i) {
    const PointSet s = random_point_set(rng);
    const double d = diversity(l2(), s);
    if (s.size() <= 1)
      EXPECT_LE(d, 1e-9);
    else
      EXPECT_GT(d, 1e-9);
  }
}

TEST(Diversity, TranslationInvariantAndHomogeneous) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> l(0.0, 3.0), u(-5, 5);
  for (int i = 0; i < 100; ++i) {
    const PointSet s = random_point_set(rng);
    const double d = diversity(l2(), s);
    EXPECT_NEAR(diversity(l2(), scaled_set(s, 1.0, {u(rng), u(rng)})), d, 1e-9);
    const double lam = l(rng);
    EXPECT_NEAR(diversity(l2(), scaled_set(s, lam, {0, 0})), lam * d, 1e-9);
  }
}

TEST(Diversity, SubadditiveOnOverlappingUnions) {
  std::mt19937_64 rng(4);
  for (int i = 0; i < 100; ++i) {
    const PointSet a = random_point_set(rng);
    PointSet b = random_point_set(rng);
    b.add(a.points().front());
    EXPECT_LE(diversity(l2(), set_union(a, b)), diversity(l2(), a) + diversity(l2(), b) + 1e-9);
  }
}

TEST(Diversity, PointsOnALineGiveScaledDistance) {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(-3, 3);
  const Vec2 dir = unit_at(0.7);
  const Body unit_seg = polytope_from_points({{-dir.x, -dir.y}, {dir.x, dir.y}});
  const double scale = std::sqrt(oracle::quadrature_ip(unit_seg, unit_seg, 20000));
  for (int i = 0; i < 50; ++i) {
    const double x = u(rng), y = u(rng), z = u(rng);
    auto at = [&](double t) { return Vec{t * dir.x, t * dir.y}; };
    const double dxy = diversity(l2(), PointSet({at(x), at(y)}));
    EXPECT_NEAR(dxy, scale * std::abs(x - y), 1e-6);
    // With B = {y} shared, (D2) is the triangle inequality on the line.
    const double dyz = diversity(l2(), PointSet({at(y), at(z)}));
    const double dxz = diversity(l2(), PointSet({at(x), at(z)}));
    EXPECT_GE(dxy + dyz - dxz, -1e-9);
  }
}

TEST(Diversity, EmptySetRejected) {
  EXPECT_THROW(diversity(l2(), PointSet{}), InputError);
  EXPECT_THROW(difference_hull(PointSet{}), InputError);
}

TEST(Diversity, MatrixFormOnlyInOneDimension) {
  const InnerProduct m{SetIP{Matrix1D{}}};
  EXPECT_THROW(diversity(m, PointSet({{0, 0}, {1, 1}})), InputError);
  EXPECT_GT(diversity(m, PointSet({{0}, {1}})), 0.0);
}

TEST(Diversity, DifferenceHullIsSymmetric) {
  std::mt19937_64 rng(6);
  const Body d = difference_hull(random_point_set(rng, 2, 8));
  for (int i = 0; i < 100; ++i) {
    const Vec2 x = unit_at(0.0628 * i);
    EXPECT_NEAR(support(d, x), support(d, -x), 1e-12);
  }
}

TEST(DiversityAxioms, HoldOnRandomTriples) {
  const DiversityReport r = diversity_axiom_check(l2(), sampler, 500, 0, 1e-9);
  EXPECT_TRUE(r.all_passed());
  for (const char* n : {"D1", "D2", "monotone", "union_lemma"}) EXPECT_GE(r[n].worst, -1e-9) << n;
}

TEST(DiversityAxioms, SingletonTriplesHaveZeroResiduals) {
  const DiversityReport r =
      diversity_axiom_check(l2(), [](std::mt19937_64&) { return PointSet({{0.5, 0.5}}); }, 5, 0, 1e-9);
  EXPECT_TRUE(r.all_passed());
  EXPECT_EQ(r["D1"].worst, 0.0);
  EXPECT_EQ(r["D2"].worst, 0.0);
  EXPECT_EQ(r["union_lemma"].worst, 0.0);
}

TEST(DiversityAxioms, ThreeDimensionalPointSets) {
  SphericalL2 s;
  s.dim = 3;
  s.grid = 1024;
  const InnerProduct ip(s);
  const DiversityReport r =
      diversity_axiom_check(ip, [](std::mt19937_64& rng) { return random_point_set(rng, 3, 5); }, 50, 0, 1e-9);
  EXPECT_TRUE(r.all_passed());
}
