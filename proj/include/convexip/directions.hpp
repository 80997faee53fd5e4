// Deterministic direction sets on the unit sphere with equal quadrature weights.
#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <vector>

#include "convexip/core.hpp"

namespace cvx {

struct DirectionGrid {
  std::size_t dim = 0;
  std::vector<Vec> directions;
  std::vector<double> weights;  // probability weights, sum to 1
  std::vector<double> angles;   // 2D only: ascending angles in [0, 2pi)
};

namespace detail {

inline double radical_inverse(std::uint64_t index, std::uint32_t base) {
  double inv = 1.0 / base, f = inv, r = 0.0;
  while (index > 0) {
    r += f * static_cast<double>(index % base);
    index /= base;
    f *= inv;
  }
  return r;
}

inline constexpr std::array<std::uint32_t, 24> kPrimes = {2,  3,  5,  7,  11, 13, 17, 19, 23, 29, 31, 37,
                                                           41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89};

inline constexpr double kGolden = 1.6180339887498948482;

inline double seed_phase(std::uint64_t seed) {
  if (seed == 0) return 0.5;
  double x = static_cast<double>(seed) * (kGolden - 1.0);
  return x - std::floor(x);
}

}  // namespace detail

/// 1D: {+1, -1}. 2D: `size` equally spaced angles (offset by a seed-derived
/// phase). 3D: spherical Fibonacci lattice. Higher: Halton points pushed through
/// Box-Muller and normalized.
inline DirectionGrid make_direction_grid(std::size_t dim, std::size_t size = 4096, std::uint64_t seed = 0) {
  if (dim == 0) throw InputError("direction grid: dimension must be positive");
  if (size == 0) throw InputError("direction grid: size must be positive");
  DirectionGrid g;
  g.dim = dim;
  if (dim == 1) {
    g.directions = {{1.0}, {-1.0}};
    g.weights = {0.5, 0.5};
    return g;
  }
  const double phase = detail::seed_phase(seed);
  g.directions.reserve(size);
  if (dim == 2) {
    for (std::size_t i = 0; i < size; ++i) {
      const double t = kTwoPi * (static_cast<double>(i) + phase) / static_cast<double>(size);
      g.angles.push_back(t);
      g.directions.push_back({std::cos(t), std::sin(t)});
    }
  } else if (dim == 3) {
    for (std::size_t i = 0; i < size; ++i) {
      const double z = 1.0 - (2.0 * static_cast<double>(i) + 1.0) / static_cast<double>(size);
      const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
      const double phi = kTwoPi * (static_cast<double>(i) / detail::kGolden + phase);
      g.directions.push_back({r * std::cos(phi), r * std::sin(phi), z});
    }
  } else {
    const std::size_t pairs = (dim + 1) / 2;
    if (2 * pairs > detail::kPrimes.size()) throw InputError("direction grid: dimension too large");
    for (std::size_t i = 0; i < size; ++i) {
      const std::uint64_t idx = seed * size + i + 1;
      Vec v;
      for (std::size_t p = 0; p < pairs; ++p) {
        const double u1 = std::max(detail::radical_inverse(idx, detail::kPrimes[2 * p]), 1e-300);
        const double u2 = detail::radical_inverse(idx, detail::kPrimes[2 * p + 1]);
        const double rad = std::sqrt(-2.0 * std::log(u1));
        v.push_back(rad * std::cos(kTwoPi * u2));
        if (v.size() < dim) v.push_back(rad * std::sin(kTwoPi * u2));
      }
      const double n = norm(v);
      for (auto& x : v) x /= n;
      g.directions.push_back(std::move(v));
    }
  }
  g.weights.assign(size, 1.0 / static_cast<double>(size));
  return g;
}

}  // namespace cvx
