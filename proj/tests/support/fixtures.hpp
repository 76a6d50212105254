#pragma once

#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include "fekete/sphere.hpp"

namespace fekete::testing {

inline Configuration antipodal_pair() { return Configuration({{0.0, 0.0, 1.0}, {0.0, 0.0, -1.0}}); }

// Antipodal pair away from the north pole, so every point has a plane image.
inline Configuration equatorial_pair() { return Configuration({{1.0, 0.0, 0.0}, {-1.0, 0.0, 0.0}}); }

inline Configuration tetrahedron() {
  const double s = 1.0 / std::sqrt(3.0);
  return Configuration({{s, s, s}, {s, -s, -s}, {-s, s, -s}, {-s, -s, s}});
}

inline Configuration equilateral_triangle() {
  const double h = std::sqrt(3.0) / 2.0;
  return Configuration({{1.0, 0.0, 0.0}, {-0.5, h, 0.0}, {-0.5, -h, 0.0}});
}

inline Configuration octahedron() {
  return Configuration({{1.0, 0.0, 0.0}, {-1.0, 0.0, 0.0}, {0.0, 1.0, 0.0}, {0.0, -1.0, 0.0}, {0.0, 0.0, 1.0},
                        {0.0, 0.0, -1.0}});
}

inline Configuration icosahedron() {
  const double phi = (1.0 + std::sqrt(5.0)) / 2.0;
  std::vector<SpherePoint> pts;
  for (double a : {-1.0, 1.0}) {
    for (double b : {-1.0, 1.0}) {
      pts.push_back(SpherePoint::normalized(0.0, a, b * phi));
      pts.push_back(SpherePoint::normalized(a, b * phi, 0.0));
      pts.push_back(SpherePoint::normalized(b * phi, 0.0, a));
    }
  }
  return Configuration(std::move(pts));
}

inline std::vector<PlanePoint> roots_of_unity(std::size_t n) {
  std::vector<PlanePoint> out;
  for (std::size_t k = 0; k < n; ++k) out.emplace_back(std::polar(1.0, 2.0 * std::numbers::pi * k / n));
  return out;
}

inline std::vector<PlanePoint> five_roots() {
  return {{0.3, 0.1}, {-1.2, 0.7}, {2.5, -0.4}, {-0.1, -0.9}, {0.8, 1.9}};
}

}  // namespace fekete::testing
