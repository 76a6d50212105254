#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace fekete {

// Points closer than this (in the c coordinate) to the north pole (0,0,1) have
// no representable stereographic image; |z| stays below ~2e9 on the accepted side.
inline constexpr double kPoleCutoff = 1e-9;

// Tolerance for the on-sphere invariants of SpherePoint / RiemannPoint.
inline constexpr double kOnSphereTolerance = 1e-12;

// A finite point z = re + i im of the complex plane.
struct PlanePoint {
  double re = 0.0;
  double im = 0.0;

  constexpr PlanePoint() = default;
  constexpr PlanePoint(double r, double i) : re(r), im(i) {}
  explicit PlanePoint(std::complex<double> z) : re(z.real()), im(z.imag()) {}

  std::complex<double> complex() const { return {re, im}; }
  double norm_squared() const { return re * re + im * im; }

  friend bool operator==(const PlanePoint&, const PlanePoint&) = default;
};

// A point (a,b,c) on the unit sphere S^2 centred at the origin.
struct SpherePoint {
  double a = 0.0;
  double b = 0.0;
  double c = -1.0;

  constexpr SpherePoint() = default;
  constexpr SpherePoint(double x, double y, double z) : a(x), b(y), c(z) {}

  // Radially projects any nonzero vector onto the sphere.
  static SpherePoint normalized(double x, double y, double z);

  double dot(const SpherePoint& o) const { return a * o.a + b * o.b + c * o.c; }
  bool on_sphere(double tol = kOnSphereTolerance) const;

  friend bool operator==(const SpherePoint&, const SpherePoint&) = default;
};

// A point on the Riemann sphere: radius 1/2, centred at (0,0,1/2).
struct RiemannPoint {
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;

  constexpr RiemannPoint() = default;
  constexpr RiemannPoint(double x, double y, double z) : a(x), b(y), c(z) {}

  bool on_sphere(double tol = kOnSphereTolerance) const;

  friend bool operator==(const RiemannPoint&, const RiemannPoint&) = default;
};

// Ordered list of N >= 1 points on S^2 (the roots of a degree-N polynomial,
// seen through the inverse stereographic projection).
class Configuration {
 public:
  Configuration() = default;
  explicit Configuration(std::vector<SpherePoint> points);

  static Configuration from_roots(std::span<const PlanePoint> roots);

  std::size_t size() const { return points_.size(); }
  bool empty() const { return points_.empty(); }
  const SpherePoint& operator[](std::size_t i) const { return points_[i]; }
  SpherePoint& operator[](std::size_t i) { return points_[i]; }
  std::span<const SpherePoint> points() const { return points_; }
  auto begin() const { return points_.begin(); }
  auto end() const { return points_.end(); }

  // Stereographic images of every point; throws NearNorthPole if any point
  // is inside the pole cutoff.
  std::vector<PlanePoint> to_plane() const;

  // Largest c coordinate, i.e. how close the configuration gets to the pole.
  double max_height() const;

 private:
  std::vector<SpherePoint> points_;
};

// Inverse of the stereographic projection from the north pole of S^2:
// z -> (2 Re z, 2 Im z, |z|^2 - 1) / (1 + |z|^2).
SpherePoint plane_to_sphere(PlanePoint z);

// x = (a,b,c) -> (a + i b) / (1 - c). Throws NearNorthPole when c >= 1 - kPoleCutoff.
PlanePoint sphere_to_plane(const SpherePoint& x);

// The homothety S -> S^2, p -> 2p - (0,0,1), and its inverse.
SpherePoint homothety(const RiemannPoint& p);
RiemannPoint homothety_inverse(const SpherePoint& x);

// Stereographic projection of the Riemann sphere from (0,0,1) and its inverse.
PlanePoint riemann_to_plane(const RiemannPoint& p);
RiemannPoint plane_to_riemann(PlanePoint z);

// Euclidean distance in R^3.
double chordal_distance(const SpherePoint& x, const SpherePoint& y);
double chordal_distance(const RiemannPoint& x, const RiemannPoint& y);

// Chordal distance of two plane points measured through plane_to_sphere:
// 2|z - w| / sqrt((1 + |z|^2)(1 + |w|^2)).
double plane_chordal_distance(PlanePoint z, PlanePoint w);

// Row-major 3x3 rotation matrix.
using Rotation = std::array<double, 9>;

SpherePoint rotate(const Rotation& r, const SpherePoint& x);
Configuration rotate(const Rotation& r, const Configuration& cfg);

// 2x2 complex matrix [[a, b], [c, d]] acting on the plane as a Moebius map
// z -> (a z + b) / (c z + d). For unitary matrices this is a rigid rotation of
// the sphere. The image of the pole z = -d/c is not representable; callers
// are expected to avoid it.
struct Moebius {
  std::complex<double> a{1.0}, b{0.0}, c{0.0}, d{1.0};

  PlanePoint operator()(PlanePoint z) const;
};

}  // namespace fekete
