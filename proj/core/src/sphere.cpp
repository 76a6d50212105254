#include "fekete/sphere.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "fekete/errors.hpp"

namespace fekete {

SpherePoint SpherePoint::normalized(double x, double y, double z) {
  const double r = std::sqrt(x * x + y * y + z * z);
  if (!(r > 0.0) || !std::isfinite(r)) throw std::invalid_argument("cannot normalize a zero or non-finite vector");
  return {x / r, y / r, z / r};
}

bool SpherePoint::on_sphere(double tol) const { return std::abs(a * a + b * b + c * c - 1.0) <= tol; }

bool RiemannPoint::on_sphere(double tol) const {
  const double h = c - 0.5;
  return std::abs(a * a + b * b + h * h - 0.25) <= tol;
}

Configuration::Configuration(std::vector<SpherePoint> points) : points_(std::move(points)) {
  for (const auto& p : points_) {
    if (!p.on_sphere()) throw std::invalid_argument("configuration point is not on the unit sphere");
  }
}

Configuration Configuration::from_roots(std::span<const PlanePoint> roots) {
  std::vector<SpherePoint> pts;
  pts.reserve(roots.size());
  for (const auto& z : roots) pts.push_back(plane_to_sphere(z));
  return Configuration(std::move(pts));
}

std::vector<PlanePoint> Configuration::to_plane() const {
  std::vector<PlanePoint> out;
  out.reserve(points_.size());
  for (const auto& x : points_) out.push_back(sphere_to_plane(x));
  return out;
}

double Configuration::max_height() const {
  double h = -1.0;
  for (const auto& x : points_) h = std::max(h, x.c);
  return h;
}

SpherePoint plane_to_sphere(PlanePoint z) {
  const double r2 = z.norm_squared();
  const double d = 1.0 + r2;
  // (r2 - 1) / (1 + r2) written as 1 - 2 / (1 + r2) keeps the pole side accurate.
  return {2.0 * z.re / d, 2.0 * z.im / d, r2 <= 1.0 ? (r2 - 1.0) / d : 1.0 - 2.0 / d};
}

PlanePoint sphere_to_plane(const SpherePoint& x) {
  if (x.c >= 1.0 - kPoleCutoff) throw NearNorthPole(x.c);
  const double rho2 = x.a * x.a + x.b * x.b;
  if (x.c > 0.0 && rho2 > 0.0) {
    // On the sphere a^2 + b^2 = (1 - c)(1 + c), so this avoids forming 1 - c.
    const double s = (1.0 + x.c) / rho2;
    return {x.a * s, x.b * s};
  }
  const double d = 1.0 - x.c;
  return {x.a / d, x.b / d};
}

SpherePoint homothety(const RiemannPoint& p) { return {2.0 * p.a, 2.0 * p.b, 2.0 * p.c - 1.0}; }

RiemannPoint homothety_inverse(const SpherePoint& x) { return {0.5 * x.a, 0.5 * x.b, 0.5 * (x.c + 1.0)}; }

PlanePoint riemann_to_plane(const RiemannPoint& p) {
  if (p.c >= 1.0 - 0.5 * kPoleCutoff) throw NearNorthPole(2.0 * p.c - 1.0);
  const double d = 1.0 - p.c;
  return {p.a / d, p.b / d};
}

RiemannPoint plane_to_riemann(PlanePoint z) {
  const double r2 = z.norm_squared();
  const double d = 1.0 + r2;
  return {z.re / d, z.im / d, r2 / d};
}

double chordal_distance(const SpherePoint& x, const SpherePoint& y) {
  return std::hypot(x.a - y.a, x.b - y.b, x.c - y.c);
}

double chordal_distance(const RiemannPoint& x, const RiemannPoint& y) {
  return std::hypot(x.a - y.a, x.b - y.b, x.c - y.c);
}

double plane_chordal_distance(PlanePoint z, PlanePoint w) {
  const double diff = std::abs(z.complex() - w.complex());
  return 2.0 * diff / std::sqrt((1.0 + z.norm_squared()) * (1.0 + w.norm_squared()));
}

SpherePoint rotate(const Rotation& r, const SpherePoint& x) {
  return {r[0] * x.a + r[1] * x.b + r[2] * x.c, r[3] * x.a + r[4] * x.b + r[5] * x.c,
          r[6] * x.a + r[7] * x.b + r[8] * x.c};
}

Configuration rotate(const Rotation& r, const Configuration& cfg) {
  std::vector<SpherePoint> pts;
  pts.reserve(cfg.size());
  for (const auto& x : cfg) {
    // Renormalize so repeated rotations do not drift off the sphere.
    const auto y = rotate(r, x);
    pts.push_back(SpherePoint::normalized(y.a, y.b, y.c));
  }
  return Configuration(std::move(pts));
}

PlanePoint Moebius::operator()(PlanePoint z) const {
  const auto w = z.complex();
  return PlanePoint((a * w + b) / (c * w + d));
}

}  // namespace fekete
