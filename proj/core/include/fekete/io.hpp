#pragma once

#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

#include "fekete/poly.hpp"
#include "fekete/sphere.hpp"

namespace fekete {

// Point-set text format: one point per line, "re im" (plane) or "x y z"
// (sphere), whitespace separated; lines starting with '#' and blank lines are
// ignored. The column count of the first data line decides the kind and every
// later line must match. Sphere rows are radially normalized.
struct PointSet {
  enum class Kind { plane, sphere };
  Kind kind = Kind::sphere;
  std::vector<PlanePoint> plane;
  std::vector<SpherePoint> sphere;

  std::size_t size() const { return kind == Kind::plane ? plane.size() : sphere.size(); }
  // Sphere view of the set (plane points go through plane_to_sphere).
  Configuration configuration() const;
  // Plane view (sphere points go through sphere_to_plane; may throw NearNorthPole).
  std::vector<PlanePoint> roots() const;
};

PointSet read_point_set(std::istream& in, const std::string& source = "<stream>");
PointSet read_point_set_file(const std::string& path);

void write_point_set(std::ostream& out, const Configuration& cfg);
void write_point_set(std::ostream& out, const std::vector<PlanePoint>& points);

// Polynomial text format: one coefficient per line "re im", ascending degree,
// '#' comments allowed. JSON alternative: {"coeffs": [[re, im], ...]}; the
// reader picks JSON when the first non-blank character is '{'.
Polynomial read_polynomial(std::istream& in, const std::string& source = "<stream>");
Polynomial read_polynomial_file(const std::string& path);

void write_polynomial(std::ostream& out, const Polynomial& p);

}  // namespace fekete
