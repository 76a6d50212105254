#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "fekete/poly.hpp"
#include "fekete/sphere.hpp"

namespace fekete {

using Rng = std::mt19937_64;

// splitmix64 mix of a root seed and a stream index; used to give every fuzz
// trial or optimizer restart its own independent, reproducible stream.
std::uint64_t derive_seed(std::uint64_t root, std::uint64_t stream);

// Uniform on S^2 (normalized 3D Gaussian).
SpherePoint random_sphere_point(Rng& rng);
Configuration random_configuration(std::size_t n, Rng& rng);

// Standard complex Gaussian plane points.
std::vector<PlanePoint> random_gaussian_roots(std::size_t n, Rng& rng);

// Points scattered with spread `radius` around a few random centres.
std::vector<PlanePoint> random_clustered_roots(std::size_t n, Rng& rng, double radius = 1e-3);

// Haar-random rotation of S^2 and the matching unitary Moebius map of the plane.
Rotation random_rotation(Rng& rng);
Moebius random_unitary_moebius(Rng& rng);

Polynomial random_polynomial(std::size_t degree, Rng& rng);

}  // namespace fekete
