#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <vector>

#include "fekete/log_magnitude.hpp"
#include "fekete/sphere.hpp"

namespace fekete {

// Quadrature on S^2 for the normalized surface measure (total mass 1).
struct QuadratureRule {
  std::vector<SpherePoint> nodes;
  std::vector<double> weights;
  int exact_degree = 0;
};

// Gauss-Legendre nodes and weights on [-1, 1]; weights sum to 2.
void gauss_legendre(std::size_t n, std::vector<double>& nodes, std::vector<double>& weights);

// Product rule: Gauss-Legendre in cos(theta) with ceil((degree+1)/2) nodes times
// degree+1 equispaced azimuths. Exact for spherical polynomials up to `degree`.
QuadratureRule product_rule(int degree);

// Cached, shareable instance of product_rule.
std::shared_ptr<const QuadratureRule> cached_product_rule(int degree);

double integrate(const QuadratureRule& rule, const std::function<double(const SpherePoint&)>& f);

// log of the integral of prod_j |p - x_j|^2 over S^2 (normalized measure),
// using a rule of exact degree 2N. Coincident points are allowed. Each node's
// product is accumulated with explicit exponent tracking so it cannot
// under/overflow; nodes on top of some x_j contribute exact zeros.
LogMagnitude sphere_integral(const Configuration& cfg);
LogMagnitude sphere_integral(const Configuration& cfg, const QuadratureRule& rule);

}  // namespace fekete
