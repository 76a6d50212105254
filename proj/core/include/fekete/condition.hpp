#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

#include "fekete/errors.hpp"
#include "fekete/log_magnitude.hpp"
#include "fekete/poly.hpp"
#include "fekete/sphere.hpp"

namespace fekete {

enum class Route { coefficient, spherical };

std::string_view to_string(Route r);

struct RootCondition {
  PlanePoint root;
  LogMagnitude mu;
};

// Normalized condition number at every root and its maximum.
struct ConditionReport {
  std::vector<RootCondition> per_root;
  LogMagnitude mu_max = LogMagnitude::zero();
  Route route = Route::spherical;

  std::size_t n() const { return per_root.size(); }
};

// mu_norm(P, z) = N^(1/2) ||P|| (1 + |z|^2)^(N/2 - 1) / |P'(z)| for a root z.
// Returns +inf when |P'(z)| <= 1e-14 ||P|| (1 + |z|^2)^((N-1)/2) (double root).
// Throws NotARoot when |P(z)| > 1e-8 ||P|| (1 + |z|)^N.
LogMagnitude mu_norm_coeff(const Polynomial& p, PlanePoint z);
// Same formula on double-double coefficients; the double-root threshold is
// lowered to 1e-28 to match the working precision.
LogMagnitude mu_norm_coeff(const ExtendedPolynomial& p, PlanePoint z);

// mu_norm at root i from the sphere points alone:
// (1/2) sqrt(N(N+1)) (int prod_j |p - x_j|^2 dsigma)^(1/2) / prod_{j != i} |x_i - x_j|.
// +inf when x_i coincides with another point.
LogMagnitude mu_norm_spherical(const Configuration& cfg, std::size_t i);
// Same, reusing a precomputed log of the sphere integral.
LogMagnitude mu_norm_spherical(const Configuration& cfg, std::size_t i, LogMagnitude log_integral);

// Spherical route for every point; one quadrature evaluation in total.
ConditionReport mu_norm_max(const Configuration& cfg);

// Coefficient route for a configuration: projects the points, builds the monic
// polynomial with from_roots_extended and evaluates mu_norm_coeff at the known roots.
// Throws NearNorthPole.
ConditionReport mu_norm_max_coeff(const Configuration& cfg);

// Coefficient route for a polynomial given by its coefficients: finds the
// roots first. Throws NoConvergence.
ConditionReport mu_norm_max(const Polynomial& p);

// Spherical route for a polynomial given by its coefficients: roots found as
// above, projected to the sphere and evaluated with mu_norm_spherical. Roots
// the coefficient route classifies as multiple are reported +inf. Throws
// NoConvergence.
ConditionReport mu_norm_max_spherical(const Polynomial& p);

// |E_log - sum_i log mu_i - (-N log(sqrt(N(N+1))/2) - (N/2) log int)| using the
// spherical route. Throws CoincidentPoints.
double energy_condition_identity_residual(const Configuration& cfg);

// (1/2) N log N + (c_log - log 2) N: lower bound on sum_i log mu_i (o(N) dropped).
double sum_log_mu_lower_bound(std::size_t n, double c_log);

// Roots and their Weyl-scaled residuals |P(z)| / (||P|| (1 + |z|^2)^(N/2)).
struct RootFinderResult {
  std::vector<PlanePoint> roots;
  std::vector<double> scaled_residuals;
  int sweeps = 0;
};

class NoConvergence : public Error {
 public:
  explicit NoConvergence(RootFinderResult best)
      : Error("root finder did not converge"), best_(std::move(best)) {}
  const RootFinderResult& best() const noexcept { return best_; }

 private:
  RootFinderResult best_;
};

struct RootFinderOptions {
  int max_sweeps = 500;
  double residual_tolerance = 1e-10;
};

// Aberth-Ehrlich simultaneous iteration. Starts from roots of unity scaled by
// the Cauchy bound. Throws ZeroPolynomial for the zero polynomial,
// std::invalid_argument for degree 0, NoConvergence after max_sweeps.
RootFinderResult find_roots(const Polynomial& p, const RootFinderOptions& opts = {});

}  // namespace fekete
