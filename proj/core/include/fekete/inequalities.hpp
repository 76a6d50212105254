#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "fekete/poly.hpp"
#include "fekete/sphere.hpp"

namespace fekete {

// Equality tolerance for every log-domain check in this module.
inline constexpr double kLogTolerance = 1e-9;

// log( prod_i ||x - z_i|| / ||prod_i (x - z_i)|| ). Nonnegative because the
// Weyl norm is submultiplicative. Throws DegreeTooLarge.
double log_quotient(std::span<const PlanePoint> roots);

// log of the quotient ceiling sqrt(e^N / (N + 1)), i.e. (N - log(N + 1)) / 2.
double log_quotient_bound(std::size_t n);

// |log_quotient(projected roots) - (N log 2 - log(N+1)/2 - log(int)/2)|, the
// gap between the coefficient route and the sphere-integral route for the
// quotient. Throws NearNorthPole.
double miformula_residual(const Configuration& cfg);

struct QuotientReport {
  std::size_t n = 0;
  double log_quotient = 0.0;
  double log_bound = 0.0;
  // exp(log_quotient - log_bound); in (0, 1] for every genuine configuration.
  double k_value = 0.0;
  bool holds = false;

  double log_slack() const { return log_bound - log_quotient; }
};

QuotientReport check_thmain2(std::span<const PlanePoint> roots);

// Result of an inequality check: holds iff log_slack >= -kLogTolerance.
// Positive slack means the inequality holds with room to spare.
struct CheckResult {
  bool holds = false;
  double log_slack = 0.0;
};

// ||PQ|| >= sqrt(m! n! / (m+n)!) ||P|| ||Q||.
CheckResult check_bombieri_pair(const Polynomial& p, const Polynomial& q);

// ||P_1 ... P_m|| >= sqrt(k_1! ... k_m! / (k_1 + ... + k_m)!) ||P_1|| ... ||P_m||.
CheckResult check_corollary_multi(std::span<const Polynomial> factors);

// ||P|| ||Q|| >= ||PQ|| (submultiplicativity of the Weyl norm).
CheckResult check_algebra_norm(const Polynomial& p, const Polynomial& q);

// log min{ sqrt((sum k)! / prod k_i!), sqrt(e^(sum k) / (sum k + 1)) }.
double combined_bound(std::span<const std::size_t> degrees);

// Absolute residual of
//   E = sum_i log mu_i + N log_quotient - log(2) N^2 - (N/2) log N + log(2) N
// with spherical-route mu. Throws CoincidentPoints, NearNorthPole.
double abs_identity_residual(const Configuration& cfg);

// log of the lower-bound factor for well-conditioned root sets:
// c_log - log(2C) + (N - log N) / 2.
double sharp2_lower_bound(std::size_t n, double c_big, double c_log);

}  // namespace fekete
