#pragma once

#include <cmath>
#include <cstddef>
#include <numbers>
#include <span>
#include <vector>

#include "fekete/sphere.hpp"

namespace fekete {

// Constants of the large-N expansion of the minimal logarithmic energy.
struct EnergyConstants {
  // Continuous logarithmic energy of the uniform measure on S^2.
  static constexpr double kappa = 0.5 - std::numbers::ln2;
  // Known bounds on the third-order constant C_log.
  static constexpr double c_log_upper = -0.0556053;
  static constexpr double c_log_lower = -0.2232823;
};

// Pairwise distances at or below this floor count as coincident points.
inline constexpr double kCoincidenceFloor = 1e-14;

// Logarithmic energy over ordered pairs: -sum_{i != j} log |x_i - x_j|.
// Throws CoincidentPoints. Summation is blocked so the result is bitwise
// independent of the number of worker threads.
double log_energy(const Configuration& cfg);

// Same energy for points on the Riemann sphere (radius 1/2). Related to the
// unit-sphere energy of the homothetic image by E_S = E + log(2) (N^2 - N).
double log_energy_riemann(std::span<const RiemannPoint> points);

// kappa n^2 - n log(n) / 2 + c_log n, i.e. the minimal-energy expansion with
// the o(n) term dropped.
double min_energy_expansion(std::size_t n, double c_log);

// Energy bound for roots of polynomials with mu_norm <= C sqrt(N):
// kappa N^2 - N log N / 2 + log(2C) N - (N/2) log(1 + 1/N).
double thmain1_bound(std::size_t n, double c_big);

struct TangentVector {
  double a = 0.0, b = 0.0, c = 0.0;
  double norm_squared() const { return a * a + b * b + c * c; }
};

// Riemannian gradient of log_energy: the ambient gradient
// -2 sum_{j != i} (x_i - x_j) / |x_i - x_j|^2 projected onto the tangent plane at x_i.
std::vector<TangentVector> energy_gradient(const Configuration& cfg);

// Euclidean norm of the stacked gradient.
double gradient_norm(std::span<const TangentVector> grad);

struct EnergyReport {
  double value = 0.0;
  std::size_t n = 0;
  // Expansion evaluated with the lower / upper bounds of C_log.
  double lower_bound = 0.0;
  double upper_bound_conjectured = 0.0;
  // value - upper_bound_conjectured; the expansion drops an o(N) term, so
  // this gap is a heuristic, not a certified quantity.
  double gap_to_expansion = 0.0;
};

EnergyReport energy_report(const Configuration& cfg);

}  // namespace fekete
