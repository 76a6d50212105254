#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string_view>
#include <vector>

#include "fekete/sphere.hpp"

namespace fekete {

enum class Objective { min_energy, max_quotient };

std::string_view to_string(Objective o);

struct OptimizerConfig {
  std::size_t n = 4;
  Objective objective = Objective::min_energy;
  std::uint64_t seed = 1;
  std::size_t restarts = 1;
  std::size_t max_iters = 20000;
  double grad_tol = 1e-10;
  // Line search: first trial step initial_step (<= 0 means 1/N), shrunk by
  // `shrink` until the Armijo condition with constant `armijo` holds.
  double initial_step = 0.0;
  double shrink = 0.5;
  double armijo = 1e-4;
  double min_step = 1e-16;
  // Iteration also stops once the decrease predicted at the first trial step,
  // initial_step * |grad|^2, falls below precision_floor * eps * (1 + |f|):
  // beyond that point the line search only sees rounding noise.
  double precision_floor = 32.0;
  // Central finite-difference step for quotient gradients.
  double fd_step = 1e-6;
};

struct IterationRecord {
  std::size_t iteration = 0;
  double objective = 0.0;
  double grad_norm = 0.0;
  double step = 0.0;
};

enum class StopReason { gradient_tolerance, precision_floor, line_search_failed, max_iterations };

std::string_view to_string(StopReason r);

struct OptimizerTrace {
  Objective objective = Objective::min_energy;
  std::vector<IterationRecord> iterations;
  Configuration initial;
  Configuration final_config;
  double final_objective = 0.0;
  double final_grad_norm = 0.0;
  StopReason stop = StopReason::max_iterations;
  // True when stopped by the gradient tolerance or the precision floor.
  bool converged = false;
  // Index of the restart that produced this trace (multi-start runs).
  std::size_t restart = 0;
};

// Generalized spiral: heights equally spaced in [-1, 1], azimuth advanced by
// 3.6 / sqrt(n (1 - h^2)). Deterministic and well separated.
Configuration spiral_points(std::size_t n);

// Riemannian gradient descent on log_energy with backtracking and
// renormalization retraction. Trial points that collide are rejected.
OptimizerTrace minimize_energy(const Configuration& start, const OptimizerConfig& opts);

// Gradient ascent on log_quotient of the projected points, with tangent
// gradients from central finite differences. Whenever the configuration
// drifts near the north pole it is rotated (the quotient is invariant).
OptimizerTrace maximize_quotient(const Configuration& start, const OptimizerConfig& opts);

// Runs opts.restarts independent optimizations (restart 0 starts from the
// spiral, the rest from seeded uniform samples) in parallel and returns all of
// them; best_restart() picks the winner.
std::vector<OptimizerTrace> multi_start(const OptimizerConfig& opts);
// Best objective (lowest energy / highest quotient); ties go to the lowest index.
std::size_t best_restart(const std::vector<OptimizerTrace>& traces);

struct KnEstimate {
  std::size_t n = 0;
  double best = 0.0;
  double mean = 0.0;
  double spread = 0.0;  // max - min over restarts
  std::vector<double> per_restart;
};

// Best k_value = quotient / sqrt(e^N / (N+1)) over restarts. Requires 2 <= n <= 16.
KnEstimate kn_estimate(std::size_t n, const OptimizerConfig& opts);

// Energy bound implied by the measured worst condition number:
//   E <= kappa N^2 - N log(sqrt(N(N+1))/2) + N log mu_max.
struct Thmain1Report {
  std::size_t n = 0;
  double energy = 0.0;
  double log_mu_max = 0.0;
  double bound = 0.0;
  double slack = 0.0;  // bound - energy
  bool holds = false;
  // Residual of the energy/condition identity the bound is derived from.
  double identity_residual = 0.0;
  // Jensen step: log(int)/2 + kappa N >= 0.
  double jensen_slack = 0.0;
  // Asymptotic form with C = mu_max / sqrt(N).
  double packaged_bound = 0.0;
};

Thmain1Report thmain1_check(const Configuration& cfg, std::optional<double> log_mu_max = std::nullopt);

}  // namespace fekete
