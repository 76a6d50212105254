#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "fekete/condition.hpp"

namespace fekete {

namespace {

// Starting points on circles whose radii come from the upper convex hull of
// (i, log|a_i|), one circle per hull edge with as many points as the edge spans.
std::vector<Complex> initial_approximations(const Polynomial& p) {
  const std::size_t n = p.degree();
  std::vector<std::size_t> hull;
  std::vector<double> height(n + 1, -std::numeric_limits<double>::infinity());
  for (std::size_t i = 0; i <= n; ++i) {
    if (p[i] == Complex{0.0}) continue;
    height[i] = std::log(std::abs(p[i]));
    while (hull.size() >= 2) {
      const std::size_t a = hull[hull.size() - 2];
      const std::size_t b = hull.back();
      const double cross = (height[b] - height[a]) * static_cast<double>(i - a) -
                           (height[i] - height[a]) * static_cast<double>(b - a);
      if (cross > 0.0) break;
      hull.pop_back();
    }
    hull.push_back(i);
  }

  std::vector<Complex> z;
  z.reserve(n);
  double smallest = std::numeric_limits<double>::infinity();
  for (std::size_t e = 1; e < hull.size(); ++e) {
    const std::size_t lo = hull[e - 1];
    const std::size_t hi = hull[e];
    const std::size_t count = hi - lo;
    const double radius = std::exp((height[lo] - height[hi]) / static_cast<double>(count));
    smallest = std::min(smallest, radius);
    for (std::size_t k = 0; k < count; ++k) {
      const double angle = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(count) +
                           2.0 * std::numbers::pi * static_cast<double>(e) / static_cast<double>(n) + 0.4;
      z.push_back(std::polar(radius, angle));
    }
  }
  // Vanishing low-order coefficients put that many roots at the origin.
  const std::size_t at_origin = hull.front();
  const double inner = std::isfinite(smallest) ? 1e-3 * smallest : 1e-3;
  for (std::size_t k = 0; k < at_origin; ++k) {
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(at_origin) + 0.4;
    z.push_back(std::polar(inner, angle));
  }
  return z;
}

}  // namespace

RootFinderResult find_roots(const Polynomial& p, const RootFinderOptions& opts) {
  if (p.is_zero()) throw ZeroPolynomial();
  const std::size_t n = p.degree();
  if (n == 0) throw std::invalid_argument("find_roots needs degree >= 1");
  if (p.leading() == Complex{0.0}) throw std::invalid_argument("leading coefficient is zero (root at infinity)");

  const double log_norm = log_weyl_norm(p).log_value;
  auto scaled_residual = [&](Complex z) {
    const double lr = log_abs_value(p, z) - log_norm - 0.5 * static_cast<double>(n) * std::log1p(std::norm(z));
    return std::exp(lr);
  };

  std::vector<Complex> z = initial_approximations(p);

  RootFinderResult result;
  std::vector<double> residuals(n);
  int polish = -1;  // sweeps left once every residual is under tolerance
  for (int sweep = 1; sweep <= opts.max_sweeps; ++sweep) {
    double max_rel_step = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
      const Complex ratio = newton_ratio(p, z[k]);
      if (!std::isfinite(ratio.real()) || !std::isfinite(ratio.imag())) continue;
      Complex repulsion{0.0};
      for (std::size_t j = 0; j < n; ++j) {
        if (j != k) repulsion += 1.0 / (z[k] - z[j]);
      }
      const Complex step = ratio / (1.0 - ratio * repulsion);
      if (!std::isfinite(step.real()) || !std::isfinite(step.imag())) continue;
      z[k] -= step;
      max_rel_step = std::max(max_rel_step, std::abs(step) / std::max(std::abs(z[k]), 1e-300));
    }
    result.sweeps = sweep;

    bool all_small = true;
    for (std::size_t k = 0; k < n; ++k) {
      residuals[k] = scaled_residual(z[k]);
      all_small = all_small && residuals[k] <= opts.residual_tolerance;
    }
    if (all_small) {
      if (polish < 0) polish = 10;
      if (max_rel_step <= 4.0 * std::numeric_limits<double>::epsilon() || polish-- == 0) break;
    } else {
      polish = -1;
    }
  }

  result.roots.reserve(n);
  for (const auto& r : z) result.roots.emplace_back(r);
  result.scaled_residuals = residuals;
  for (double r : residuals) {
    if (!(r <= opts.residual_tolerance)) throw NoConvergence(std::move(result));
  }
  return result;
}

}  // namespace fekete
