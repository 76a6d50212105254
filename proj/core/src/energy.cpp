#include "fekete/energy.hpp"

#include <cmath>
#include <vector>

#include "fekete/errors.hpp"
#include "fekete/parallel.hpp"

namespace fekete {
namespace {

constexpr double kFloorSquared = kCoincidenceFloor * kCoincidenceFloor;

template <class Point>
double squared_distance(const Point& x, const Point& y) {
  const double da = x.a - y.a, db = x.b - y.b, dc = x.c - y.c;
  return da * da + db * db + dc * dc;
}

// -sum_{i<j} log |x_i - x_j|^2, reduced block by block in a fixed order.
template <class Point>
double ordered_pair_energy(std::span<const Point> pts) {
  const std::size_t n = pts.size();
  if (n < 2) return 0.0;
  const std::size_t blocks = block_count(n);
  std::vector<double> partial(blocks, 0.0);
  parallel_for(blocks, [&](std::size_t b) {
    const auto [lo, hi] = block_range(n, b);
    double s = 0.0;
    for (std::size_t i = lo; i < hi; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        const double d2 = squared_distance(pts[i], pts[j]);
        if (d2 <= kFloorSquared) throw CoincidentPoints(i, j);
        s += std::log(d2);
      }
    }
    partial[b] = s;
  });
  return -pairwise_sum(partial.data(), partial.size());
}

}  // namespace

double log_energy(const Configuration& cfg) { return ordered_pair_energy(cfg.points()); }

double log_energy_riemann(std::span<const RiemannPoint> points) { return ordered_pair_energy(points); }

double min_energy_expansion(std::size_t n, double c_log) {
  const double x = static_cast<double>(n);
  return EnergyConstants::kappa * x * x - 0.5 * x * std::log(x) + c_log * x;
}

double thmain1_bound(std::size_t n, double c_big) {
  const double x = static_cast<double>(n);
  return EnergyConstants::kappa * x * x - 0.5 * x * std::log(x) + std::log(2.0 * c_big) * x -
         0.5 * x * std::log1p(1.0 / x);
}

std::vector<TangentVector> energy_gradient(const Configuration& cfg) {
  const std::size_t n = cfg.size();
  std::vector<TangentVector> grad(n);
  parallel_for(n, [&](std::size_t i) {
    const SpherePoint& xi = cfg[i];
    double ga = 0.0, gb = 0.0, gc = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      const double da = xi.a - cfg[j].a, db = xi.b - cfg[j].b, dc = xi.c - cfg[j].c;
      const double d2 = da * da + db * db + dc * dc;
      if (d2 <= kFloorSquared) throw CoincidentPoints(std::min(i, j), std::max(i, j));
      ga += da / d2;
      gb += db / d2;
      gc += dc / d2;
    }
    ga *= -2.0;
    gb *= -2.0;
    gc *= -2.0;
    const double radial = ga * xi.a + gb * xi.b + gc * xi.c;
    grad[i] = {ga - radial * xi.a, gb - radial * xi.b, gc - radial * xi.c};
  });
  return grad;
}

double gradient_norm(std::span<const TangentVector> grad) {
  double s = 0.0;
  for (const auto& g : grad) s += g.norm_squared();
  return std::sqrt(s);
}

EnergyReport energy_report(const Configuration& cfg) {
  EnergyReport r;
  r.n = cfg.size();
  r.value = log_energy(cfg);
  r.lower_bound = min_energy_expansion(r.n, EnergyConstants::c_log_lower);
  r.upper_bound_conjectured = min_energy_expansion(r.n, EnergyConstants::c_log_upper);
  r.gap_to_expansion = r.value - r.upper_bound_conjectured;
  return r;
}

}  // namespace fekete
