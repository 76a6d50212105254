#include "fekete/condition.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "fekete/energy.hpp"
#include "fekete/quadrature.hpp"

namespace fekete {

std::string_view to_string(Route r) { return r == Route::coefficient ? "coefficient" : "spherical"; }

namespace {

// log( sqrt(N (N + 1)) / 2 )
double log_half_sqrt(std::size_t n) {
  const double x = static_cast<double>(n);
  return 0.5 * (std::log(x) + std::log(x + 1.0)) - std::numbers::ln2;
}

void finish(ConditionReport& r) {
  r.mu_max = LogMagnitude::zero();
  for (const auto& rc : r.per_root) r.mu_max = std::max(r.mu_max, rc.mu);
}

// Roots closer than this (chordal distance) cannot be told apart from a
// multiple root by a double-precision root finder.
constexpr double kClusterDistance = 1e-6;
constexpr int kClusterNewtonSteps = 50;
constexpr double kDoubleRootFloor = 1e-14;

}  // namespace

namespace {

template <class P>
LogMagnitude mu_norm_coeff_impl(const P& p, double log_norm, PlanePoint z, double double_root_floor) {
  const std::size_t n = p.degree();
  if (n == 0) throw std::invalid_argument("condition number needs degree >= 1");
  const double nn = static_cast<double>(n);
  const Complex zc = z.complex();
  const double log_r2 = std::log1p(z.norm_squared());

  const double log_res = log_abs_value(p, zc);
  if (log_res > std::log(1e-8) + log_norm + nn * std::log1p(std::abs(zc))) throw NotARoot(log_res);

  const double log_deriv = log_abs_derivative(p, zc);
  if (log_deriv <= std::log(double_root_floor) + log_norm + 0.5 * (nn - 1.0) * log_r2) return LogMagnitude::infinity();
  return {0.5 * std::log(nn) + log_norm + (0.5 * nn - 1.0) * log_r2 - log_deriv};
}

}  // namespace

LogMagnitude mu_norm_coeff(const Polynomial& p, PlanePoint z) {
  return mu_norm_coeff_impl(p, log_weyl_norm(p).log_value, z, kDoubleRootFloor);
}

LogMagnitude mu_norm_coeff(const ExtendedPolynomial& p, PlanePoint z) {
  return mu_norm_coeff_impl(p, log_weyl_norm(p.rounded()).log_value, z, 1e-28);
}

LogMagnitude mu_norm_spherical(const Configuration& cfg, std::size_t i) {
  return mu_norm_spherical(cfg, i, sphere_integral(cfg));
}

LogMagnitude mu_norm_spherical(const Configuration& cfg, std::size_t i, LogMagnitude log_integral) {
  const std::size_t n = cfg.size();
  double log_dist = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    if (j == i) continue;
    const double d = chordal_distance(cfg[i], cfg[j]);
    if (d <= kCoincidenceFloor) return LogMagnitude::infinity();
    log_dist += std::log(d);
  }
  return {log_half_sqrt(n) + 0.5 * log_integral.log_value - log_dist};
}

ConditionReport mu_norm_max(const Configuration& cfg) {
  ConditionReport r;
  r.route = Route::spherical;
  const auto log_integral = sphere_integral(cfg);
  r.per_root.resize(cfg.size());
  for (std::size_t i = 0; i < cfg.size(); ++i) {
    // The root is reported only when it has a finite stereographic image.
    PlanePoint z{std::numeric_limits<double>::infinity(), 0.0};
    if (cfg[i].c < 1.0 - kPoleCutoff) z = sphere_to_plane(cfg[i]);
    r.per_root[i] = {z, mu_norm_spherical(cfg, i, log_integral)};
  }
  finish(r);
  return r;
}

ConditionReport mu_norm_max_coeff(const Configuration& cfg) {
  const auto roots = cfg.to_plane();
  const auto p = from_roots_extended(roots);
  ConditionReport r;
  r.route = Route::coefficient;
  r.per_root.reserve(roots.size());
  for (const auto& z : roots) r.per_root.push_back({z, mu_norm_coeff(p, z)});
  finish(r);
  return r;
}

ConditionReport mu_norm_max(const Polynomial& p) {
  const auto found = find_roots(p);
  const auto& roots = found.roots;
  const std::size_t n = roots.size();

  // Single-linkage clusters of roots the finder could not separate.
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto root_of = [&](std::size_t i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  };
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (plane_chordal_distance(roots[i], roots[j]) < kClusterDistance) parent[root_of(i)] = root_of(j);
    }
  }

  ConditionReport r;
  r.route = Route::coefficient;
  r.per_root.resize(n);
  std::vector<char> done(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    if (done[i]) continue;
    std::vector<std::size_t> members;
    for (std::size_t j = i; j < n; ++j) {
      if (root_of(j) == root_of(i)) members.push_back(j);
    }
    bool multiple = false;
    if (members.size() > 1) {
      Complex c{0.0};
      for (auto j : members) c += roots[j].complex();
      c /= static_cast<double>(members.size());
      // A root of multiplicity m is a simple root of the (m-1)-th derivative.
      Polynomial q = p;
      for (std::size_t k = 1; k < members.size(); ++k) q = derivative(q);
      for (int it = 0; it < kClusterNewtonSteps; ++it) {
        const Complex step = newton_ratio(q, c);
        if (!std::isfinite(step.real()) || !std::isfinite(step.imag())) break;
        c -= step;
        if (std::abs(step) <= 1e-17 * (1.0 + std::abs(c))) break;
      }
      const double log_norm = log_weyl_norm(p).log_value;
      const double half_log_r2 = 0.5 * std::log1p(std::norm(c));
      const double value_floor =
          2.0 * std::log(kDoubleRootFloor) + log_norm + static_cast<double>(p.degree()) * half_log_r2;
      try {
        multiple = log_abs_value(p, c) <= value_floor && mu_norm_coeff(p, PlanePoint(c)).is_infinite();
      } catch (const NotARoot&) {
        multiple = false;
      }
    }
    for (auto j : members) {
      r.per_root[j] = {roots[j], multiple ? LogMagnitude::infinity() : mu_norm_coeff(p, roots[j])};
      done[j] = 1;
    }
  }
  finish(r);
  return r;
}

ConditionReport mu_norm_max_spherical(const Polynomial& p) {
  const auto coeff = mu_norm_max(p);
  std::vector<PlanePoint> roots;
  roots.reserve(coeff.n());
  for (const auto& rc : coeff.per_root) roots.push_back(rc.root);
  const auto cfg = Configuration::from_roots(roots);
  const auto log_integral = sphere_integral(cfg);
  ConditionReport r;
  r.route = Route::spherical;
  r.per_root.resize(coeff.n());
  for (std::size_t i = 0; i < coeff.n(); ++i) {
    r.per_root[i] = {roots[i], coeff.per_root[i].mu.is_infinite() ? LogMagnitude::infinity()
                                                                  : mu_norm_spherical(cfg, i, log_integral)};
  }
  finish(r);
  return r;
}

double energy_condition_identity_residual(const Configuration& cfg) {
  const std::size_t n = cfg.size();
  const double energy = log_energy(cfg);
  const auto log_integral = sphere_integral(cfg);
  double sum_log_mu = 0.0;
  for (std::size_t i = 0; i < n; ++i) sum_log_mu += mu_norm_spherical(cfg, i, log_integral).log_value;
  const double nn = static_cast<double>(n);
  const double lhs = energy - sum_log_mu;
  const double rhs = -nn * log_half_sqrt(n) - 0.5 * nn * log_integral.log_value;
  return std::abs(lhs - rhs);
}

double sum_log_mu_lower_bound(std::size_t n, double c_log) {
  const double x = static_cast<double>(n);
  return 0.5 * x * std::log(x) + (c_log - std::numbers::ln2) * x;
}

}  // namespace fekete
