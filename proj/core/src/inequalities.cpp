#include "fekete/inequalities.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "fekete/condition.hpp"
#include "fekete/energy.hpp"
#include "fekete/quadrature.hpp"

namespace fekete {

double log_quotient(std::span<const PlanePoint> roots) {
  if (roots.empty()) throw std::invalid_argument("log_quotient needs at least one root");
  double log_factors = 0.0;
  for (const auto& z : roots) log_factors += log_monomial_norm(z).log_value;
  return log_factors - log_weyl_norm(from_roots(roots)).log_value;
}

double log_quotient_bound(std::size_t n) {
  const double x = static_cast<double>(n);
  return 0.5 * (x - std::log(x + 1.0));
}

double miformula_residual(const Configuration& cfg) {
  const auto roots = cfg.to_plane();
  const double n = static_cast<double>(cfg.size());
  const double via_integral =
      n * std::numbers::ln2 - 0.5 * std::log(n + 1.0) - 0.5 * sphere_integral(cfg).log_value;
  return std::abs(log_quotient(roots) - via_integral);
}

QuotientReport check_thmain2(std::span<const PlanePoint> roots) {
  QuotientReport r;
  r.n = roots.size();
  r.log_quotient = log_quotient(roots);
  r.log_bound = log_quotient_bound(r.n);
  r.k_value = std::exp(r.log_quotient - r.log_bound);
  r.holds = r.log_quotient <= r.log_bound + kLogTolerance;
  return r;
}

namespace {

CheckResult make_check(double slack) { return {slack >= -kLogTolerance, slack}; }

}  // namespace

CheckResult check_bombieri_pair(const Polynomial& p, const Polynomial& q) {
  const std::size_t m = p.degree(), n = q.degree();
  const double log_ratio = 0.5 * (log_factorial(m) + log_factorial(n) - log_factorial(m + n));
  const double lhs = log_weyl_norm(multiply(p, q)).log_value;
  const double rhs = log_ratio + log_weyl_norm(p).log_value + log_weyl_norm(q).log_value;
  return make_check(lhs - rhs);
}

CheckResult check_corollary_multi(std::span<const Polynomial> factors) {
  if (factors.empty()) throw std::invalid_argument("need at least one factor");
  Polynomial product = Polynomial::constant(1.0);
  std::size_t total = 0;
  double log_ratio = 0.0;
  double log_norms = 0.0;
  for (const auto& f : factors) {
    product = multiply(product, f);
    total += f.degree();
    log_ratio += log_factorial(f.degree());
    log_norms += log_weyl_norm(f).log_value;
  }
  log_ratio = 0.5 * (log_ratio - log_factorial(total));
  return make_check(log_weyl_norm(product).log_value - (log_ratio + log_norms));
}

CheckResult check_algebra_norm(const Polynomial& p, const Polynomial& q) {
  return make_check(log_weyl_norm(p).log_value + log_weyl_norm(q).log_value -
                    log_weyl_norm(multiply(p, q)).log_value);
}

double combined_bound(std::span<const std::size_t> degrees) {
  if (degrees.empty()) throw std::invalid_argument("combined_bound needs at least one degree");
  std::size_t total = 0;
  double log_multinomial = 0.0;
  for (auto k : degrees) {
    total += k;
    log_multinomial -= log_factorial(k);
  }
  log_multinomial = 0.5 * (log_multinomial + log_factorial(total));
  return std::min(log_multinomial, log_quotient_bound(total));
}

double abs_identity_residual(const Configuration& cfg) {
  const std::size_t n = cfg.size();
  const double nn = static_cast<double>(n);
  const double energy = log_energy(cfg);
  const auto roots = cfg.to_plane();
  const auto log_integral = sphere_integral(cfg);
  double sum_log_mu = 0.0;
  for (std::size_t i = 0; i < n; ++i) sum_log_mu += mu_norm_spherical(cfg, i, log_integral).log_value;
  const double rhs = sum_log_mu + nn * log_quotient(roots) - std::numbers::ln2 * nn * nn -
                     0.5 * nn * std::log(nn) + std::numbers::ln2 * nn;
  return std::abs(energy - rhs);
}

double sharp2_lower_bound(std::size_t n, double c_big, double c_log) {
  const double x = static_cast<double>(n);
  return c_log - std::log(2.0 * c_big) + 0.5 * (x - std::log(x));
}

}  // namespace fekete
