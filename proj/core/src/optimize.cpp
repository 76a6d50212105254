#include "fekete/optimize.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <optional>
#include <stdexcept>

#include "fekete/condition.hpp"
#include "fekete/energy.hpp"
#include "fekete/errors.hpp"
#include "fekete/inequalities.hpp"
#include "fekete/parallel.hpp"
#include "fekete/quadrature.hpp"
#include "fekete/random.hpp"

namespace fekete {

std::string_view to_string(Objective o) { return o == Objective::min_energy ? "min_energy" : "max_quotient"; }

std::string_view to_string(StopReason r) {
  switch (r) {
    case StopReason::gradient_tolerance:
      return "gradient_tolerance";
    case StopReason::precision_floor:
      return "precision_floor";
    case StopReason::line_search_failed:
      return "line_search_failed";
    case StopReason::max_iterations:
      break;
  }
  return "max_iterations";
}

Configuration spiral_points(std::size_t n) {
  if (n == 0) throw std::invalid_argument("spiral_points needs n >= 1");
  if (n == 1) return Configuration({SpherePoint(0.0, 0.0, -1.0)});
  std::vector<SpherePoint> pts;
  pts.reserve(n);
  const double nn = static_cast<double>(n);
  double phi = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    const double h = -1.0 + 2.0 * static_cast<double>(k) / (nn - 1.0);
    if (k == 0 || k == n - 1) {
      phi = 0.0;
    } else {
      phi = std::fmod(phi + 3.6 / std::sqrt(nn * (1.0 - h * h)), 2.0 * std::numbers::pi);
    }
    const double s = std::sqrt(std::max(0.0, 1.0 - h * h));
    pts.push_back(SpherePoint::normalized(s * std::cos(phi), s * std::sin(phi), h));
  }
  return Configuration(std::move(pts));
}

namespace {

using Direction = std::vector<TangentVector>;

Configuration retract(const Configuration& cfg, const Direction& dir, double t) {
  std::vector<SpherePoint> pts;
  pts.reserve(cfg.size());
  for (std::size_t i = 0; i < cfg.size(); ++i) {
    const auto& x = cfg[i];
    pts.push_back(SpherePoint::normalized(x.a + t * dir[i].a, x.b + t * dir[i].b, x.c + t * dir[i].c));
  }
  return Configuration(std::move(pts));
}

double initial_step(const OptimizerConfig& opts, std::size_t n) {
  return opts.initial_step > 0.0 ? opts.initial_step : 1.0 / static_cast<double>(n);
}

// Orthonormal tangent basis at x.
void tangent_basis(const SpherePoint& x, TangentVector& e1, TangentVector& e2) {
  // Cross with the coordinate axis least aligned with x.
  const double ax = std::abs(x.a), ay = std::abs(x.b), az = std::abs(x.c);
  double u[3];
  if (ax <= ay && ax <= az) {
    u[0] = 0.0, u[1] = x.c, u[2] = -x.b;  // x cross e_x
  } else if (ay <= az) {
    u[0] = -x.c, u[1] = 0.0, u[2] = x.a;  // x cross e_y
  } else {
    u[0] = x.b, u[1] = -x.a, u[2] = 0.0;  // x cross e_z
  }
  const double r = std::sqrt(u[0] * u[0] + u[1] * u[1] + u[2] * u[2]);
  e1 = {u[0] / r, u[1] / r, u[2] / r};
  e2 = {x.b * e1.c - x.c * e1.b, x.c * e1.a - x.a * e1.c, x.a * e1.b - x.b * e1.a};
}

double quotient_objective(const Configuration& cfg) { return log_quotient(cfg.to_plane()); }

// Points above this height are considered too close to the pole for the
// quotient objective; the configuration is rotated away first.
constexpr double kQuotientMaxHeight = 0.95;

Configuration rotate_off_pole(const Configuration& cfg, Rng& rng) {
  if (cfg.max_height() <= kQuotientMaxHeight) return cfg;
  for (int attempt = 0; attempt < 1000; ++attempt) {
    auto rotated = rotate(random_rotation(rng), cfg);
    if (rotated.max_height() <= kQuotientMaxHeight) return rotated;
  }
  throw NearNorthPole(cfg.max_height());
}

Direction quotient_gradient(const Configuration& cfg, double h) {
  const std::size_t n = cfg.size();
  Direction grad(n);
  std::vector<SpherePoint> pts(cfg.begin(), cfg.end());
  for (std::size_t i = 0; i < n; ++i) {
    const SpherePoint x = cfg[i];
    TangentVector e[2];
    tangent_basis(x, e[0], e[1]);
    TangentVector g;
    for (const auto& ek : e) {
      pts[i] = SpherePoint::normalized(x.a + h * ek.a, x.b + h * ek.b, x.c + h * ek.c);
      const double fp = quotient_objective(Configuration(pts));
      pts[i] = SpherePoint::normalized(x.a - h * ek.a, x.b - h * ek.b, x.c - h * ek.c);
      const double fm = quotient_objective(Configuration(pts));
      const double d = (fp - fm) / (2.0 * h);
      g.a += d * ek.a;
      g.b += d * ek.b;
      g.c += d * ek.c;
    }
    pts[i] = x;
    grad[i] = g;
  }
  return grad;
}

struct Descent {
  std::function<double(const Configuration&)> objective;
  std::function<Direction(const Configuration&)> gradient;
  bool minimize = true;
  std::function<void(Configuration&)> after_accept;
};

// Shared line-search loop. The objective is recorded with the sign of the
// problem; internally everything is minimized.
OptimizerTrace descend(const Configuration& start, const OptimizerConfig& opts, const Descent& d) {
  const std::size_t n = start.size();
  const double sign = d.minimize ? 1.0 : -1.0;
  const double t0 = initial_step(opts, n);
  OptimizerTrace trace;
  trace.initial = start;

  Configuration cfg = start;
  double f = sign * d.objective(cfg);
  Direction grad = d.gradient(cfg);
  double gn = gradient_norm(grad);
  trace.iterations.push_back({0, sign * f, gn, 0.0});

  auto stop_reason = [&]() -> std::optional<StopReason> {
    if (gn <= opts.grad_tol) return StopReason::gradient_tolerance;
    const double noise = opts.precision_floor * std::numeric_limits<double>::epsilon() * (1.0 + std::abs(f));
    if (t0 * gn * gn < noise) return StopReason::precision_floor;
    return std::nullopt;
  };

  trace.stop = StopReason::max_iterations;
  for (std::size_t iter = 1;; ++iter) {
    if (const auto r = stop_reason()) {
      trace.stop = *r;
      break;
    }
    if (iter > opts.max_iters) break;
    double t = t0;
    bool accepted = false;
    Configuration trial;
    double ft = 0.0;
    while (t >= opts.min_step) {
      trial = retract(cfg, grad, -sign * t);
      try {
        ft = sign * d.objective(trial);
        if (ft <= f - opts.armijo * t * gn * gn) {
          accepted = true;
          break;
        }
      } catch (const CoincidentPoints&) {
        // Collisions are an infinite energy barrier: shrink and retry.
      } catch (const NearNorthPole&) {
      }
      t *= opts.shrink;
    }
    if (!accepted) {
      trace.stop = StopReason::line_search_failed;
      break;
    }
    cfg = std::move(trial);
    if (d.after_accept) d.after_accept(cfg);
    f = ft;
    grad = d.gradient(cfg);
    gn = gradient_norm(grad);
    trace.iterations.push_back({iter, sign * f, gn, t});
  }

  trace.final_config = std::move(cfg);
  trace.final_objective = sign * f;
  trace.final_grad_norm = gn;
  trace.converged = trace.stop == StopReason::gradient_tolerance || trace.stop == StopReason::precision_floor;
  return trace;
}

}  // namespace

OptimizerTrace minimize_energy(const Configuration& start, const OptimizerConfig& opts) {
  Descent d;
  d.objective = [](const Configuration& c) { return log_energy(c); };
  d.gradient = [](const Configuration& c) { return energy_gradient(c); };
  d.minimize = true;
  OptimizerTrace trace = descend(start, opts, d);
  trace.objective = Objective::min_energy;
  return trace;
}

OptimizerTrace maximize_quotient(const Configuration& start, const OptimizerConfig& opts) {
  Rng rng(derive_seed(opts.seed, 0x51ed));
  Descent d;
  d.objective = quotient_objective;
  d.gradient = [&](const Configuration& c) { return quotient_gradient(c, opts.fd_step); };
  d.minimize = false;
  // The quotient is rotation invariant, so f keeps its accepted value across
  // the rotation and the recorded objective stays exactly monotone.
  d.after_accept = [&](Configuration& c) { c = rotate_off_pole(c, rng); };
  OptimizerTrace trace = descend(rotate_off_pole(start, rng), opts, d);
  trace.objective = Objective::max_quotient;
  trace.initial = start;
  return trace;
}

std::vector<OptimizerTrace> multi_start(const OptimizerConfig& opts) {
  if (opts.n < 2) throw std::invalid_argument("optimizer needs n >= 2");
  if (opts.restarts < 1) throw std::invalid_argument("optimizer needs at least one restart");
  std::vector<OptimizerTrace> traces(opts.restarts);
  parallel_for(opts.restarts, [&](std::size_t r) {
    Configuration start;
    if (r == 0) {
      start = spiral_points(opts.n);
    } else {
      Rng rng(derive_seed(opts.seed, r));
      start = random_configuration(opts.n, rng);
    }
    OptimizerConfig local = opts;
    local.seed = derive_seed(opts.seed, 1000 + r);
    traces[r] = opts.objective == Objective::min_energy ? minimize_energy(start, local)
                                                        : maximize_quotient(start, local);
    traces[r].restart = r;
  });
  return traces;
}

std::size_t best_restart(const std::vector<OptimizerTrace>& traces) {
  if (traces.empty()) throw std::invalid_argument("no traces");
  std::size_t best = 0;
  for (std::size_t r = 1; r < traces.size(); ++r) {
    const bool better = traces[r].objective == Objective::min_energy
                            ? traces[r].final_objective < traces[best].final_objective
                            : traces[r].final_objective > traces[best].final_objective;
    if (better) best = r;
  }
  return best;
}

KnEstimate kn_estimate(std::size_t n, const OptimizerConfig& opts) {
  if (n < 2 || n > 16) throw std::invalid_argument("kn_estimate supports 2 <= n <= 16");
  OptimizerConfig local = opts;
  local.n = n;
  local.objective = Objective::max_quotient;
  const auto traces = multi_start(local);
  KnEstimate est;
  est.n = n;
  const double log_bound = log_quotient_bound(n);
  double lo = std::numeric_limits<double>::infinity(), hi = -lo, sum = 0.0;
  for (const auto& t : traces) {
    const double k = std::exp(t.final_objective - log_bound);
    est.per_restart.push_back(k);
    lo = std::min(lo, k);
    hi = std::max(hi, k);
    sum += k;
  }
  est.best = hi;
  est.mean = sum / static_cast<double>(traces.size());
  est.spread = hi - lo;
  return est;
}

Thmain1Report thmain1_check(const Configuration& cfg, std::optional<double> log_mu_max) {
  Thmain1Report r;
  r.n = cfg.size();
  const double n = static_cast<double>(r.n);
  r.energy = log_energy(cfg);
  r.log_mu_max = log_mu_max ? *log_mu_max : mu_norm_max(cfg).mu_max.log_value;
  const double log_half_sqrt = 0.5 * (std::log(n) + std::log(n + 1.0)) - std::numbers::ln2;
  r.bound = EnergyConstants::kappa * n * n - n * log_half_sqrt + n * r.log_mu_max;
  r.slack = r.bound - r.energy;
  r.holds = r.slack >= -1e-8;
  r.identity_residual = energy_condition_identity_residual(cfg);
  r.jensen_slack = 0.5 * sphere_integral(cfg).log_value + EnergyConstants::kappa * n;
  r.packaged_bound = thmain1_bound(r.n, std::exp(r.log_mu_max) / std::sqrt(n));
  return r;
}

}  // namespace fekete
