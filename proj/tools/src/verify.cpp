#include "fekete_cli/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <random>
#include <utility>

#include "fekete/condition.hpp"
#include "fekete/energy.hpp"
#include "fekete/inequalities.hpp"
#include "fekete/optimize.hpp"
#include "fekete/parallel.hpp"
#include "fekete/quadrature.hpp"
#include "fekete/random.hpp"

namespace fekete::cli {
namespace {

struct Sample {
  std::size_t n = 0;
  double log_slack = 0.0;
};

struct Check {
  std::string name;
  Suite suite;
  double tolerance;
  std::function<Sample(Rng&)> run;
};

Configuration off_pole_configuration(std::size_t n, Rng& rng) {
  auto cfg = random_configuration(n, rng);
  while (cfg.max_height() > 1.0 - 1e-6) cfg = rotate(random_rotation(rng), cfg);
  return cfg;
}

std::size_t draw(Rng& rng, std::size_t lo, std::size_t hi) { return lo + rng() % (hi - lo + 1); }

std::vector<PlanePoint> fuzz_roots(std::size_t n, Rng& rng) {
  switch (rng() % 3) {
    case 0:
      return random_gaussian_roots(n, rng);
    case 1:
      return off_pole_configuration(n, rng).to_plane();
    default:
      return random_clustered_roots(n, rng);
  }
}

const std::vector<Check>& all_checks() {
  static const std::vector<Check> checks = {
      {"miformula", Suite::identities, 1e-9,
       [](Rng& rng) {
         const auto cfg = off_pole_configuration(draw(rng, 1, 200), rng);
         return Sample{cfg.size(), -miformula_residual(cfg)};
       }},
      {"abs_identity", Suite::identities, 1e-8,
       [](Rng& rng) {
         const auto cfg = off_pole_configuration(draw(rng, 2, 100), rng);
         return Sample{cfg.size(), -abs_identity_residual(cfg)};
       }},
      {"energy_condition_identity", Suite::identities, 1e-8,
       [](Rng& rng) {
         const auto cfg = random_configuration(draw(rng, 1, 100), rng);
         return Sample{cfg.size(), -energy_condition_identity_residual(cfg)};
       }},
      {"route_agreement", Suite::identities, 1e-8,
       [](Rng& rng) {
         const auto cfg = off_pole_configuration(draw(rng, 1, 100), rng);
         const auto coeff = mu_norm_max_coeff(cfg);
         const auto sph = mu_norm_max(cfg);
         double worst = 0.0;
         for (std::size_t i = 0; i < cfg.size(); ++i) {
           worst = std::max(worst, std::abs(coeff.per_root[i].mu.log_value - sph.per_root[i].mu.log_value));
         }
         return Sample{cfg.size(), -worst};
       }},
      {"moebius_invariance", Suite::identities, 1e-8,
       [](Rng& rng) {
         auto roots = random_gaussian_roots(draw(rng, 1, 60), rng);
         const double before = log_quotient(roots);
         const auto m = random_unitary_moebius(rng);
         for (auto& z : roots) z = m(z);
         return Sample{roots.size(), -std::abs(log_quotient(roots) - before)};
       }},
      {"repeated_root_quotient", Suite::identities, 1e-10,
       [](Rng& rng) {
         std::normal_distribution<double> g;
         const std::vector<PlanePoint> roots(draw(rng, 1, 200), PlanePoint{g(rng), g(rng)});
         return Sample{roots.size(), -std::abs(log_quotient(roots))};
       }},
      {"thmain2", Suite::inequalities, kLogTolerance,
       [](Rng& rng) {
         const auto roots = fuzz_roots(draw(rng, 1, 200), rng);
         return Sample{roots.size(), check_thmain2(roots).log_slack()};
       }},
      {"quotient_at_least_one", Suite::inequalities, kLogTolerance,
       [](Rng& rng) {
         const auto roots = fuzz_roots(draw(rng, 1, 200), rng);
         return Sample{roots.size(), log_quotient(roots)};
       }},
      {"mu_at_least_one", Suite::inequalities, kLogTolerance,
       [](Rng& rng) {
         const auto cfg = random_configuration(draw(rng, 1, 100), rng);
         const auto r = mu_norm_max(cfg);
         double lowest = std::numeric_limits<double>::infinity();
         for (const auto& rc : r.per_root) lowest = std::min(lowest, rc.mu.log_value);
         return Sample{cfg.size(), lowest};
       }},
      {"bombieri_pair", Suite::inequalities, kLogTolerance,
       [](Rng& rng) {
         const auto p = random_polynomial(draw(rng, 1, 10), rng);
         const auto q = random_polynomial(draw(rng, 1, 10), rng);
         return Sample{p.degree() + q.degree(), check_bombieri_pair(p, q).log_slack};
       }},
      {"corollary_multi", Suite::inequalities, kLogTolerance,
       [](Rng& rng) {
         std::vector<Polynomial> factors(draw(rng, 2, 4));
         std::size_t n = 0;
         for (auto& f : factors) {
           f = random_polynomial(draw(rng, 1, 5), rng);
           n += f.degree();
         }
         return Sample{n, check_corollary_multi(factors).log_slack};
       }},
      {"algebra_norm", Suite::inequalities, kLogTolerance,
       [](Rng& rng) {
         const auto p = random_polynomial(draw(rng, 1, 10), rng);
         const auto q = random_polynomial(draw(rng, 1, 10), rng);
         return Sample{p.degree() + q.degree(), check_algebra_norm(p, q).log_slack};
       }},
      {"jensen", Suite::inequalities, kLogTolerance,
       [](Rng& rng) {
         const auto cfg = random_configuration(draw(rng, 1, 100), rng);
         const double n = static_cast<double>(cfg.size());
         return Sample{cfg.size(), 0.5 * sphere_integral(cfg).log_value + EnergyConstants::kappa * n};
       }},
      {"thmain1", Suite::inequalities, 1e-8,
       [](Rng& rng) {
         const auto cfg = random_configuration(draw(rng, 2, 60), rng);
         return Sample{cfg.size(), thmain1_check(cfg).slack};
       }},
  };
  return checks;
}

bool in_suite(const Check& c, Suite suite) { return suite == Suite::all || c.suite == suite; }

}  // namespace

std::optional<Suite> parse_suite(std::string_view name) {
  if (name == "all") return Suite::all;
  if (name == "identities") return Suite::identities;
  if (name == "inequalities") return Suite::inequalities;
  return std::nullopt;
}

std::vector<std::string> suite_checks(Suite suite) {
  std::vector<std::string> names;
  for (const auto& c : all_checks()) {
    if (in_suite(c, suite)) names.push_back(c.name);
  }
  return names;
}

std::vector<CheckOutcome> run_verify(const VerifyOptions& opts) {
  const auto& checks = all_checks();
  std::vector<std::size_t> selected;
  for (std::size_t i = 0; i < checks.size(); ++i) {
    if (in_suite(checks[i], opts.suite)) selected.push_back(i);
  }
  const std::size_t trials = opts.trials;
  std::vector<CheckOutcome> outcomes(selected.size() * trials);
  parallel_for(outcomes.size(), [&](std::size_t k) {
    const std::size_t index = selected[k / trials];
    const Check& check = checks[index];
    const std::size_t trial = k % trials;
    Rng rng(derive_seed(derive_seed(opts.seed, index), trial));
    const double tol = opts.tolerance.value_or(check.tolerance);
    CheckOutcome& o = outcomes[k];
    o.check = check.name;
    o.trial = trial;
    o.tolerance = tol;
    try {
      const Sample s = check.run(rng);
      o.n = s.n;
      o.log_slack = s.log_slack;
      o.pass = std::isfinite(s.log_slack) ? s.log_slack >= -tol : s.log_slack > 0.0;
    } catch (const std::exception& e) {
      o.log_slack = -std::numeric_limits<double>::infinity();
      o.pass = false;
      o.error = e.what();
    }
  });
  return outcomes;
}

std::vector<CheckSummary> summarize(const std::vector<CheckOutcome>& outcomes) {
  std::vector<CheckSummary> out;
  for (const auto& o : outcomes) {
    if (out.empty() || out.back().check != o.check) {
      out.push_back({o.check, 0, 0, std::numeric_limits<double>::infinity(), o.tolerance, true});
    }
    auto& s = out.back();
    ++s.trials;
    s.worst_log_slack = std::min(s.worst_log_slack, o.log_slack);
    if (!o.pass) {
      ++s.failures;
      s.pass = false;
    }
  }
  return out;
}

}  // namespace fekete::cli
