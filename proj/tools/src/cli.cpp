#include "fekete_cli/cli.hpp"

#include <cmath>
#include <fstream>
#include <iomanip>
#include <limits>
#include <memory>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "fekete/condition.hpp"
#include "fekete/energy.hpp"
#include "fekete/errors.hpp"
#include "fekete/inequalities.hpp"
#include "fekete/io.hpp"
#include "fekete/optimize.hpp"
#include "fekete/parallel.hpp"
#include "fekete_cli/manifest.hpp"
#include "fekete_cli/svg.hpp"
#include "fekete_cli/verify.hpp"

namespace fekete::cli {
namespace {

using nlohmann::json;

// Reads key = value files with CLI11's TOML reader. Keys without a section
// are attached to the selected subcommand, so a plain `seed = 7` sets the
// seed of whichever command runs; command-line flags still take precedence.
class SubcommandConfig : public CLI::ConfigTOML {
 public:
  explicit SubcommandConfig(const CLI::App* app) : app_(app) {}

  std::vector<CLI::ConfigItem> from_config(std::istream& input) const override {
    auto items = CLI::ConfigTOML::from_config(input);
    const auto selected = app_->get_subcommands();
    if (selected.empty()) return items;
    for (auto& item : items) {
      if (item.parents.empty()) item.parents = {selected.front()->get_name()};
    }
    return items;
  }

 private:
  const CLI::App* app_;
};

// JSON has no infinity literal; infinite values are written as "inf".
json number(double v) {
  if (std::isnan(v)) return nullptr;
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  return v;
}

std::string csv_number(double v) {
  std::ostringstream ss;
  ss << std::setprecision(17) << v;
  return ss.str();
}

struct EnergyArgs {
  std::string points;
  std::string format = "json";
};

struct MuArgs {
  std::string poly;
  std::string points;
  std::string route;
};

struct VerifyArgs {
  std::string suite = "all";
  std::size_t trials = 100;
  std::uint64_t seed = 1;
  std::optional<double> tolerance;
  std::string summary;
};

struct OptimizeArgs {
  std::size_t n = 0;
  std::string objective = "e";
  std::size_t restarts = 4;
  std::uint64_t seed = 1;
  std::size_t max_iters = 20000;
  double grad_tol = 1e-10;
  std::string out;
  std::string final_config;
  std::string resume;
};

struct KnArgs {
  std::size_t n_min = 2;
  std::size_t n_max = 0;
  std::size_t restarts = 4;
  std::uint64_t seed = 1;
  std::size_t max_iters = 20000;
  std::string svg;
};

int cmd_energy(const EnergyArgs& a, RunManifest& m, std::ostream& out) {
  m.add_input(a.points);
  const auto cfg = read_point_set_file(a.points).configuration();
  const auto r = energy_report(cfg);
  m.finish();
  if (a.format == "csv") {
    out << "# manifest " << m.to_json().dump() << '\n';
    out << "n,energy,expansion_lower,expansion_upper,gap_to_expansion\n";
    out << r.n << ',' << csv_number(r.value) << ',' << csv_number(r.lower_bound) << ','
        << csv_number(r.upper_bound_conjectured) << ',' << csv_number(r.gap_to_expansion) << '\n';
    return kExitOk;
  }
  json j;
  j["manifest"] = m.to_json();
  j["n"] = r.n;
  j["energy"] = number(r.value);
  j["expansion_lower"] = number(r.lower_bound);
  j["expansion_upper"] = number(r.upper_bound_conjectured);
  j["gap_to_expansion"] = number(r.gap_to_expansion);
  j["gap_is_heuristic"] = true;
  out << j.dump(2) << '\n';
  return kExitOk;
}

int cmd_mu(const MuArgs& a, RunManifest& m, std::ostream& out, std::ostream& err) {
  if (a.poly.empty() == a.points.empty()) {
    err << "error: give exactly one of --poly or --points\n";
    return kExitInputError;
  }
  const bool from_poly = !a.poly.empty();
  const std::string route = a.route.empty() ? (from_poly ? "coeff" : "spherical") : a.route;
  ConditionReport r;
  if (from_poly) {
    m.add_input(a.poly);
    const auto p = read_polynomial_file(a.poly);
    if (route == "coeff") {
      r = mu_norm_max(p);
    } else {
      r = mu_norm_max_spherical(p);
    }
  } else {
    m.add_input(a.points);
    const auto cfg = read_point_set_file(a.points).configuration();
    r = route == "coeff" ? mu_norm_max_coeff(cfg) : mu_norm_max(cfg);
  }
  m.finish();
  json j;
  j["manifest"] = m.to_json();
  j["n"] = r.n();
  j["route"] = std::string(to_string(r.route));
  j["mu_max_log"] = number(r.mu_max.log_value);
  j["mu_max"] = number(std::exp(r.mu_max.log_value));
  j["per_root"] = json::array();
  for (const auto& rc : r.per_root) {
    json z = std::isfinite(rc.root.re) && std::isfinite(rc.root.im) ? json::array({rc.root.re, rc.root.im})
                                                                      : json("inf");
    j["per_root"].push_back({{"z", z}, {"mu_log", number(rc.mu.log_value)}});
  }
  out << j.dump(2) << '\n';
  return kExitOk;
}

void write_summary_csv(std::ostream& out, const std::vector<CheckSummary>& summary) {
  out << "check,trials,failures,worst_log_slack,tolerance,pass\n";
  for (const auto& s : summary) {
    out << s.check << ',' << s.trials << ',' << s.failures << ',' << csv_number(s.worst_log_slack) << ','
        << csv_number(s.tolerance) << ',' << (s.pass ? "true" : "false") << '\n';
  }
}

int cmd_verify(const VerifyArgs& a, RunManifest& m, std::ostream& out, std::ostream& err) {
  VerifyOptions opts;
  opts.suite = *parse_suite(a.suite);
  opts.trials = a.trials;
  opts.seed = a.seed;
  opts.tolerance = a.tolerance;
  m.seed = a.seed;
  const auto outcomes = run_verify(opts);
  const auto summary = summarize(outcomes);
  m.finish();

  out << json{{"manifest", m.to_json()}}.dump() << '\n';
  for (const auto& o : outcomes) {
    json line = {{"check", o.check}, {"n", o.n},          {"log_slack", number(o.log_slack)},
                 {"pass", o.pass},   {"trial", o.trial}, {"tolerance", o.tolerance}};
    if (!o.error.empty()) line["error"] = o.error;
    out << line.dump() << '\n';
  }
  if (a.summary.empty()) {
    write_summary_csv(err, summary);
  } else {
    std::ofstream f(a.summary);
    if (!f) throw std::runtime_error("cannot write " + a.summary);
    write_summary_csv(f, summary);
  }
  for (const auto& s : summary) {
    if (!s.pass) return kExitCheckFailed;
  }
  return kExitOk;
}

std::optional<double> k_value_of(const Configuration& cfg) {
  try {
    return std::exp(log_quotient(cfg.to_plane()) - log_quotient_bound(cfg.size()));
  } catch (const NearNorthPole&) {
    return std::nullopt;
  }
}

json trace_summary(const OptimizerTrace& t) {
  return {{"restart", t.restart},
          {"final_objective", number(t.final_objective)},
          {"final_grad_norm", number(t.final_grad_norm)},
          {"iterations", t.iterations.size()},
          {"converged", t.converged},
          {"stop", std::string(to_string(t.stop))}};
}

int cmd_optimize(const OptimizeArgs& a, RunManifest& m, std::ostream& out) {
  OptimizerConfig opts;
  opts.objective = (a.objective == "q" || a.objective == "quotient") ? Objective::max_quotient : Objective::min_energy;
  opts.seed = a.seed;
  opts.restarts = a.restarts;
  opts.max_iters = a.max_iters;
  opts.grad_tol = a.grad_tol;
  m.seed = a.seed;

  std::vector<OptimizerTrace> traces;
  if (!a.resume.empty()) {
    m.add_input(a.resume);
    const auto start = read_point_set_file(a.resume).configuration();
    if (a.n != 0 && a.n != start.size()) {
      throw std::invalid_argument("--n " + std::to_string(a.n) + " does not match the " +
                                  std::to_string(start.size()) + " points in " + a.resume);
    }
    opts.n = start.size();
    opts.restarts = 1;
    traces.push_back(opts.objective == Objective::min_energy ? minimize_energy(start, opts)
                                                             : maximize_quotient(start, opts));
  } else {
    if (a.n < 2) throw std::invalid_argument("--n must be at least 2");
    opts.n = a.n;
    traces = multi_start(opts);
  }
  const std::size_t best = best_restart(traces);
  const auto& t = traces[best];
  const std::string final_path = !a.final_config.empty() ? a.final_config
                                 : !a.out.empty()        ? a.out + ".final.txt"
                                                         : std::string();
  m.finish();

  json result;
  result["manifest"] = m.to_json();
  result["n"] = opts.n;
  result["objective"] = std::string(to_string(opts.objective));
  result["best_restart"] = t.restart;
  result["final_objective"] = number(t.final_objective);
  result["energy"] = number(log_energy(t.final_config));
  const auto k = k_value_of(t.final_config);
  result["k_value"] = k ? number(*k) : json(nullptr);
  result["converged"] = t.converged;
  result["stop"] = std::string(to_string(t.stop));
  result["iterations"] = t.iterations.size();
  result["resumed_from"] = a.resume.empty() ? json(nullptr) : json(a.resume);
  result["restarts"] = json::array();
  for (const auto& tr : traces) result["restarts"].push_back(trace_summary(tr));
  result["trace"] = a.out.empty() ? json(nullptr) : json(a.out);
  result["final_config"] = final_path.empty() ? json(nullptr) : json(final_path);

  if (!a.out.empty()) {
    std::ofstream f(a.out);
    if (!f) throw std::runtime_error("cannot write " + a.out);
    f << json{{"manifest", result["manifest"]}}.dump() << '\n';
    for (const auto& tr : traces) {
      for (const auto& it : tr.iterations) {
        f << json{{"restart", tr.restart},
                  {"iteration", it.iteration},
                  {"objective", number(it.objective)},
                  {"grad_norm", number(it.grad_norm)},
                  {"step", number(it.step)}}
                 .dump()
          << '\n';
      }
    }
    f << json{{"result", trace_summary(t)}}.dump() << '\n';
  }
  if (!final_path.empty()) {
    std::ofstream f(final_path);
    if (!f) throw std::runtime_error("cannot write " + final_path);
    write_point_set(f, t.final_config);
  }
  out << result.dump(2) << '\n';
  return t.converged ? kExitOk : kExitNoConvergence;
}

std::optional<double> kn_closed_form(std::size_t n) {
  switch (n) {
    case 2:
      return std::sqrt(6.0) / std::exp(1.0);
    case 3:
      return 4.0 / std::exp(1.5);
    case 4:
      return 3.0 * std::sqrt(5.0) / std::exp(2.0);
    default:
      return std::nullopt;
  }
}

int cmd_kn(const KnArgs& a, RunManifest& m, std::ostream& out) {
  if (a.n_min < 2 || a.n_max > 16 || a.n_min > a.n_max) {
    throw std::invalid_argument("need 2 <= --n-min <= --n-max <= 16");
  }
  OptimizerConfig opts;
  opts.objective = Objective::max_quotient;
  opts.seed = a.seed;
  opts.restarts = a.restarts;
  opts.max_iters = a.max_iters;
  m.seed = a.seed;
  std::vector<KnEstimate> rows;
  for (std::size_t n = a.n_min; n <= a.n_max; ++n) rows.push_back(kn_estimate(n, opts));
  m.finish();

  out << "# manifest " << m.to_json().dump() << '\n';
  out << "n,k_best,k_mean,k_spread,restarts,k_closed_form\n";
  for (const auto& r : rows) {
    const auto closed = kn_closed_form(r.n);
    out << r.n << ',' << csv_number(r.best) << ',' << csv_number(r.mean) << ',' << csv_number(r.spread) << ','
        << r.per_restart.size() << ',' << (closed ? csv_number(*closed) : std::string()) << '\n';
  }
  if (!a.svg.empty()) {
    std::ofstream f(a.svg);
    if (!f) throw std::runtime_error("cannot write " + a.svg);
    std::vector<std::pair<double, double>> series;
    for (const auto& r : rows) series.emplace_back(static_cast<double>(r.n), r.best);
    write_series_svg(f, series, "Best quotient constant K_N over restarts", "N", "K_N");
  }
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Logarithmic energy, condition numbers and Weyl-norm quotients of points on the sphere", "fekete"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_config("--config", "", "key = value defaults; command-line flags take precedence");
  app.config_formatter(std::make_shared<SubcommandConfig>(&app));
  app.allow_config_extras(CLI::config_extras_mode::error);
  std::size_t threads = 0;
  app.add_option("--threads", threads, "Worker threads (0: FEKETE_THREADS or hardware concurrency)");
  app.set_version_flag("--version", std::string(tool_version()));

  EnergyArgs energy;
  auto* c_energy = app.add_subcommand("energy", "Logarithmic energy of a point set");
  c_energy->add_option("points", energy.points, "Point-set file")->required();
  c_energy->add_option("--format", energy.format, "Output format")->check(CLI::IsMember({"json", "csv"}));

  MuArgs mu;
  auto* c_mu = app.add_subcommand("mu", "Normalized condition number at every root");
  c_mu->add_option("--poly", mu.poly, "Polynomial coefficient file");
  c_mu->add_option("--points", mu.points, "Point-set file of roots");
  c_mu->add_option("--route", mu.route, "coeff or spherical (default: coeff for --poly, spherical for --points)")
      ->check(CLI::IsMember({"coeff", "spherical"}));

  VerifyArgs verify;
  auto* c_verify = app.add_subcommand("verify", "Seeded fuzz verification of the identities and inequalities");
  c_verify->add_option("--suite", verify.suite, "all, identities or inequalities")
      ->check(CLI::IsMember({"all", "identities", "inequalities"}));
  c_verify->add_option("--trials", verify.trials, "Trials per check")->check(CLI::PositiveNumber);
  c_verify->add_option("--seed", verify.seed, "Root seed");
  c_verify->add_option("--tolerance", verify.tolerance, "Override every check tolerance");
  c_verify->add_option("--summary", verify.summary, "Write the CSV summary here instead of stderr");

  OptimizeArgs optimize;
  auto* c_opt = app.add_subcommand("optimize", "Minimize energy or maximize the norm quotient");
  c_opt->add_option("--n", optimize.n, "Number of points");
  c_opt->add_option("--objective", optimize.objective, "e (energy) or q (quotient)")
      ->check(CLI::IsMember({"e", "q", "energy", "quotient"}));
  c_opt->add_option("--restarts", optimize.restarts, "Independent starts")->check(CLI::PositiveNumber);
  c_opt->add_option("--seed", optimize.seed, "Root seed");
  c_opt->add_option("--max-iters", optimize.max_iters, "Iteration cap per restart")->check(CLI::PositiveNumber);
  c_opt->add_option("--grad-tol", optimize.grad_tol, "Gradient-norm tolerance");
  c_opt->add_option("--out", optimize.out, "Trace file (JSON lines)");
  c_opt->add_option("--final", optimize.final_config, "Final configuration file (default: <out>.final.txt)");
  c_opt->add_option("--resume", optimize.resume, "Start from a saved configuration");

  KnArgs kn;
  auto* c_kn = app.add_subcommand("kn", "Table of quotient-constant estimates K_N");
  c_kn->add_option("--n-max", kn.n_max, "Largest N (at most 16)")->required();
  c_kn->add_option("--n-min", kn.n_min, "Smallest N (at least 2)");
  c_kn->add_option("--restarts", kn.restarts, "Restarts per N")->check(CLI::PositiveNumber);
  c_kn->add_option("--seed", kn.seed, "Root seed");
  c_kn->add_option("--max-iters", kn.max_iters, "Iteration cap per restart")->check(CLI::PositiveNumber);
  c_kn->add_option("--svg", kn.svg, "Write an SVG plot of K_N against N");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInputError;
  }

  set_thread_limit(threads);
  RunManifest manifest;
  manifest.command = app.get_subcommands().front()->get_name();
  manifest.arguments = args;

  try {
    if (const auto* config = app.get_config_ptr(); config && config->count() > 0) {
      manifest.add_input(config->as<std::string>());
    }
    if (c_energy->parsed()) return cmd_energy(energy, manifest, out);
    if (c_mu->parsed()) return cmd_mu(mu, manifest, out, err);
    if (c_verify->parsed()) return cmd_verify(verify, manifest, out, err);
    if (c_opt->parsed()) return cmd_optimize(optimize, manifest, out);
    if (c_kn->parsed()) return cmd_kn(kn, manifest, out);
  } catch (const NoConvergence& e) {
    err << "error: " << e.what() << '\n';
    return kExitNoConvergence;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  }
  return kExitInputError;
}

}  // namespace fekete::cli
