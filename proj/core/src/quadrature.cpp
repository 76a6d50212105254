#include "fekete/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <stdexcept>

#include "fekete/parallel.hpp"

namespace fekete {

void gauss_legendre(std::size_t n, std::vector<double>& nodes, std::vector<double>& weights) {
  nodes.assign(n, 0.0);
  weights.assign(n, 0.0);
  if (n == 0) return;
  const std::size_t half = (n + 1) / 2;
  for (std::size_t i = 0; i < half; ++i) {
    // Tricomi initial guess, then Newton on P_n.
    double x = std::cos(std::numbers::pi * (static_cast<double>(i) + 0.75) / (static_cast<double>(n) + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = x;
      for (std::size_t k = 2; k <= n; ++k) {
        const double kk = static_cast<double>(k);
        const double p2 = ((2.0 * kk - 1.0) * x * p1 - (kk - 1.0) * p0) / kk;
        p0 = p1;
        p1 = p2;
      }
      const double pn = n == 1 ? x : p1;
      const double pn1 = n == 1 ? 1.0 : p0;
      dp = static_cast<double>(n) * (x * pn - pn1) / (x * x - 1.0);
      const double dx = pn / dp;
      x -= dx;
      if (std::abs(dx) <= 1e-16 * std::max(1.0, std::abs(x))) break;
    }
    // Recompute the derivative at the converged node for the weight.
    double p0 = 1.0, p1 = x;
    for (std::size_t k = 2; k <= n; ++k) {
      const double kk = static_cast<double>(k);
      const double p2 = ((2.0 * kk - 1.0) * x * p1 - (kk - 1.0) * p0) / kk;
      p0 = p1;
      p1 = p2;
    }
    const double pn = n == 1 ? x : p1;
    const double pn1 = n == 1 ? 1.0 : p0;
    dp = static_cast<double>(n) * (x * pn - pn1) / (x * x - 1.0);
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    nodes[i] = -x;
    nodes[n - 1 - i] = x;
    weights[i] = w;
    weights[n - 1 - i] = w;
  }
  if (n % 2 == 1) nodes[n / 2] = 0.0;
}

QuadratureRule product_rule(int degree) {
  if (degree < 0) throw std::invalid_argument("quadrature degree must be nonnegative");
  const std::size_t polar = static_cast<std::size_t>(degree + 2) / 2;  // ceil((degree+1)/2)
  const std::size_t azimuthal = static_cast<std::size_t>(degree) + 1;
  std::vector<double> t, w;
  gauss_legendre(polar, t, w);

  QuadratureRule rule;
  rule.exact_degree = degree;
  rule.nodes.reserve(polar * azimuthal);
  rule.weights.reserve(polar * azimuthal);
  for (std::size_t i = 0; i < polar; ++i) {
    const double s = std::sqrt(std::max(0.0, 1.0 - t[i] * t[i]));
    const double wi = 0.5 * w[i] / static_cast<double>(azimuthal);
    for (std::size_t k = 0; k < azimuthal; ++k) {
      const double phi = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(azimuthal);
      rule.nodes.emplace_back(s * std::cos(phi), s * std::sin(phi), t[i]);
      rule.weights.push_back(wi);
    }
  }
  return rule;
}

std::shared_ptr<const QuadratureRule> cached_product_rule(int degree) {
  static std::mutex mutex;
  static std::map<int, std::shared_ptr<const QuadratureRule>> cache;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(degree); it != cache.end()) return it->second;
  }
  auto rule = std::make_shared<const QuadratureRule>(product_rule(degree));
  std::lock_guard lock(mutex);
  // Keep the cache bounded; rules for degree 2N are O(N^2) nodes.
  if (cache.size() > 64) cache.erase(cache.begin());
  return cache.emplace(degree, std::move(rule)).first->second;
}

double integrate(const QuadratureRule& rule, const std::function<double(const SpherePoint&)>& f) {
  std::vector<double> terms(rule.nodes.size());
  for (std::size_t k = 0; k < rule.nodes.size(); ++k) terms[k] = rule.weights[k] * f(rule.nodes[k]);
  return pairwise_sum(terms.data(), terms.size());
}

LogMagnitude sphere_integral(const Configuration& cfg) {
  const auto rule = cached_product_rule(static_cast<int>(2 * cfg.size()));
  return sphere_integral(cfg, *rule);
}

LogMagnitude sphere_integral(const Configuration& cfg, const QuadratureRule& rule) {
  const std::size_t n = cfg.size();
  const std::size_t m = rule.nodes.size();
  // Structure-of-arrays copy of the points for the inner loop.
  std::vector<double> xa(n), xb(n), xc(n);
  for (std::size_t j = 0; j < n; ++j) {
    xa[j] = cfg[j].a;
    xb[j] = cfg[j].b;
    xc[j] = cfg[j].c;
  }
  const std::size_t blocks = block_count(m);
  std::vector<LogSumExpAccumulator> partial(blocks);
  parallel_for(blocks, [&](std::size_t blk) {
    const auto [lo, hi] = block_range(m, blk);
    LogSumExpAccumulator acc;
    for (std::size_t k = lo; k < hi; ++k) {
      const SpherePoint& p = rule.nodes[k];
      // prod_j |p - x_j|^2 = prod_j (2 - 2 p.x_j), rescaled every 16 factors.
      double mant = 1.0;
      long expo = 0;
      std::size_t j = 0;
      while (j < n) {
        const std::size_t stop = std::min(n, j + 16);
        for (; j < stop; ++j) mant *= std::max(0.0, 2.0 - 2.0 * (p.a * xa[j] + p.b * xb[j] + p.c * xc[j]));
        if (mant == 0.0) break;
        int e = 0;
        mant = std::frexp(mant, &e);
        expo += e;
      }
      if (mant == 0.0) continue;
      acc.add(std::log(rule.weights[k]) + std::log(mant) + static_cast<double>(expo) * std::numbers::ln2);
    }
    partial[blk] = acc;
  });
  LogSumExpAccumulator total;
  for (const auto& p : partial) total.merge(p);
  return {total.result()};
}

}  // namespace fekete
