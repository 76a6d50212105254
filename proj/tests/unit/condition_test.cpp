#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numbers>

#include "fekete/condition.hpp"
#include "fekete/energy.hpp"
#include "fekete/errors.hpp"
#include "fekete/quadrature.hpp"
#include "fekete/random.hpp"
#include "fixtures.hpp"
#include "frozen_values.hpp"

namespace fekete {
namespace {

using std::numbers::ln2;

TEST(Route, Names) {
  EXPECT_EQ(to_string(Route::coefficient), "coefficient");
  EXPECT_EQ(to_string(Route::spherical), "spherical");
}

TEST(MuNormCoeff, Examples) {
  const Polynomial p{-1.0, 0.0, 1.0};
  EXPECT_NEAR(mu_norm_coeff(p, {1.0, 0.0}).log_value, 0.0, 1e-15);
  EXPECT_NEAR(mu_norm_coeff(p, {-1.0, 0.0}).log_value, 0.0, 1e-15);
  const auto double_root = from_roots(std::vector<PlanePoint>{{0.0, 1.0}, {0.0, 1.0}});
  EXPECT_TRUE(mu_norm_coeff(double_root, {0.0, 1.0}).is_infinite());
}

TEST(MuNormCoeff, NotARootThrows) {
  EXPECT_THROW(mu_norm_coeff(Polynomial{-1.0, 0.0, 1.0}, {0.5, 0.0}), NotARoot);
}

TEST(MuNormCoeff, ScaleInvariant) {
  const auto roots = testing::five_roots();
  const auto p = from_roots(roots);
  std::vector<Complex> scaled(p.coeffs().begin(), p.coeffs().end());
  for (auto& a : scaled) a *= Complex(1e-30, 3e-30);
  const Polynomial q(scaled);
  for (const auto& z : roots) EXPECT_NEAR(mu_norm_coeff(q, z).log_value, mu_norm_coeff(p, z).log_value, 1e-12);
}

TEST(MuNormCoeff, DegreeZeroRejected) {
  EXPECT_THROW(mu_norm_coeff(Polynomial::constant(1.0), {0.0, 0.0}), std::invalid_argument);
}

TEST(MuNormSpherical, Examples) {
  EXPECT_NEAR(mu_norm_spherical(testing::antipodal_pair(), 0).log_value, 0.0, 1e-14);
  EXPECT_NEAR(mu_norm_spherical(Configuration({{0.0, 1.0, 0.0}}), 0).log_value, 0.0, 1e-15);
  const Configuration coincident({{1.0, 0.0, 0.0}, {1.0, 0.0, 0.0}});
  EXPECT_TRUE(mu_norm_spherical(coincident, 0).is_infinite());
}

TEST(MuNormMax, AntipodalPairIsOne) {
  const auto r = mu_norm_max(testing::antipodal_pair());
  EXPECT_EQ(r.route, Route::spherical);
  EXPECT_EQ(r.n(), 2u);
  EXPECT_NEAR(r.mu_max.log_value, 0.0, 1e-14);
  // The north pole has no plane image and is reported as infinite.
  EXPECT_TRUE(std::isinf(r.per_root[0].root.re));
}

TEST(MuNormMax, TetrahedronRoutesAgree) {
  const auto cfg = rotate(Rotation{1, 0, 0, 0, 0.6, -0.8, 0, 0.8, 0.6}, testing::tetrahedron());
  const auto s = mu_norm_max(cfg);
  const auto c = mu_norm_max_coeff(cfg);
  EXPECT_EQ(c.route, Route::coefficient);
  for (std::size_t i = 0; i < 4; ++i) {
    EXPECT_NEAR(s.per_root[i].mu.log_value, c.per_root[i].mu.log_value, 1e-8);
    EXPECT_GE(s.per_root[i].mu.log_value, 0.0);
  }
}

TEST(MuNormMax, PolynomialInput) {
  const auto r = mu_norm_max(Polynomial{-1.0, 0.0, 1.0});
  EXPECT_EQ(r.route, Route::coefficient);
  EXPECT_NEAR(r.mu_max.log_value, 0.0, 1e-12);
}

TEST(MuNormMax, PolynomialWithDoubleRootIsInfinite) {
  const auto p = from_roots(std::vector<PlanePoint>{{0.0, 1.0}, {0.0, 1.0}});
  const auto r = mu_norm_max(p);
  EXPECT_TRUE(r.mu_max.is_infinite());
  for (const auto& rc : r.per_root) EXPECT_TRUE(rc.mu.is_infinite());
}

TEST(MuNormMax, PolynomialWithCloseButSimpleRoots) {
  // Roots 1e-5 apart are separable: finite, large mu.
  const auto p = from_roots(std::vector<PlanePoint>{{0.0, 0.0}, {1e-5, 0.0}, {3.0, 1.0}});
  const auto r = mu_norm_max(p);
  EXPECT_FALSE(r.mu_max.is_infinite());
  EXPECT_GT(r.mu_max.log_value, std::log(1e4));
}

TEST(MuNormMax, ClusteredButDistinctRootsStayFinite) {
  // Roots 1e-7 apart fall inside the cluster radius but are not a double root.
  const auto p = from_roots(std::vector<PlanePoint>{{0.5, 0.0}, {0.5 + 1e-7, 0.0}, {-2.0, 1.0}});
  const auto r = mu_norm_max(p);
  EXPECT_FALSE(r.mu_max.is_infinite());
  EXPECT_GT(r.mu_max.log_value, std::log(1e6));
}

TEST(MuNormMax, PolynomialWithTripleRootIsInfinite) {
  const auto p = from_roots(std::vector<PlanePoint>{{-1.0, 0.0}, {-1.0, 0.0}, {-1.0, 0.0}, {2.0, 0.0}});
  const auto r = mu_norm_max(p);
  int infinite = 0;
  for (const auto& rc : r.per_root) infinite += rc.mu.is_infinite() ? 1 : 0;
  EXPECT_EQ(infinite, 3);
}

TEST(MuNormMaxSpherical, MatchesCoefficientRouteForSimpleRoots) {
  const auto p = from_roots(std::vector<PlanePoint>{{0.5, -0.25}, {-1.0, 2.0}, {3.0, 0.0}, {0.0, -0.75}});
  const auto coeff = mu_norm_max(p);
  const auto sph = mu_norm_max_spherical(p);
  EXPECT_EQ(sph.route, Route::spherical);
  ASSERT_EQ(sph.n(), 4u);
  for (std::size_t i = 0; i < 4; ++i) EXPECT_NEAR(sph.per_root[i].mu.log_value, coeff.per_root[i].mu.log_value, 1e-9);
}

TEST(MuNormMaxSpherical, DoubleRootIsInfinite) {
  const auto p = from_roots(std::vector<PlanePoint>{{0.0, 1.0}, {0.0, 1.0}});
  EXPECT_TRUE(mu_norm_max_spherical(p).mu_max.is_infinite());
}

TEST(EnergyConditionIdentity, Examples) {
  EXPECT_LE(energy_condition_identity_residual(testing::antipodal_pair()), 1e-9);
  EXPECT_LE(energy_condition_identity_residual(Configuration({{0.0, 0.0, -1.0}})), 1e-12);
  Rng rng(51);
  EXPECT_LE(energy_condition_identity_residual(random_configuration(10, rng)), 1e-8);
  EXPECT_THROW(energy_condition_identity_residual(Configuration({{1.0, 0.0, 0.0}, {1.0, 0.0, 0.0}})),
               CoincidentPoints);
}

TEST(SumLogMuLowerBound, Examples) {
  EXPECT_NEAR(sum_log_mu_lower_bound(1, -0.1), -0.1 - ln2, 1e-15);
  EXPECT_NEAR(sum_log_mu_lower_bound(100, EnergyConstants::c_log_lower), frozen::kSumLogMu100Lower, 1e-10);
  EXPECT_NEAR(sum_log_mu_lower_bound(100, EnergyConstants::c_log_upper), frozen::kSumLogMu100Upper, 1e-10);
}

TEST(FindRoots, Quadratic) {
  const auto r = find_roots(Polynomial{-1.0, 0.0, 1.0});
  ASSERT_EQ(r.roots.size(), 2u);
  std::vector<double> re = {r.roots[0].re, r.roots[1].re};
  std::sort(re.begin(), re.end());
  EXPECT_NEAR(re[0], -1.0, 1e-14);
  EXPECT_NEAR(re[1], 1.0, 1e-14);
  for (double s : r.scaled_residuals) EXPECT_LE(s, 1e-10);
}

TEST(FindRoots, CubeRootsOfUnity) {
  const auto r = find_roots(Polynomial{-1.0, 0.0, 0.0, 1.0});
  for (const auto& w : testing::roots_of_unity(3)) {
    double best = 1.0;
    for (const auto& z : r.roots) best = std::min(best, std::abs(z.complex() - w.complex()));
    EXPECT_LE(best, 1e-12);
  }
}

TEST(FindRoots, DoubleRootCluster) {
  const auto r = find_roots(from_roots(std::vector<PlanePoint>{{0.0, 1.0}, {0.0, 1.0}}));
  for (const auto& z : r.roots) EXPECT_LE(std::abs(z.complex() - Complex(0.0, 1.0)), 1e-5);
}

TEST(FindRoots, Errors) {
  EXPECT_THROW(find_roots(Polynomial()), ZeroPolynomial);
  EXPECT_THROW(find_roots(Polynomial::constant(2.0)), std::invalid_argument);
  EXPECT_THROW(find_roots(Polynomial{1.0, 1.0, 0.0}), std::invalid_argument);
}

TEST(FindRoots, NoConvergenceCarriesBestIterate) {
  RootFinderOptions opts;
  opts.max_sweeps = 1;
  Rng rng(52);
  const auto p = from_roots(random_gaussian_roots(60, rng));
  try {
    find_roots(p, opts);
    FAIL();
  } catch (const NoConvergence& e) {
    EXPECT_EQ(e.best().roots.size(), 60u);
    EXPECT_EQ(e.best().scaled_residuals.size(), 60u);
  }
}

TEST(FindRoots, WideModulusRangeConvergesQuickly) {
  Rng rng(57);
  const auto p = from_roots(random_gaussian_roots(256, rng));
  const auto r = find_roots(p);
  EXPECT_LE(r.sweeps, 100);
  for (double s : r.scaled_residuals) EXPECT_LE(s, 1e-10);
}

TEST(FindRoots, RootsAtOrigin) {
  const auto r = find_roots(Polynomial{0.0, 0.0, -4.0, 0.0, 1.0});
  std::vector<double> mod;
  for (const auto& z : r.roots) mod.push_back(std::abs(z.complex()));
  std::sort(mod.begin(), mod.end());
  EXPECT_LE(mod[1], 1e-6);
  EXPECT_NEAR(mod[2], 2.0, 1e-12);
  EXPECT_NEAR(mod[3], 2.0, 1e-12);
}

// Roots on jittered rays at moduli in [0.5, 2]: separated by construction.
std::vector<PlanePoint> plane_roots_separated(Rng& rng) {
  const std::size_t n = 2 + rng() % 39;
  std::uniform_real_distribution<double> jitter(-0.2, 0.2), modulus(0.5, 2.0);
  std::vector<PlanePoint> out;
  for (std::size_t k = 0; k < n; ++k) {
    const double theta = 2.0 * std::numbers::pi * (static_cast<double>(k) + jitter(rng)) / static_cast<double>(n);
    out.emplace_back(std::polar(modulus(rng), theta));
  }
  return out;
}

TEST(FindRoots, ReproducesCoefficients) {
  Rng rng(53);
  for (int t = 0; t < 20; ++t) {
    auto roots = plane_roots_separated(rng);
    const auto p = from_roots(roots);
    const auto r = find_roots(p);
    const auto q = from_roots(r.roots);
    for (std::size_t k = 0; k <= p.degree(); ++k) EXPECT_LE(std::abs(p[k] - q[k]), 1e-8 * (1.0 + std::abs(p[k])));
  }
}

// Random non-monic and high-degree inputs.
TEST(FindRoots, RandomPolynomials) {
  Rng rng(54);
  for (int t = 0; t < 20; ++t) {
    const auto p = random_polynomial(1 + rng() % 120, rng);
    const auto r = find_roots(p);
    ASSERT_EQ(r.roots.size(), p.degree());
    for (double s : r.scaled_residuals) ASSERT_LE(s, 1e-10);
  }
}

// mu >= 1 on every evaluation, both routes, and route agreement per root.
TEST(ConditionProperty, RoutesAgreeAndMuAtLeastOne) {
  Rng rng(55);
  for (int t = 0; t < 100; ++t) {
    const auto cfg = random_configuration(1 + rng() % 100, rng);
    if (cfg.max_height() > 1.0 - 1e-6) continue;
    const auto s = mu_norm_max(cfg);
    const auto c = mu_norm_max_coeff(cfg);
    for (std::size_t i = 0; i < cfg.size(); ++i) {
      ASSERT_GE(s.per_root[i].mu.log_value, -1e-12);
      ASSERT_GE(c.per_root[i].mu.log_value, -1e-12);
      ASSERT_NEAR(s.per_root[i].mu.log_value, c.per_root[i].mu.log_value, 1e-8) << t << " " << i;
    }
  }
}

TEST(ConditionProperty, IdentityAndEnergyBound) {
  Rng rng(56);
  for (int t = 0; t < 100; ++t) {
    const std::size_t n = 1 + rng() % 100;
    const auto cfg = random_configuration(n, rng);
    ASSERT_LE(energy_condition_identity_residual(cfg), 1e-8);
    const double nn = static_cast<double>(n);
    const double log_mu = mu_norm_max(cfg).mu_max.log_value;
    const double bound = EnergyConstants::kappa * nn * nn - nn * (0.5 * std::log(nn * (nn + 1.0)) - ln2) + nn * log_mu;
    ASSERT_LE(log_energy(cfg), bound + 1e-8);
  }
}

}  // namespace
}  // namespace fekete
