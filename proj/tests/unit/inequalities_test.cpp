#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "fekete/condition.hpp"
#include "fekete/inequalities.hpp"
#include "fekete/random.hpp"
#include "fixtures.hpp"
#include "frozen_values.hpp"

namespace fekete {
namespace {

using std::numbers::ln2;

std::vector<PlanePoint> tetra_roots() {
  return rotate(Rotation{1, 0, 0, 0, 0.6, -0.8, 0, 0.8, 0.6}, testing::tetrahedron()).to_plane();
}

TEST(LogQuotient, Examples) {
  EXPECT_NEAR(log_quotient(std::vector<PlanePoint>{{1.0, 0.0}, {-1.0, 0.0}}), 0.5 * ln2, 1e-15);
  EXPECT_NEAR(log_quotient(testing::roots_of_unity(3)), ln2, 1e-14);
  EXPECT_NEAR(log_quotient(std::vector<PlanePoint>{{3.0, -7.0}}), 0.0, 1e-15);
  EXPECT_NEAR(log_quotient(tetra_roots()), std::log(frozen::kTetraQuotient), 1e-9);
  EXPECT_NEAR(log_quotient(testing::five_roots()), frozen::kFiveLogQuotient, 1e-13);
}

TEST(LogQuotient, DegreeLimit) {
  EXPECT_THROW(log_quotient(std::vector<PlanePoint>(kMaxDegree + 1)), DegreeTooLarge);
}

TEST(LogQuotientBound, Value) {
  EXPECT_NEAR(log_quotient_bound(2), 0.5 * (2.0 - std::log(3.0)), 1e-15);
}

TEST(CheckThmain2, ClosedFormConstants) {
  const auto r2 = check_thmain2(std::vector<PlanePoint>{{1.0, 0.0}, {-1.0, 0.0}});
  EXPECT_TRUE(r2.holds);
  EXPECT_NEAR(r2.log_bound, 0.4506938, 1e-7);
  EXPECT_NEAR(r2.log_quotient, 0.3465736, 1e-7);
  EXPECT_NEAR(r2.k_value, frozen::kK2, 1e-12);
  EXPECT_NEAR(r2.log_slack(), r2.log_bound - r2.log_quotient, 0.0);
  EXPECT_NEAR(check_thmain2(testing::roots_of_unity(3)).k_value, frozen::kK3, 1e-12);
  EXPECT_NEAR(check_thmain2(tetra_roots()).k_value, frozen::kK4, 1e-9);
}

TEST(MiformulaResidual, Examples) {
  EXPECT_LE(miformula_residual(testing::equatorial_pair()), 1e-10);
  Rng rng(61);
  EXPECT_LE(miformula_residual(random_configuration(20, rng)), 1e-9);
  const Configuration coincident({{0.6, 0.0, 0.8}, {0.6, 0.0, 0.8}, {0.0, 1.0, 0.0}});
  EXPECT_LE(miformula_residual(coincident), 1e-9);
  EXPECT_THROW(miformula_residual(testing::antipodal_pair()), NearNorthPole);
}

TEST(CheckBombieriPair, SharpCase) {
  const auto r = check_bombieri_pair(Polynomial{-1.0, 1.0}, Polynomial{1.0, 1.0});
  EXPECT_TRUE(r.holds);
  EXPECT_NEAR(r.log_slack, 0.0, 1e-12);
}

TEST(CheckBombieriPair, Monomials) {
  for (std::size_t m : {1u, 3u, 10u}) {
    const auto p = Polynomial::monomial(m);
    const auto r = check_bombieri_pair(p, p);
    EXPECT_TRUE(r.holds);
    EXPECT_NEAR(r.log_slack, -0.5 * (2.0 * log_factorial(m) - log_factorial(2 * m)), 1e-12);
  }
}

TEST(CheckBombieriPair, RandomPairsHold) {
  Rng rng(62);
  for (int t = 0; t < 1000; ++t) {
    const auto r = check_bombieri_pair(random_polynomial(5, rng), random_polynomial(5, rng));
    ASSERT_TRUE(r.holds) << r.log_slack;
  }
}

TEST(CheckCorollaryMulti, LinearFactorsGiveFactorialBound) {
  Rng rng(63);
  const auto roots = random_gaussian_roots(8, rng);
  std::vector<Polynomial> factors;
  for (const auto& z : roots) factors.push_back(Polynomial{-z.complex(), 1.0});
  const auto r = check_corollary_multi(factors);
  EXPECT_TRUE(r.holds);
  // The slack is log( sqrt(N!) ||prod|| / prod ||x - z_i|| ).
  EXPECT_NEAR(r.log_slack, 0.5 * log_factorial(8) - log_quotient(roots), 1e-12);
}

TEST(CheckCorollaryMulti, RandomSplitsHold) {
  Rng rng(64);
  for (int t = 0; t < 200; ++t) {
    std::vector<Polynomial> parts = {random_polynomial(4, rng), random_polynomial(5, rng), random_polynomial(3, rng)};
    ASSERT_TRUE(check_corollary_multi(parts).holds);
  }
  std::vector<Polynomial> powers = {Polynomial::monomial(2), Polynomial::monomial(3)};
  EXPECT_TRUE(check_corollary_multi(powers).holds);
}

TEST(CheckAlgebraNorm, Holds) {
  Rng rng(65);
  for (int t = 0; t < 200; ++t) {
    ASSERT_TRUE(check_algebra_norm(random_polynomial(rng() % 20, rng), random_polynomial(rng() % 20, rng)).holds);
  }
}

TEST(CombinedBound, Examples) {
  EXPECT_NEAR(combined_bound(std::vector<std::size_t>{2, 2}), 0.5 * std::log(6.0), 1e-14);
  EXPECT_NEAR(combined_bound(std::vector<std::size_t>{1, 1}), 0.5 * std::log(2.0), 1e-15);
  for (std::size_t m = 3; m < 40; ++m) {
    const std::vector<std::size_t> ones(m, 1);
    EXPECT_NEAR(combined_bound(ones), log_quotient_bound(m), 1e-12) << m;
  }
  const std::size_t n = 200;
  EXPECT_NEAR(combined_bound(std::vector<std::size_t>{n - 1, 1}), 0.5 * std::log(double(n)), 1e-12);
}

TEST(AbsIdentity, Examples) {
  EXPECT_LE(abs_identity_residual(testing::equatorial_pair()), 1e-10);
  Rng rng(66);
  EXPECT_LE(abs_identity_residual(random_configuration(10, rng)), 1e-8);
  EXPECT_LE(abs_identity_residual(rotate(Rotation{1, 0, 0, 0, 0.6, -0.8, 0, 0.8, 0.6}, testing::tetrahedron())), 1e-9);
  EXPECT_THROW(abs_identity_residual(Configuration({{1.0, 0.0, 0.0}, {1.0, 0.0, 0.0}})), CoincidentPoints);
  EXPECT_THROW(abs_identity_residual(testing::antipodal_pair()), NearNorthPole);
}

TEST(Sharp2LowerBound, Examples) {
  EXPECT_NEAR(sharp2_lower_bound(1, 1.0, 0.0), -ln2 + 0.5, 1e-15);
  EXPECT_NEAR(sharp2_lower_bound(100, 0.5, -0.2232823), frozen::kSharp2Bound100, 1e-10);
  for (std::size_t n : {1u, 10u, 100u}) EXPECT_LE(sharp2_lower_bound(n, 1.0, -0.0556053), log_quotient_bound(n));
}

TEST(InequalityProperty, Thmain2OnThreeDistributions) {
  Rng rng(67);
  for (int t = 0; t < 600; ++t) {
    const std::size_t n = 1 + rng() % 200;
    std::vector<PlanePoint> roots;
    switch (t % 3) {
      case 0:
        roots = random_gaussian_roots(n, rng);
        break;
      case 1: {
        const auto cfg = random_configuration(n, rng);
        if (cfg.max_height() > 1.0 - 1e-6) continue;
        roots = cfg.to_plane();
        break;
      }
      default:
        roots = random_clustered_roots(n, rng);
    }
    const auto r = check_thmain2(roots);
    ASSERT_GE(r.log_slack(), -1e-9);
    ASSERT_GE(r.log_quotient, -1e-10);
    ASSERT_GT(r.k_value, 0.0);
    ASSERT_LE(r.k_value, 1.0 + 1e-9);
  }
}

TEST(InequalityProperty, RepeatedRootQuotientIsOne) {
  Rng rng(68);
  std::normal_distribution<double> g;
  for (int t = 0; t < 100; ++t) {
    const std::vector<PlanePoint> roots(1 + rng() % 200, PlanePoint{g(rng), g(rng)});
    ASSERT_LE(std::abs(log_quotient(roots)), 1e-10);
  }
}

TEST(InequalityProperty, MoebiusInvariance) {
  Rng rng(69);
  for (int t = 0; t < 100; ++t) {
    auto roots = random_gaussian_roots(1 + rng() % 60, rng);
    const double before = log_quotient(roots);
    const auto m = random_unitary_moebius(rng);
    for (auto& z : roots) z = m(z);
    ASSERT_NEAR(log_quotient(roots), before, 1e-8);
  }
}

TEST(InequalityProperty, MiformulaAndAbsIdentity) {
  Rng rng(70);
  for (int t = 0; t < 100; ++t) {
    const auto cfg = random_configuration(1 + rng() % 100, rng);
    if (cfg.max_height() > 1.0 - 1e-6) continue;
    ASSERT_LE(miformula_residual(cfg), 1e-9);
    ASSERT_LE(abs_identity_residual(cfg), 1e-8);
  }
}

}  // namespace
}  // namespace fekete
