#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>

#include "fekete/errors.hpp"
#include "fekete/poly.hpp"
#include "fekete/random.hpp"
#include "fixtures.hpp"

namespace fekete {
namespace {

void expect_coeffs(const Polynomial& p, std::initializer_list<Complex> want, double tol = 1e-14) {
  ASSERT_EQ(p.degree() + 1, want.size());
  std::size_t k = 0;
  for (const auto& w : want) {
    EXPECT_NEAR(std::abs(p[k] - w), 0.0, tol) << "coefficient " << k;
    ++k;
  }
}

TEST(Polynomial, Construction) {
  EXPECT_TRUE(Polynomial().is_zero());
  EXPECT_EQ(Polynomial(std::vector<Complex>{}).degree(), 0u);
  const Polynomial p{-1.0, 0.0, 1.0};
  EXPECT_EQ(p.degree(), 2u);
  EXPECT_TRUE(p.is_monic());
  EXPECT_EQ(Polynomial::monomial(3, 2.0).leading(), Complex(2.0));
}

TEST(Polynomial, NormalizeTrimsOnlyOnRequest) {
  const Polynomial p{1.0, 2.0, 1e-20};
  EXPECT_EQ(p.degree(), 2u);
  EXPECT_EQ(p.normalize().degree(), 1u);
  EXPECT_EQ((Polynomial{1e-30, 0.0}.normalize(1e-14).degree()), 0u);
  EXPECT_TRUE((Polynomial{0.0, 0.0}.normalize().is_zero()));
}

TEST(FromRoots, Examples) {
  expect_coeffs(from_roots(std::vector<PlanePoint>{{1.0, 0.0}, {-1.0, 0.0}}), {-1.0, 0.0, 1.0});
  expect_coeffs(from_roots(testing::roots_of_unity(3)), {-1.0, 0.0, 0.0, 1.0});
}

TEST(FromRoots, RepeatedRootGivesBinomialCoefficients) {
  const Complex a{0.5, -0.25};
  const std::size_t n = 7;
  const auto p = from_roots(std::vector<PlanePoint>(n, PlanePoint(a)));
  for (std::size_t k = 0; k <= n; ++k) {
    const double binom = std::exp(log_binomial(n, k));
    const Complex want = binom * std::pow(-a, static_cast<double>(n - k));
    EXPECT_NEAR(std::abs(p[k] - want), 0.0, 1e-13) << k;
  }
}

TEST(FromRoots, EmptyIsOne) { expect_coeffs(from_roots(std::vector<PlanePoint>{}), {1.0}); }

TEST(FromRoots, DegreeLimit) {
  std::vector<PlanePoint> roots(kMaxDegree + 1, PlanePoint{0.0, 0.0});
  EXPECT_THROW(from_roots(roots), DegreeTooLarge);
  roots.pop_back();
  EXPECT_NO_THROW(from_roots(roots));
}

TEST(FromRoots, ResidualAtRoots) {
  Rng rng(21);
  for (int t = 0; t < 50; ++t) {
    const auto roots = random_gaussian_roots(1 + rng() % 100, rng);
    const auto p = from_roots(roots);
    ASSERT_TRUE(p.is_monic());
    double scale = 1.0;
    for (const auto& z : roots) scale *= 1.0 + std::abs(z.complex());
    for (const auto& z : roots) {
      const double residual = std::abs(evaluate_accurate(p, z.complex()));
      const double m = std::max(1.0, std::abs(z.complex()));
      double scaled = 1.0;
      for (const auto& w : roots) scaled *= m + std::abs(w.complex());
      if (m == 1.0) ASSERT_LE(residual, 1e-9 * scale);
      ASSERT_LE(residual, 1e-9 * scaled);
    }
  }
}

TEST(FromRootsExtended, AgreesWithDoubleVersion) {
  Rng rng(22);
  const auto roots = random_gaussian_roots(40, rng);
  const auto p = from_roots(roots);
  const auto q = from_roots_extended(roots);
  ASSERT_EQ(q.degree(), 40u);
  const auto r = q.rounded();
  for (std::size_t k = 0; k <= 40; ++k) EXPECT_LE(std::abs(p[k] - r[k]), 1e-12 * (1.0 + std::abs(r[k])));
  for (std::size_t k = 0; k <= 40; ++k) EXPECT_LE(std::abs(q.lo[k]), 1e-15 * std::abs(q.hi[k]) + 1e-300);
}

TEST(LejaOrder, IsPermutationStartingAtLargestRoot) {
  const std::vector<PlanePoint> roots = {{0.1, 0.0}, {3.0, 0.0}, {-1.0, 0.0}, {0.1, 0.0}, {0.0, 2.0}};
  const auto order = leja_order(roots);
  ASSERT_EQ(order.size(), roots.size());
  EXPECT_EQ(order.front(), 1u);
  std::vector<int> seen(roots.size(), 0);
  for (auto i : order) ++seen[i];
  for (int s : seen) EXPECT_EQ(s, 1);
  EXPECT_TRUE(leja_order(std::vector<PlanePoint>{}).empty());
}

TEST(Multiply, Examples) {
  expect_coeffs(multiply(Polynomial{-1.0, 1.0}, Polynomial{1.0, 1.0}), {-1.0, 0.0, 1.0});
  const Polynomial p{Complex(1.0, 2.0), 3.0, Complex(0.0, -1.0)};
  EXPECT_EQ(multiply(p, Polynomial::constant(1.0)), p);
  expect_coeffs(multiply(Polynomial{1.0, 0.0, 1.0}, Polynomial{1.0, 0.0, 1.0}), {1.0, 0.0, 2.0, 0.0, 1.0});
}

TEST(Multiply, DegreeLimit) {
  const auto p = Polynomial::monomial(kMaxDegree / 2 + 1);
  EXPECT_THROW(multiply(p, p), DegreeTooLarge);
}

TEST(Derivative, Examples) {
  expect_coeffs(derivative(Polynomial{-1.0, 0.0, 1.0}), {0.0, 2.0});
  EXPECT_TRUE(derivative(Polynomial::constant(5.0)).is_zero());
}

TEST(Evaluate, Examples) {
  EXPECT_EQ(evaluate(Polynomial{-1.0, 0.0, 0.0, 1.0}, 1.0), Complex(0.0));
  EXPECT_EQ(evaluate(Polynomial{-1.0, 0.0, 1.0}, Complex(0.0, 1.0)), Complex(-2.0));
  EXPECT_EQ(evaluate_accurate(Polynomial{-1.0, 0.0, 1.0}, Complex(0.0, 1.0)), Complex(-2.0));
}

TEST(Evaluate, AccurateHornerBeatsCancellation) {
  // (x - 1)^6 expanded has exact integer coefficients; at the dyadic point
  // 1 + 2^-10 plain Horner loses every digit to cancellation.
  const auto p = from_roots(std::vector<PlanePoint>(6, PlanePoint{1.0, 0.0}));
  const Complex z{1.0 + std::ldexp(1.0, -10), 0.0};
  const double exact = std::ldexp(1.0, -60);
  EXPECT_NEAR(std::abs(evaluate_accurate(p, z)), exact, 1e-9 * exact);
  EXPECT_GT(std::abs(std::abs(evaluate(p, z)) - exact), 1e-3 * exact);
}

TEST(LogAbs, ValueAndDerivativeAcrossUnitCircle) {
  const Polynomial p{Complex(2.0, 1.0), -3.0, Complex(0.5, 0.5), 1.0};
  const auto dp = derivative(p);
  for (Complex z : {Complex(0.3, -0.2), Complex(0.9, 0.4), Complex(2.5, -1.0), Complex(-40.0, 7.0)}) {
    EXPECT_NEAR(log_abs_value(p, z), std::log(std::abs(evaluate(p, z))), 1e-13);
    EXPECT_NEAR(log_abs_derivative(p, z), std::log(std::abs(evaluate(dp, z))), 1e-13);
    const Complex ratio = newton_ratio(p, z);
    const Complex want = evaluate(p, z) / evaluate(dp, z);
    EXPECT_LE(std::abs(ratio - want), 1e-13 * std::abs(want));
  }
}

TEST(LogAbs, HugeArgumentDoesNotOverflow) {
  const auto p = Polynomial::monomial(300);
  EXPECT_NEAR(log_abs_value(p, 1e10), 300.0 * std::log(1e10), 1e-9);
  EXPECT_NEAR(log_abs_derivative(p, 1e10), std::log(300.0) + 299.0 * std::log(1e10), 1e-9);
}

TEST(LogBinomial, SmallAndLarge) {
  EXPECT_NEAR(std::exp(log_binomial(10, 3)), 120.0, 1e-10);
  EXPECT_EQ(log_binomial(5, 0), 0.0);
  EXPECT_EQ(log_binomial(3, 4), -std::numeric_limits<double>::infinity());
  // log binom(2000, 1000) from Stirling with two correction terms.
  const double n = 2000.0;
  const double stirling = n * std::log(2.0) - 0.5 * std::log(std::numbers::pi * n / 2.0) - 1.0 / (4.0 * n);
  EXPECT_NEAR(log_binomial(2000, 1000), stirling, 1e-9);
  EXPECT_NEAR(log_factorial(20), std::log(2432902008176640000.0), 1e-13 * std::log(2432902008176640000.0));
}

TEST(LogWeylNorm, Examples) {
  EXPECT_NEAR(log_weyl_norm(Polynomial{-1.0, 0.0, 1.0}).log_value, 0.5 * std::log(2.0), 1e-15);
  EXPECT_NEAR(log_weyl_norm(Polynomial{-1.0, 0.0, 0.0, 1.0}).log_value, 0.5 * std::log(2.0), 1e-15);
  const Complex a{0.7, -1.3};
  EXPECT_NEAR(log_weyl_norm(Polynomial{-a, 1.0}).log_value, 0.5 * std::log1p(std::norm(a)), 1e-15);
  EXPECT_NEAR(log_weyl_norm(Polynomial::monomial(50)).log_value, 0.0, 1e-15);
}

TEST(LogWeylNorm, ZeroPolynomialThrows) {
  EXPECT_THROW(log_weyl_norm(Polynomial()), ZeroPolynomial);
  EXPECT_THROW(log_weyl_norm(Polynomial{0.0, 0.0, 0.0}), ZeroPolynomial);
}

TEST(LogWeylNorm, HighDegreeWithoutOverflow) {
  // (x + 1)^N has Weyl norm 2^(N/2); the middle coefficient of N = 1000 is near 1e299.
  const std::size_t n = 1000;
  const auto p = from_roots(std::vector<PlanePoint>(n, PlanePoint{-1.0, 0.0}));
  EXPECT_NEAR(log_weyl_norm(p).log_value, 0.5 * n * std::log(2.0), 1e-9 * n);
  // All-ones coefficients at degree 4000: sum of 1/binomial(N, k) is 2 + O(1/N).
  const Polynomial ones(std::vector<Complex>(4001, Complex(1.0)));
  EXPECT_NEAR(log_weyl_norm(ones).log_value, 0.5 * std::log(2.0 + 2.0 / 4000.0), 1e-6);
}

TEST(LogMonomialNorm, Examples) {
  EXPECT_EQ(log_monomial_norm({0.0, 0.0}).log_value, 0.0);
  EXPECT_NEAR(log_monomial_norm({1.0, 0.0}).log_value, 0.5 * std::log(2.0), 1e-16);
  EXPECT_NEAR(log_monomial_norm({0.0, 1.0}).log_value, 0.5 * std::log(2.0), 1e-16);
}

// ||P|| ||Q|| >= ||PQ|| on random coefficient pairs up to degree 64.
TEST(PolyProperty, AlgebraNorm) {
  Rng rng(23);
  for (int t = 0; t < 10000; ++t) {
    const auto p = random_polynomial(rng() % 65, rng);
    const auto q = random_polynomial(rng() % 65, rng);
    if (p.degree() + q.degree() == 0) continue;
    const double slack = log_weyl_norm(p).log_value + log_weyl_norm(q).log_value - log_weyl_norm(multiply(p, q)).log_value;
    ASSERT_GE(slack, -1e-10) << t;
  }
}

// ||x - a||^N = ||(x - a)^N||.
TEST(PolyProperty, PowerOfLinearFactor) {
  Rng rng(24);
  std::normal_distribution<double> g;
  for (int t = 0; t < 200; ++t) {
    const PlanePoint a{g(rng), g(rng)};
    const std::size_t n = 1 + rng() % 200;
    const auto p = from_roots(std::vector<PlanePoint>(n, a));
    const double lhs = n * log_monomial_norm(a).log_value;
    const double rhs = log_weyl_norm(p).log_value;
    ASSERT_LE(std::abs(lhs - rhs), 1e-10 * std::max(1.0, std::abs(lhs))) << "n=" << n;
  }
}

// z -> e^{i theta} z applied to the roots leaves the Weyl norm unchanged.
TEST(PolyProperty, PhaseRotationInvariance) {
  Rng rng(25);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
  for (int t = 0; t < 200; ++t) {
    auto roots = random_gaussian_roots(1 + rng() % 60, rng);
    const double before = log_weyl_norm(from_roots(roots)).log_value;
    const Complex u = std::polar(1.0, angle(rng));
    for (auto& z : roots) z = PlanePoint(u * z.complex());
    ASSERT_NEAR(log_weyl_norm(from_roots(roots)).log_value, before, 1e-12 * std::max(1.0, std::abs(before)));
  }
}

}  // namespace
}  // namespace fekete
