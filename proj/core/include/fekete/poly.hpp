#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "fekete/log_magnitude.hpp"
#include "fekete/sphere.hpp"

namespace fekete {

using Complex = std::complex<double>;

// Largest degree any operation will build. Log-binomials up to this degree are
// tabulated once; binom(N, N/2) itself already overflows a double near N = 1029.
inline constexpr std::size_t kMaxDegree = 4096;

// Dense univariate polynomial a_0 + a_1 x + ... + a_N x^N with complex
// coefficients in ascending order. The Weyl norm treats it as the homogeneous
// form sum a_i x^i y^(N-i), so degree() is the number of stored coefficients
// minus one even if the top ones are zero; trimming only happens in normalize().
class Polynomial {
 public:
  Polynomial() : coeffs_{Complex{0.0}} {}
  explicit Polynomial(std::vector<Complex> coeffs);
  Polynomial(std::initializer_list<Complex> coeffs) : Polynomial(std::vector<Complex>(coeffs)) {}

  static Polynomial constant(Complex c) { return Polynomial({c}); }
  static Polynomial monomial(std::size_t degree, Complex c = 1.0);

  std::size_t degree() const { return coeffs_.size() - 1; }
  std::span<const Complex> coeffs() const { return coeffs_; }
  const Complex& operator[](std::size_t i) const { return coeffs_[i]; }
  const Complex& leading() const { return coeffs_.back(); }

  bool is_zero() const;
  bool is_monic() const { return leading() == Complex{1.0}; }

  // Drops leading coefficients with |a| <= rel_tol * max|a_i|. A polynomial that
  // is entirely below the threshold collapses to the zero constant.
  Polynomial normalize(double rel_tol = 1e-14) const;

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  std::vector<Complex> coeffs_;
};

// Monic polynomial prod (x - z_i). The factors are multiplied in Leja order
// (each next root maximises the product of distances to those already used),
// which keeps intermediate coefficients small; the result does not depend on
// the input order beyond rounding. Throws DegreeTooLarge above kMaxDegree.
Polynomial from_roots(std::span<const PlanePoint> roots);

// Monic polynomial prod (x - z_i) whose coefficients are carried as unevaluated
// sums hi + lo of two doubles. Coefficient-level quantities derived from it
// (P' at a root in particular) keep their accuracy when the roots are badly
// conditioned, where rounding the coefficients to double would not.
struct ExtendedPolynomial {
  std::vector<Complex> hi;
  std::vector<Complex> lo;

  std::size_t degree() const { return hi.size() - 1; }
  Polynomial rounded() const;
};

ExtendedPolynomial from_roots_extended(std::span<const PlanePoint> roots);

// Leja ordering used by from_roots, exposed for tests and benchmarks.
std::vector<std::size_t> leja_order(std::span<const PlanePoint> roots);

Polynomial multiply(const Polynomial& p, const Polynomial& q);
Polynomial derivative(const Polynomial& p);

// Plain Horner evaluation.
Complex evaluate(const Polynomial& p, Complex z);

// Horner evaluation carried in double-double arithmetic, so the result is as
// accurate as if computed with twice the working precision.
Complex evaluate_accurate(const Polynomial& p, Complex z);

// log|P(z)| and log|P'(z)| evaluated so that large |z| does not overflow:
// for |z| > 1 the reversed polynomial is evaluated at 1/z.
double log_abs_value(const Polynomial& p, Complex z);
double log_abs_derivative(const Polynomial& p, Complex z);
double log_abs_value(const ExtendedPolynomial& p, Complex z);
double log_abs_derivative(const ExtendedPolynomial& p, Complex z);

// P(z) / P'(z) in double-double Horner, via the reversed polynomial when |z| > 1.
Complex newton_ratio(const Polynomial& p, Complex z);

// log binom(n, k) from a table of log-factorials.
double log_binomial(std::size_t n, std::size_t k);
// log n!
double log_factorial(std::size_t n);

// Bombieri-Weyl norm ||P|| = (sum_i |a_i|^2 / binom(N, i))^(1/2), in log form.
// Throws ZeroPolynomial.
LogMagnitude log_weyl_norm(const Polynomial& p);

// Weyl norm of the linear factor (x - z): (1 + |z|^2)^(1/2).
LogMagnitude log_monomial_norm(PlanePoint z);

}  // namespace fekete
