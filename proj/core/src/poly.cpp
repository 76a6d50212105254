#include "fekete/poly.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "fekete/errors.hpp"

namespace fekete {

Polynomial::Polynomial(std::vector<Complex> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) coeffs_.push_back(0.0);
}

Polynomial Polynomial::monomial(std::size_t degree, Complex c) {
  std::vector<Complex> v(degree + 1, Complex{0.0});
  v.back() = c;
  return Polynomial(std::move(v));
}

bool Polynomial::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Complex& a) { return a == Complex{0.0}; });
}

Polynomial Polynomial::normalize(double rel_tol) const {
  double amax = 0.0;
  for (const auto& a : coeffs_) amax = std::max(amax, std::abs(a));
  std::size_t len = coeffs_.size();
  while (len > 0 && std::abs(coeffs_[len - 1]) <= rel_tol * amax) --len;
  if (len == 0) return Polynomial();
  return Polynomial(std::vector<Complex>(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(len)));
}

namespace {

// Minimal double-double arithmetic (Dekker / Knuth error-free transforms).
struct DD {
  double hi = 0.0;
  double lo = 0.0;
};

inline DD quick_two_sum(double a, double b) {
  const double s = a + b;
  return {s, b - (s - a)};
}

inline DD two_sum(double a, double b) {
  const double s = a + b;
  const double bb = s - a;
  return {s, (a - (s - bb)) + (b - bb)};
}

inline void split(double a, double& hi, double& lo) {
  constexpr double kSplitter = 134217729.0;  // 2^27 + 1
  const double t = kSplitter * a;
  hi = t - (t - a);
  lo = a - hi;
}

inline DD two_prod(double a, double b) {
  const double p = a * b;
  double ah, al, bh, bl;
  split(a, ah, al);
  split(b, bh, bl);
  return {p, ((ah * bh - p) + ah * bl + al * bh) + al * bl};
}

inline DD add(DD x, DD y) {
  DD s = two_sum(x.hi, y.hi);
  s.lo += x.lo + y.lo;
  return quick_two_sum(s.hi, s.lo);
}

inline DD mul(DD x, double y) {
  DD p = two_prod(x.hi, y);
  p.lo += x.lo * y;
  return quick_two_sum(p.hi, p.lo);
}

inline DD neg(DD x) { return {-x.hi, -x.lo}; }

struct DDComplex {
  DD re, im;

  Complex value() const { return {re.hi + re.lo, im.hi + im.lo}; }
};

// v * z + a with v carried in double-double.
inline DDComplex fma_step(const DDComplex& v, Complex z, const DDComplex& a) {
  const DD re = add(add(mul(v.re, z.real()), neg(mul(v.im, z.imag()))), a.re);
  const DD im = add(add(mul(v.re, z.imag()), mul(v.im, z.real())), a.im);
  return {re, im};
}

inline DDComplex lift(Complex a) { return {{a.real(), 0.0}, {a.imag(), 0.0}}; }

inline DDComplex lift(Complex hi, Complex lo) { return {{hi.real(), lo.real()}, {hi.imag(), lo.imag()}}; }

// Simultaneous evaluation of a polynomial and its derivative. When
// `reversed` is set the coefficients are read as those of x^N P(1/x).
struct ValueAndSlope {
  Complex value;
  Complex slope;
};

template <class Coeff>
ValueAndSlope horner_dd(std::size_t n, Coeff coeff, Complex z, bool reversed) {
  DDComplex v{}, dv{};
  for (std::size_t k = 0; k < n; ++k) {
    dv = fma_step(dv, z, v);
    v = fma_step(v, z, coeff(reversed ? k : n - 1 - k));
  }
  return {v.value(), dv.value()};
}

ValueAndSlope horner_dd(std::span<const Complex> c, Complex z, bool reversed) {
  return horner_dd(c.size(), [&](std::size_t k) { return lift(c[k]); }, z, reversed);
}

ValueAndSlope horner_dd(const ExtendedPolynomial& p, Complex z, bool reversed) {
  return horner_dd(p.hi.size(), [&](std::size_t k) { return lift(p.hi[k], p.lo[k]); }, z, reversed);
}

template <class P>
double log_abs_value_impl(const P& p, std::size_t degree, Complex z) {
  const double r = std::abs(z);
  if (r <= 1.0) return std::log(std::abs(horner_dd(p, z, false).value));
  const double n = static_cast<double>(degree);
  return n * std::log(r) + std::log(std::abs(horner_dd(p, 1.0 / z, true).value));
}

template <class P>
double log_abs_derivative_impl(const P& p, std::size_t degree, Complex z) {
  const double r = std::abs(z);
  if (r <= 1.0) return std::log(std::abs(horner_dd(p, z, false).slope));
  // P(z) = z^N q(1/z)  =>  P'(z) = z^(N-2) (N z q(w) - q'(w)),  w = 1/z.
  const auto [q, dq] = horner_dd(p, 1.0 / z, true);
  const double n = static_cast<double>(degree);
  return (n - 2.0) * std::log(r) + std::log(std::abs(n * z * q - dq));
}

}  // namespace

std::vector<std::size_t> leja_order(std::span<const PlanePoint> roots) {
  const std::size_t n = roots.size();
  std::vector<std::size_t> order;
  order.reserve(n);
  if (n == 0) return order;

  // Running products prod_{chosen j} |z_i - z_j|^2 kept as mantissa/exponent
  // pairs, compared lexicographically (exponent first).
  std::vector<double> mant(n, 0.5);
  std::vector<int> expo(n, 1);
  std::vector<char> used(n, 0);

  // Zero products (duplicates of a chosen root) rank below everything else.
  auto better = [&](std::size_t i, std::size_t j) {
    if (mant[j] == 0.0) return mant[i] != 0.0;
    if (mant[i] == 0.0) return false;
    return expo[i] > expo[j] || (expo[i] == expo[j] && mant[i] > mant[j]);
  };

  std::size_t pick = 0;
  for (std::size_t i = 1; i < n; ++i) {
    if (roots[i].norm_squared() > roots[pick].norm_squared()) pick = i;
  }
  for (std::size_t step = 0; step < n; ++step) {
    order.push_back(pick);
    used[pick] = 1;
    const Complex zp = roots[pick].complex();
    std::size_t next = n;
    for (std::size_t i = 0; i < n; ++i) {
      if (used[i]) continue;
      if (mant[i] != 0.0) {
        int e = 0;
        mant[i] = std::frexp(mant[i] * std::norm(roots[i].complex() - zp), &e);
        expo[i] += e;
      }
      if (next == n || better(i, next)) next = i;
    }
    pick = next;
  }
  return order;
}

Polynomial from_roots(std::span<const PlanePoint> roots) {
  const std::size_t n = roots.size();
  if (n > kMaxDegree) throw DegreeTooLarge(n, kMaxDegree);
  std::vector<Complex> c;
  c.reserve(n + 1);
  c.push_back(1.0);
  for (std::size_t idx : leja_order(roots)) {
    const Complex r = roots[idx].complex();
    const std::size_t m = c.size() - 1;
    c.push_back(c[m]);
    for (std::size_t k = m; k >= 1; --k) c[k] = c[k - 1] - r * c[k];
    c[0] = -r * c[0];
  }
  return Polynomial(std::move(c));
}

ExtendedPolynomial from_roots_extended(std::span<const PlanePoint> roots) {
  const std::size_t n = roots.size();
  if (n > kMaxDegree) throw DegreeTooLarge(n, kMaxDegree);
  std::vector<DDComplex> c;
  c.reserve(n + 1);
  c.push_back(lift(Complex{1.0}));
  for (std::size_t idx : leja_order(roots)) {
    const Complex r = -roots[idx].complex();
    const std::size_t m = c.size() - 1;
    c.push_back(c[m]);
    for (std::size_t k = m; k >= 1; --k) c[k] = fma_step(c[k], r, c[k - 1]);
    c[0] = fma_step(c[0], r, DDComplex{});
  }
  ExtendedPolynomial p;
  p.hi.reserve(n + 1);
  p.lo.reserve(n + 1);
  for (const auto& a : c) {
    p.hi.emplace_back(a.re.hi, a.im.hi);
    p.lo.emplace_back(a.re.lo, a.im.lo);
  }
  return p;
}

Polynomial ExtendedPolynomial::rounded() const {
  std::vector<Complex> c(hi.size());
  for (std::size_t k = 0; k < hi.size(); ++k) c[k] = hi[k] + lo[k];
  return Polynomial(std::move(c));
}

Polynomial multiply(const Polynomial& p, const Polynomial& q) {
  const std::size_t deg = p.degree() + q.degree();
  if (deg > kMaxDegree) throw DegreeTooLarge(deg, kMaxDegree);
  std::vector<Complex> c(deg + 1, Complex{0.0});
  const auto pc = p.coeffs();
  const auto qc = q.coeffs();
  for (std::size_t i = 0; i < pc.size(); ++i) {
    for (std::size_t j = 0; j < qc.size(); ++j) c[i + j] += pc[i] * qc[j];
  }
  return Polynomial(std::move(c));
}

Polynomial derivative(const Polynomial& p) {
  const std::size_t n = p.degree();
  if (n == 0) return Polynomial();
  std::vector<Complex> c(n);
  for (std::size_t k = 1; k <= n; ++k) c[k - 1] = static_cast<double>(k) * p[k];
  return Polynomial(std::move(c));
}

Complex evaluate(const Polynomial& p, Complex z) {
  const auto c = p.coeffs();
  Complex v{0.0};
  for (auto it = c.rbegin(); it != c.rend(); ++it) v = v * z + *it;
  return v;
}

Complex evaluate_accurate(const Polynomial& p, Complex z) { return horner_dd(p.coeffs(), z, false).value; }

double log_abs_value(const Polynomial& p, Complex z) { return log_abs_value_impl(p.coeffs(), p.degree(), z); }

double log_abs_derivative(const Polynomial& p, Complex z) {
  return log_abs_derivative_impl(p.coeffs(), p.degree(), z);
}

double log_abs_value(const ExtendedPolynomial& p, Complex z) { return log_abs_value_impl(p, p.degree(), z); }

double log_abs_derivative(const ExtendedPolynomial& p, Complex z) {
  return log_abs_derivative_impl(p, p.degree(), z);
}

Complex newton_ratio(const Polynomial& p, Complex z) {
  if (std::abs(z) <= 1.0) {
    const auto [v, dv] = horner_dd(p.coeffs(), z, false);
    return v / dv;
  }
  const Complex w = 1.0 / z;
  const auto [q, dq] = horner_dd(p.coeffs(), w, true);
  const double n = static_cast<double>(p.degree());
  return z * z * q / (n * z * q - dq);
}

namespace {

const std::vector<double>& log_factorial_table() {
  static const std::vector<double> table = [] {
    std::vector<double> t(2 * kMaxDegree + 2);
    for (std::size_t k = 0; k < t.size(); ++k) t[k] = std::lgamma(static_cast<double>(k) + 1.0);
    return t;
  }();
  return table;
}

}  // namespace

double log_factorial(std::size_t n) {
  const auto& t = log_factorial_table();
  if (n < t.size()) return t[n];
  return std::lgamma(static_cast<double>(n) + 1.0);
}

double log_binomial(std::size_t n, std::size_t k) {
  if (k > n) return -std::numeric_limits<double>::infinity();
  return log_factorial(n) - log_factorial(k) - log_factorial(n - k);
}

LogMagnitude log_weyl_norm(const Polynomial& p) {
  const std::size_t n = p.degree();
  const auto c = p.coeffs();
  LogSumExpAccumulator acc;
  for (std::size_t i = 0; i <= n; ++i) {
    const double a = std::abs(c[i]);
    if (a == 0.0) continue;
    acc.add(2.0 * std::log(a) - log_binomial(n, i));
  }
  const double s = acc.result();
  if (std::isinf(s) && s < 0) throw ZeroPolynomial();
  return {0.5 * s};
}

LogMagnitude log_monomial_norm(PlanePoint z) { return {0.5 * std::log1p(z.norm_squared())}; }

}  // namespace fekete
