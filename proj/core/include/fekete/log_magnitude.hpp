#pragma once

#include <cmath>
#include <compare>
#include <limits>
#include <span>

namespace fekete {

// Natural logarithm of a nonnegative quantity. Norms, condition numbers and
// quotients in this library grow like e^N, so they are carried in log form and
// only exponentiated at the reporting boundary. -inf encodes zero, +inf encodes
// an infinite quantity (e.g. the condition number at a double root).
struct LogMagnitude {
  double log_value = -std::numeric_limits<double>::infinity();

  static constexpr LogMagnitude zero() { return {-std::numeric_limits<double>::infinity()}; }
  static constexpr LogMagnitude one() { return {0.0}; }
  static constexpr LogMagnitude infinity() { return {std::numeric_limits<double>::infinity()}; }
  static LogMagnitude from_value(double v) { return {std::log(v)}; }

  bool is_zero() const { return std::isinf(log_value) && log_value < 0; }
  bool is_infinite() const { return std::isinf(log_value) && log_value > 0; }

  // exp(log_value); overflows to +inf when the quantity does not fit a double.
  double value() const { return std::exp(log_value); }

  friend LogMagnitude operator*(LogMagnitude a, LogMagnitude b) { return {a.log_value + b.log_value}; }
  friend LogMagnitude operator/(LogMagnitude a, LogMagnitude b) { return {a.log_value - b.log_value}; }
  LogMagnitude pow(double p) const { return {p * log_value}; }
  LogMagnitude sqrt() const { return {0.5 * log_value}; }

  friend auto operator<=>(const LogMagnitude&, const LogMagnitude&) = default;
};

// log(sum_i exp(terms[i])), stable for any magnitudes; -inf terms are ignored.
double log_sum_exp(std::span<const double> terms);

// Running log-sum-exp accumulator; merge() combines partial sums so parallel
// blocks can be reduced in a fixed order.
class LogSumExpAccumulator {
 public:
  void add(double term) {
    if (term == -std::numeric_limits<double>::infinity()) return;
    if (term <= max_) {
      sum_ += std::exp(term - max_);
    } else {
      sum_ = sum_ * std::exp(max_ - term) + 1.0;
      max_ = term;
    }
  }
  void merge(const LogSumExpAccumulator& other) {
    if (other.sum_ == 0.0) return;
    if (sum_ == 0.0) {
      *this = other;
      return;
    }
    if (other.max_ <= max_) {
      sum_ += other.sum_ * std::exp(other.max_ - max_);
    } else {
      sum_ = sum_ * std::exp(max_ - other.max_) + other.sum_;
      max_ = other.max_;
    }
  }
  double result() const {
    return sum_ == 0.0 ? -std::numeric_limits<double>::infinity() : max_ + std::log(sum_);
  }

 private:
  double max_ = -std::numeric_limits<double>::infinity();
  double sum_ = 0.0;
};

}  // namespace fekete
