#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fekete {

// Base class for every error raised by the library. Callers that only care
// about "something numerical went wrong" can catch this one type.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A sphere point sits too close to (0,0,1) to have a finite stereographic image.
class NearNorthPole : public Error {
 public:
  explicit NearNorthPole(double c)
      : Error("point is within the north-pole cutoff (c = " + std::to_string(c) + ")"), c_(c) {}
  double c() const noexcept { return c_; }

 private:
  double c_;
};

// Two points of a configuration coincide (pairwise distance below the floor),
// so the logarithmic energy is +infinity.
class CoincidentPoints : public Error {
 public:
  CoincidentPoints(std::size_t i, std::size_t j)
      : Error("points " + std::to_string(i) + " and " + std::to_string(j) + " coincide"), i_(i), j_(j) {}
  std::size_t first() const noexcept { return i_; }
  std::size_t second() const noexcept { return j_; }

 private:
  std::size_t i_, j_;
};

class DegreeTooLarge : public Error {
 public:
  DegreeTooLarge(std::size_t degree, std::size_t limit)
      : Error("degree " + std::to_string(degree) + " exceeds the supported maximum " + std::to_string(limit)) {}
};

class ZeroPolynomial : public Error {
 public:
  ZeroPolynomial() : Error("operation undefined for the zero polynomial") {}
};

class NotARoot : public Error {
 public:
  explicit NotARoot(double log_residual)
      : Error("point is not a root (log residual " + std::to_string(log_residual) + ")") {}
};

class ParseError : public Error {
 public:
  ParseError(std::string source, std::size_t line, const std::string& what)
      : Error(source + ":" + std::to_string(line) + ": " + what), source_(std::move(source)), line_(line) {}
  const std::string& source() const noexcept { return source_; }
  std::size_t line() const noexcept { return line_; }

 private:
  std::string source_;
  std::size_t line_;
};

}  // namespace fekete
