#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace tiltbeam {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An argument lies outside the domain an operation is defined on.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Adaptive quadrature ran out of subdivisions before meeting its tolerance.
/// Carries the best available estimate and its error bound.
class ConvergenceError : public Error {
 public:
  ConvergenceError(const std::string& what, std::complex<double> best_estimate,
                   double error_bound)
      : Error(what), best_estimate_(best_estimate), error_bound_(error_bound) {}

  std::complex<double> best_estimate() const noexcept { return best_estimate_; }
  double error_bound() const noexcept { return error_bound_; }

 private:
  std::complex<double> best_estimate_;
  double error_bound_;
};

/// Invalid configuration value. `field()` holds the offending key path,
/// e.g. "theta_grid.step_deg".
class ConfigError : public Error {
 public:
  ConfigError(std::string field, const std::string& what)
      : Error(field.empty() ? what : field + ": " + what), field_(std::move(field)) {}

  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

/// Malformed configuration text. Line and column are 1-based.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : Error(what), line_(line), column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// Filesystem failure while emitting artifacts (lock held, rename failed, ...).
class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace tiltbeam
