#pragma once

#include <complex>
#include <functional>

namespace tiltbeam {

/// Tolerances and work budget for adaptive quadrature.
struct QuadratureSpec {
  double abs_tol = 1e-12;
  double rel_tol = 1e-10;
  int max_subdivisions = 20000;

  /// Throws DomainError unless abs_tol > 0, rel_tol > 0, max_subdivisions >= 1.
  void validate() const;

  bool operator==(const QuadratureSpec&) const = default;
};

/// First-order Bessel function of the first kind.
///
/// Ascending power series (summed in extended precision) for
/// |x| <= detail::kBesselJ1Crossover, Hankel asymptotic expansion beyond.
/// Odd by construction. Throws DomainError for non-finite x.
double bessel_j1(double x);

using ComplexIntegrand = std::function<std::complex<double>(double)>;

/// Globally adaptive Simpson quadrature of a complex-valued integrand.
///
/// The interval with the largest Richardson error estimate is bisected until
/// the summed estimate is within max(abs_tol, rel_tol * |result|). Throws
/// ConvergenceError (carrying the best estimate and bound) once
/// max_subdivisions bisections have been spent. Requires a <= b.
std::complex<double> integrate_complex(const ComplexIntegrand& f, double a, double b,
                                       const QuadratureSpec& spec = {});

namespace detail {

inline constexpr double kBesselJ1Crossover = 17.0;

double bessel_j1_series(double x);
double bessel_j1_asymptotic(double x);

}  // namespace detail

}  // namespace tiltbeam
