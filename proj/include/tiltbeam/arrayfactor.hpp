#pragma once

#include <complex>

namespace tiltbeam {

/// Uniform rectangular array: element counts and spacings along x and y.
struct ArrayLayout {
  int count_x = 1;
  int count_y = 2;
  double spacing_x = 0.0;     // m
  double spacing_y = 1.2e-3;  // m

  /// Counts >= 1; a spacing must be > 0 when its count is > 1.
  void validate() const;

  /// True when at most one axis holds more than one element.
  bool is_linear() const noexcept { return count_x == 1 || count_y == 1; }
  int element_count() const noexcept { return count_x * count_y; }

  bool operator==(const ArrayLayout&) const = default;
};

/// Commanded main-beam direction for a linear array, |theta0| < pi/2.
struct SteeringCommand {
  double theta0 = 0.0;  // rad

  void validate() const;
};

/// |sin(n psi)| / (n |sin psi|), with the removable singularity at
/// psi = m pi replaced by its limit 1 (via a short series near the pole).
double uniform_factor(int n, double psi);

/// Separable uniform-array factor
///
///   AF = |sin(pi Nx dx sin(theta)/lambda)| / (Nx sin(pi dx sin(theta)/lambda))
///      * |sin(pi Ny dy sin(phi)/lambda)|   / (Ny sin(pi dy sin(phi)/lambda))
///
/// The y factor deliberately uses sin(phi) rather than
/// the planar-array sin(theta) sin(phi). Result lies in [0, 1].
double array_factor(const ArrayLayout& layout, double theta, double phi, double lambda);

/// Phasor-sum factor of a 1xN array steered to cmd.theta0:
/// (1/N) sum_n exp(j n k d (sin theta - sin theta0)). Magnitude 1 at theta0.
/// Throws DomainError when both counts exceed 1.
std::complex<double> steered_array_factor(const ArrayLayout& layout, const SteeringCommand& cmd,
                                          double theta, double lambda);

}  // namespace tiltbeam
