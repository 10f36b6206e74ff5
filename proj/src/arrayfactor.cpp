#include "tiltbeam/arrayfactor.hpp"

#include <cmath>

#include "tiltbeam/constants.hpp"
#include "tiltbeam/errors.hpp"

namespace tiltbeam {

void ArrayLayout::validate() const {
  if (count_x < 1 || count_y < 1) throw DomainError("array counts must be >= 1");
  if (count_x > 1 && !(spacing_x > 0.0)) throw DomainError("spacing_x must be > 0 when count_x > 1");
  if (count_y > 1 && !(spacing_y > 0.0)) throw DomainError("spacing_y must be > 0 when count_y > 1");
}

void SteeringCommand::validate() const {
  if (!(std::fabs(theta0) < 0.5 * kPi)) throw DomainError("steering angle must satisfy |theta0| < pi/2");
}

double uniform_factor(int n, double psi) {
  if (n < 1) throw DomainError("uniform_factor: n must be >= 1");
  if (n == 1) return 1.0;
  // |sin(n psi)| / (n |sin psi|) only depends on psi modulo pi.
  const double delta = psi - kPi * std::nearbyint(psi / kPi);
  if (std::fabs(delta) < 1e-5) {
    // 1 - (n^2 - 1) delta^2 / 6 + O(delta^4)
    const double nn = static_cast<double>(n) * n;
    return 1.0 - (nn - 1.0) * delta * delta / 6.0;
  }
  const double value = std::fabs(std::sin(n * delta)) / (n * std::fabs(std::sin(delta)));
  return std::fmin(value, 1.0);
}

double array_factor(const ArrayLayout& layout, double theta, double phi, double lambda) {
  layout.validate();
  if (!(lambda > 0.0)) throw DomainError("array_factor: lambda must be > 0");
  const double psi_x = kPi * layout.spacing_x * std::sin(theta) / lambda;
  const double psi_y = kPi * layout.spacing_y * std::sin(phi) / lambda;
  return uniform_factor(layout.count_x, psi_x) * uniform_factor(layout.count_y, psi_y);
}

std::complex<double> steered_array_factor(const ArrayLayout& layout, const SteeringCommand& cmd,
                                          double theta, double lambda) {
  layout.validate();
  cmd.validate();
  if (!layout.is_linear()) throw DomainError("steered_array_factor: layout must be 1xN");
  if (!(lambda > 0.0)) throw DomainError("steered_array_factor: lambda must be > 0");
  const int n = layout.element_count();
  if (n == 1) return {1.0, 0.0};
  const double d = layout.count_x > 1 ? layout.spacing_x : layout.spacing_y;
  const double step = 2.0 * kPi / lambda * d * (std::sin(theta) - std::sin(cmd.theta0));
  std::complex<double> sum{};
  for (int i = 0; i < n; ++i) sum += std::polar(1.0, i * step);
  return sum / static_cast<double>(n);
}

}  // namespace tiltbeam
