#pragma once

#include <complex>
#include <functional>
#include <string_view>

#include "tiltbeam/specfun.hpp"

namespace tiltbeam {

/// Half-wave slot: length and peak aperture field.
struct SlotSpec {
  double length = 4.8e-3;   // m
  double amplitude = 1.0;   // V/m, field at the slot centre

  void validate() const;
  bool operator==(const SlotSpec&) const = default;
};

/// Current distribution assumed along the monopole.
enum class CurrentModel {
  Sinusoidal,  // standing wave I0 sin(k (H - z))
  Triangular,  // I0 (1 - z / H), electrically short monopoles
};

std::string_view to_string(CurrentModel model);
CurrentModel current_model_from_string(std::string_view name);

/// Monopole over a finite circular ground.
struct MonopoleSpec {
  double height = 1.2e-3;         // m, equivalent physical length
  double ground_radius = 5.0e-3;  // m
  CurrentModel current_model = CurrentModel::Sinusoidal;

  void validate() const;
  bool operator==(const MonopoleSpec&) const = default;
};

/// Free-space frequency, wavenumber and wavelength, kept consistent.
class FrequencyContext {
 public:
  /// Throws DomainError unless f is finite and > 0.
  explicit FrequencyContext(double frequency_hz);

  double frequency() const noexcept { return frequency_; }
  double wavenumber() const noexcept { return wavenumber_; }
  double wavelength() const noexcept { return wavelength_; }

 private:
  double frequency_;
  double wavenumber_;
  double wavelength_;
};

/// Fundamental-mode aperture field E0 cos(pi y / L) across the slot.
/// Throws DomainError for |y| > L/2.
double slot_aperture_field(double y, const SlotSpec& slot);

/// Normalized cavity-model slot pattern sin((pi/2) sin theta), evaluated
/// literally. Peaks at theta = pi/2; callers working with a polar angle
/// measured from the board normal pass (pi/2 - theta).
double slot_pattern(double theta);

/// Relative excitation |cos(pi y / L)| of a monopole coupled at offset y
/// from the slot centre. Throws DomainError for |y| > L/2.
double monopole_coupling_weight(double position_y, const SlotSpec& slot);

/// Integrates `f` over [a, b]; lets tests swap in an independent rule.
using Integrator =
    std::function<std::complex<double>(const ComplexIntegrand& f, double a, double b)>;

Integrator adaptive_integrator(const QuadratureSpec& spec);

/// The two far-field contributions of a monopole on a finite ground:
/// `direct` from the wire current, `ground` from the radial ground current
/// (already scaled by ground_current_constant()).
struct MonopoleTerms {
  std::complex<double> direct;
  std::complex<double> ground;

  std::complex<double> sum() const { return direct + ground; }
};

/// Un-normalized monopole field terms at polar angle theta (from the wire
/// axis). The factor common to both terms, Z0 e^{-jkr0} / r0, is replaced by
/// `prefactor` since it cancels under normalization. Odd in theta.
MonopoleTerms monopole_terms(double theta, const MonopoleSpec& mono, const FrequencyContext& ctx,
                             const Integrator& integrate, std::complex<double> prefactor = 1.0);

/// Radial ground-current amplitude J0 of the model J(rho) = J0 e^{-jk rho} / rho.
///
/// Negative (return current) with magnitude chosen so the direct and ground
/// terms have equal peak magnitude for H = lambda/4, a = 2 lambda with a
/// sinusoidal current. Computed once per process.
double ground_current_constant();

/// Inner cut-off of the ground-current integral, in wavelengths.
inline constexpr double kGroundInnerRadiusWavelengths = 0.05;

/// Spacing of the grid over [0, 90] deg on which the monopole peak is found.
inline constexpr double kMonopoleNormalizationStepDeg = 0.25;

/// Normalized monopole pattern E_m(theta) = (E1 + E2) / (E1 + E2)|peak.
///
/// The reference is the complex field at the magnitude peak of the
/// 0.25-degree normalization grid, so the pattern is real and equal to 1
/// there and carries the physical phase elsewhere. The normalization grid
/// is evaluated once, at construction.
class MonopolePattern {
 public:
  MonopolePattern(const MonopoleSpec& mono, const FrequencyContext& ctx,
                  const QuadratureSpec& quad = {});
  MonopolePattern(const MonopoleSpec& mono, const FrequencyContext& ctx, Integrator integrate,
                  std::complex<double> prefactor = 1.0);

  /// Upper half-space only: 0 <= theta <= pi/2, otherwise DomainError.
  std::complex<double> operator()(double theta) const;

  /// Field along a full elevation cut, -pi/2 <= theta <= pi/2. E_theta
  /// reverses sign across the wire axis, so this is odd in theta.
  std::complex<double> in_cut(double theta) const;

  double peak_theta() const noexcept { return peak_theta_; }
  std::complex<double> reference() const noexcept { return reference_; }

 private:
  std::complex<double> raw(double theta) const;

  MonopoleSpec mono_;
  FrequencyContext ctx_;
  Integrator integrate_;
  std::complex<double> prefactor_;
  std::complex<double> reference_;
  double peak_theta_ = 0.0;
};

/// One-shot convenience wrapper around MonopolePattern.
std::complex<double> monopole_pattern(double theta, const MonopoleSpec& mono,
                                      const FrequencyContext& ctx, const QuadratureSpec& quad = {});

}  // namespace tiltbeam
