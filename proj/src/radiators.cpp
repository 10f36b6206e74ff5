#include "tiltbeam/radiators.hpp"

#include <cmath>
#include <string>

#include "tiltbeam/constants.hpp"
#include "tiltbeam/errors.hpp"

namespace tiltbeam {

void SlotSpec::validate() const {
  if (!(length > 0.0) || !std::isfinite(length)) throw DomainError("slot length must be > 0");
  if (!(amplitude > 0.0) || !std::isfinite(amplitude))
    throw DomainError("slot amplitude must be > 0");
}

std::string_view to_string(CurrentModel model) {
  switch (model) {
    case CurrentModel::Sinusoidal:
      return "sinusoidal";
    case CurrentModel::Triangular:
      return "triangular";
  }
  return "sinusoidal";
}

CurrentModel current_model_from_string(std::string_view name) {
  if (name == "sinusoidal") return CurrentModel::Sinusoidal;
  if (name == "triangular") return CurrentModel::Triangular;
  throw DomainError("unknown current model '" + std::string(name) +
                    "' (expected sinusoidal or triangular)");
}

void MonopoleSpec::validate() const {
  if (!(height > 0.0) || !std::isfinite(height)) throw DomainError("monopole height must be > 0");
  if (!(ground_radius > 0.0) || !std::isfinite(ground_radius))
    throw DomainError("monopole ground radius must be > 0");
}

FrequencyContext::FrequencyContext(double frequency_hz) : frequency_(frequency_hz) {
  if (!(frequency_hz > 0.0) || !std::isfinite(frequency_hz))
    throw DomainError("frequency must be finite and > 0");
  wavelength_ = kSpeedOfLight / frequency_hz;
  wavenumber_ = 2.0 * kPi * frequency_hz / kSpeedOfLight;
}

double slot_aperture_field(double y, const SlotSpec& slot) {
  slot.validate();
  if (!(std::fabs(y) <= 0.5 * slot.length))
    throw DomainError("slot_aperture_field: y outside [-L/2, L/2]");
  return slot.amplitude * std::cos(kPi * y / slot.length);
}

double slot_pattern(double theta) { return std::sin(0.5 * kPi * std::sin(theta)); }

double monopole_coupling_weight(double position_y, const SlotSpec& slot) {
  slot.validate();
  if (!(std::fabs(position_y) <= 0.5 * slot.length))
    throw DomainError("monopole_coupling_weight: position outside the slot");
  return std::fabs(std::cos(kPi * position_y / slot.length));
}

Integrator adaptive_integrator(const QuadratureSpec& spec) {
  spec.validate();
  return [spec](const ComplexIntegrand& f, double a, double b) {
    return integrate_complex(f, a, b, spec);
  };
}

namespace {

// Terms with the ground contribution not yet scaled by J0.
MonopoleTerms raw_terms(double theta, double height, double ground_radius, CurrentModel model,
                        double k, const Integrator& integrate) {
  using namespace std::complex_literals;
  const double sin_t = std::sin(theta);
  const double cos_t = std::cos(theta);

  MonopoleTerms terms{};
  if (sin_t != 0.0) {
    const ComplexIntegrand wire = [=](double z) {
      const double current =
          model == CurrentModel::Sinusoidal ? std::sin(k * (height - z)) : 1.0 - z / height;
      return current * std::exp(std::complex<double>(0.0, -k * z * cos_t));
    };
    terms.direct = 1i * k / (4.0 * kPi) * sin_t * integrate(wire, 0.0, height);
  }

  // J(rho) rho = e^{-jk rho}, so the 1/rho of the current cancels the
  // area element.
  const double rho_min = kGroundInnerRadiusWavelengths * 2.0 * kPi / k;
  if (sin_t != 0.0 && cos_t != 0.0 && ground_radius > rho_min) {
    const ComplexIntegrand ground = [=](double rho) {
      return std::exp(std::complex<double>(0.0, -k * rho)) * bessel_j1(k * rho * sin_t);
    };
    terms.ground = k * cos_t / 2.0 * integrate(ground, rho_min, ground_radius);
  }
  return terms;
}

double calibrate_ground_constant() {
  // Electrical units: lambda = 1, H = lambda/4, a = 2 lambda.
  const double k = 2.0 * kPi;
  const Integrator integrate = adaptive_integrator({1e-14, 1e-12, 200000});
  double direct_peak = 0.0;
  double ground_peak = 0.0;
  for (int i = 0; i * kMonopoleNormalizationStepDeg <= 90.0; ++i) {
    const double theta = deg_to_rad(i * kMonopoleNormalizationStepDeg);
    const MonopoleTerms t = raw_terms(theta, 0.25, 2.0, CurrentModel::Sinusoidal, k, integrate);
    direct_peak = std::max(direct_peak, std::abs(t.direct));
    ground_peak = std::max(ground_peak, std::abs(t.ground));
  }
  return -direct_peak / ground_peak;
}

}  // namespace

double ground_current_constant() {
  static const double value = calibrate_ground_constant();
  return value;
}

MonopoleTerms monopole_terms(double theta, const MonopoleSpec& mono, const FrequencyContext& ctx,
                             const Integrator& integrate, std::complex<double> prefactor) {
  mono.validate();
  if (!std::isfinite(theta)) throw DomainError("monopole_terms: theta must be finite");
  MonopoleTerms t = raw_terms(theta, mono.height, mono.ground_radius, mono.current_model,
                              ctx.wavenumber(), integrate);
  t.direct *= prefactor;
  t.ground *= prefactor * ground_current_constant();
  return t;
}

MonopolePattern::MonopolePattern(const MonopoleSpec& mono, const FrequencyContext& ctx,
                                 const QuadratureSpec& quad)
    : MonopolePattern(mono, ctx, adaptive_integrator(quad)) {}

MonopolePattern::MonopolePattern(const MonopoleSpec& mono, const FrequencyContext& ctx,
                                 Integrator integrate, std::complex<double> prefactor)
    : mono_(mono), ctx_(ctx), integrate_(std::move(integrate)), prefactor_(prefactor) {
  mono_.validate();
  double best = -1.0;
  for (int i = 0; i * kMonopoleNormalizationStepDeg <= 90.0; ++i) {
    const double theta = deg_to_rad(i * kMonopoleNormalizationStepDeg);
    const std::complex<double> v = raw(theta);
    if (std::abs(v) > best) {
      best = std::abs(v);
      reference_ = v;
      peak_theta_ = theta;
    }
  }
  if (!(best > 0.0)) throw DomainError("monopole pattern vanishes on the normalization grid");
}

std::complex<double> MonopolePattern::raw(double theta) const {
  return monopole_terms(theta, mono_, ctx_, integrate_, prefactor_).sum();
}

std::complex<double> MonopolePattern::operator()(double theta) const {
  if (!(theta >= 0.0 && theta <= 0.5 * kPi + 1e-12))
    throw DomainError("monopole_pattern: theta must lie in [0, pi/2]");
  return raw(theta) / reference_;
}

std::complex<double> MonopolePattern::in_cut(double theta) const {
  if (!(std::fabs(theta) <= 0.5 * kPi + 1e-12))
    throw DomainError("monopole_pattern: theta must lie in [-pi/2, pi/2]");
  return raw(theta) / reference_;
}

std::complex<double> monopole_pattern(double theta, const MonopoleSpec& mono,
                                      const FrequencyContext& ctx, const QuadratureSpec& quad) {
  return MonopolePattern(mono, ctx, quad)(theta);
}

}  // namespace tiltbeam
