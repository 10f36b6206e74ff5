#include "tiltbeam/circuitmodel.hpp"

#include <array>
#include <cmath>

#include "tiltbeam/constants.hpp"
#include "tiltbeam/errors.hpp"

namespace tiltbeam {

namespace {

struct Preset {
  std::string_view name;
  double eps_r;
  double tan_delta;
};

// Values at 10 GHz. RO5880 and F4B are datasheet figures.
constexpr std::array<Preset, 5> kPresets{{
    {"FR4", 4.4, 0.02},
    {"TU768", 4.3, 0.023},
    {"RO4003", 3.55, 0.0027},
    {"RO5880", 2.2, 0.0009},
    {"F4B", 2.65, 0.002},
}};

constexpr double kPresetThickness = 1.2e-3;

void require_positive_frequency(double f, const char* what) {
  if (!(f > 0.0) || !std::isfinite(f)) throw DomainError(std::string(what) + ": frequency must be > 0");
}

}  // namespace

void SubstrateSpec::validate() const {
  if (!(eps_r >= 1.0)) throw DomainError("substrate " + name + ": eps_r must be >= 1");
  if (!(tan_delta >= 0.0)) throw DomainError("substrate " + name + ": tan_delta must be >= 0");
  if (!(thickness > 0.0)) throw DomainError("substrate " + name + ": thickness must be > 0");
}

SubstrateSpec substrate_preset(std::string_view name) {
  for (const Preset& p : kPresets)
    if (p.name == name) return {std::string(p.name), p.eps_r, p.tan_delta, kPresetThickness};
  throw DomainError("unknown substrate preset '" + std::string(name) + "'");
}

std::vector<std::string> substrate_preset_names() {
  std::vector<std::string> names;
  for (const Preset& p : kPresets) names.emplace_back(p.name);
  return names;
}

void MicrostripSpec::validate() const {
  if (!(width > 0.0)) throw DomainError("microstrip width must be > 0");
  if (!(length > 0.0)) throw DomainError("microstrip length must be > 0");
  if (!(conductivity > 0.0)) throw DomainError("microstrip conductivity must be > 0");
  if (!(roughness >= 0.0)) throw DomainError("microstrip roughness must be >= 0");
  substrate.validate();
}

double effective_permittivity(const MicrostripSpec& strip) {
  strip.validate();
  const double er = strip.substrate.eps_r;
  const double h_over_w = strip.substrate.thickness / strip.width;
  return 0.5 * (er + 1.0) + 0.5 * (er - 1.0) / std::sqrt(1.0 + 10.0 * h_over_w);
}

double characteristic_impedance(const MicrostripSpec& strip) {
  const double eeff = effective_permittivity(strip);
  const double u = strip.width / strip.substrate.thickness;
  if (u >= 1.0)
    return kFreeSpaceImpedance / (std::sqrt(eeff) * (u + 1.393 + 0.667 * std::log(u + 1.444)));
  return kFreeSpaceImpedance / (2.0 * kPi * std::sqrt(eeff)) * std::log(8.0 / u + u / 4.0);
}

double half_wave_resonance(double length, double eps) {
  if (!(length > 0.0)) throw DomainError("half_wave_resonance: length must be > 0");
  if (!(eps >= 1.0)) throw DomainError("half_wave_resonance: permittivity must be >= 1");
  return kSpeedOfLight / (2.0 * length * std::sqrt(eps));
}

double dielectric_attenuation(const SubstrateSpec& sub, double eps_eff, double frequency) {
  sub.validate();
  require_positive_frequency(frequency, "dielectric_attenuation");
  if (!(eps_eff >= 1.0 && eps_eff <= sub.eps_r))
    throw DomainError("dielectric_attenuation: eps_eff must lie in [1, eps_r]");
  const double k0 = 2.0 * kPi * frequency / kSpeedOfLight;
  // Filling factor (eeff - 1)/(er - 1); a vacuum-like substrate is fully filled.
  const double filling = sub.eps_r > 1.0 ? (eps_eff - 1.0) / (sub.eps_r - 1.0) : 1.0;
  const double nepers = k0 * sub.eps_r * filling * sub.tan_delta / (2.0 * std::sqrt(eps_eff));
  return nepers * kNepersToDb;
}

double skin_depth(double frequency, double conductivity) {
  require_positive_frequency(frequency, "skin_depth");
  if (!(conductivity > 0.0)) throw DomainError("skin_depth: conductivity must be > 0");
  return 1.0 / std::sqrt(kPi * frequency * kMu0 * conductivity);
}

double roughness_factor(double roughness, double skin_depth) {
  if (!(roughness >= 0.0)) throw DomainError("roughness_factor: roughness must be >= 0");
  if (!(skin_depth > 0.0)) throw DomainError("roughness_factor: skin depth must be > 0");
  const double ratio = roughness / skin_depth;
  return 1.0 + 2.0 / kPi * std::atan(1.4 * ratio * ratio);
}

double conductor_attenuation(const MicrostripSpec& strip, double frequency) {
  strip.validate();
  require_positive_frequency(frequency, "conductor_attenuation");
  const double omega = 2.0 * kPi * frequency;
  const double surface_resistance = std::sqrt(omega * kMu0 / (2.0 * strip.conductivity));
  const double smooth = surface_resistance / (characteristic_impedance(strip) * strip.width);
  const double k = roughness_factor(strip.roughness, skin_depth(frequency, strip.conductivity));
  return smooth * k * kNepersToDb;
}

double plane_wave_attenuation(const SubstrateSpec& sub, double frequency, double path_length) {
  sub.validate();
  require_positive_frequency(frequency, "plane_wave_attenuation");
  if (!(path_length > 0.0)) throw DomainError("plane_wave_attenuation: path length must be > 0");
  const double nepers_per_m = kPi * frequency * std::sqrt(sub.eps_r) * sub.tan_delta / kSpeedOfLight;
  return nepers_per_m * path_length * kNepersToDb;
}

LossBudget loss_budget(const MicrostripSpec& strip, double frequency) {
  strip.validate();
  require_positive_frequency(frequency, "loss_budget");
  LossBudget b;
  b.alpha_c = conductor_attenuation(strip, frequency) * strip.length;
  b.alpha_d = dielectric_attenuation(strip.substrate, effective_permittivity(strip), frequency) *
              strip.length;
  b.alpha_r = 0.0;
  b.alpha_l = 0.0;
  b.total = b.alpha_c + b.alpha_d + b.alpha_r + b.alpha_l;
  b.note =
      "radiation loss neglected for a thin feed substrate; leakage loss neglected for a "
      "high-resistivity PCB dielectric";
  return b;
}

}  // namespace tiltbeam
