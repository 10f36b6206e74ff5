#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace tiltbeam {

/// Dielectric substrate. Constants are taken as frequency independent.
struct SubstrateSpec {
  std::string name = "FR4";
  double eps_r = 4.4;
  double tan_delta = 0.02;
  double thickness = 1.2e-3;  // m

  /// eps_r >= 1, tan_delta >= 0, thickness > 0.
  void validate() const;

  bool operator==(const SubstrateSpec&) const = default;
};

/// Built-in substrates: FR4, TU768, RO4003, RO5880, F4B (1.2 mm thick).
SubstrateSpec substrate_preset(std::string_view name);
std::vector<std::string> substrate_preset_names();

/// Microstrip feed line on a substrate.
struct MicrostripSpec {
  double width = 0.24e-3;   // m
  double length = 1.98e-3;  // m, open-ended stub length
  SubstrateSpec substrate{"FR4", 4.4, 0.02, 0.1e-3};
  double conductivity = 5.8e7;  // S/m
  double roughness = 1.0e-6;    // m, RMS

  void validate() const;

  bool operator==(const MicrostripSpec&) const = default;
};

/// Insertion-loss terms in dB. total is the plain sum of the four terms.
struct LossBudget {
  double alpha_c = 0.0;  // conductor
  double alpha_d = 0.0;  // dielectric
  double alpha_r = 0.0;  // radiation
  double alpha_l = 0.0;  // leakage
  double total = 0.0;
  std::string note;
};

/// Quasi-static effective permittivity (Schneider):
/// (er + 1)/2 + (er - 1)/2 / sqrt(1 + 10 h / w). In [1, eps_r].
double effective_permittivity(const MicrostripSpec& strip);

/// Quasi-static characteristic impedance (Hammerstad), ohm.
double characteristic_impedance(const MicrostripSpec& strip);

/// Half-wave resonance c / (2 l sqrt(eps)) of an open line. The caller
/// chooses whether eps is the substrate or the effective permittivity.
double half_wave_resonance(double length, double eps);

/// Quasi-TEM dielectric attenuation in dB/m,
/// k0 er (eeff - 1) tan(delta) / (2 sqrt(eeff) (er - 1)).
double dielectric_attenuation(const SubstrateSpec& sub, double eps_eff, double frequency);

/// Skin depth 1 / sqrt(pi f mu0 sigma), m.
double skin_depth(double frequency, double conductivity);

/// Hammerstad-Bekkadal roughness factor 1 + (2/pi) atan(1.4 (rq/delta)^2),
/// in [1, 2].
double roughness_factor(double roughness, double skin_depth);

/// Conductor attenuation Rs / (Z0 w) in dB/m, scaled by roughness_factor().
double conductor_attenuation(const MicrostripSpec& strip, double frequency);

/// Plane-wave attenuation pi f sqrt(er) tan(delta) / c over path_length, in dB.
double plane_wave_attenuation(const SubstrateSpec& sub, double frequency, double path_length);

/// Loss of the strip over its length at one frequency. Radiation and leakage
/// are set to zero for a thin, high-resistivity substrate; `note` says so.
LossBudget loss_budget(const MicrostripSpec& strip, double frequency);

}  // namespace tiltbeam
