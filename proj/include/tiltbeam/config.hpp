#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tiltbeam/arrayfactor.hpp"
#include "tiltbeam/circuitmodel.hpp"
#include "tiltbeam/radiators.hpp"
#include "tiltbeam/specfun.hpp"
#include "tiltbeam/synthesis.hpp"

namespace tiltbeam {

// Configuration mirrors the JSON file: lengths in millimetres, frequencies
// in gigahertz, angles in degrees. The accessors on RunConfig convert to SI.

struct SlotConfig {
  double length_mm = 4.8;
  double amplitude_v_per_m = 1.0;
  bool operator==(const SlotConfig&) const = default;
};

struct MonopoleConfig {
  double height_mm = 1.2;
  double ground_radius_mm = 5.0;
  std::string current_model = "sinusoidal";
  bool operator==(const MonopoleConfig&) const = default;
};

struct ArrayConfig {
  int count_x = 1;
  int count_y = 2;
  double spacing_x_mm = 0.0;
  double spacing_y_mm = 1.2;
  bool operator==(const ArrayConfig&) const = default;
};

struct StripConfig {
  double width_mm = 0.24;
  double length_mm = 1.98;
  std::string substrate = "FR4";
  double thickness_mm = 0.1;
  double conductivity_s_per_m = 5.8e7;
  double roughness_um = 1.0;
  bool operator==(const StripConfig&) const = default;
};

struct GeometryConfig {
  SlotConfig slot;
  MonopoleConfig monopole;
  ArrayConfig array;
  StripConfig strip;
  bool operator==(const GeometryConfig&) const = default;
};

struct SubstrateOverride {
  std::optional<double> eps_r;
  std::optional<double> tan_delta;
  std::optional<double> thickness_mm;
  bool operator==(const SubstrateOverride&) const = default;
};

struct SubstratesConfig {
  std::vector<std::string> presets{"FR4", "TU768", "RO4003", "RO5880", "F4B"};
  std::map<std::string, SubstrateOverride> overrides;
  bool operator==(const SubstratesConfig&) const = default;
};

struct FrequencyGridConfig {
  double start_ghz = 26.0;
  double stop_ghz = 41.0;
  double step_ghz = 5.0;
  double center_ghz = 32.4;
  bool operator==(const FrequencyGridConfig&) const = default;
};

struct ThetaGridConfig {
  double start_deg = -90.0;
  double stop_deg = 90.0;
  double step_deg = 0.25;
  bool operator==(const ThetaGridConfig&) const = default;
};

struct WeightsConfig {
  double s1 = 1.0;
  double s2 = 0.3;
  std::vector<double> ratios{0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 1.0};
  bool operator==(const WeightsConfig&) const = default;
};

struct ScanConfig {
  int count = 4;
  std::optional<double> spacing_mm;  // unset: half a wavelength at the centre frequency
  std::vector<double> commands_deg{-45.0, 0.0, 45.0};
  bool operator==(const ScanConfig&) const = default;
};

struct LossConfig {
  double plane_wave_path_mm = 1.2;
  bool operator==(const LossConfig&) const = default;
};

struct RunConfig {
  GeometryConfig geometry;
  SubstratesConfig substrates;
  FrequencyGridConfig frequency_grid;
  ThetaGridConfig theta_grid;
  WeightsConfig weights;
  ScanConfig scan;
  LossConfig loss;
  QuadratureSpec quadrature;
  std::string output_dir = "out";

  bool operator==(const RunConfig&) const = default;

  Geometry antenna() const;
  MicrostripSpec strip() const;
  std::vector<SubstrateSpec> substrate_list() const;
  std::vector<double> frequencies_hz() const;
  double center_frequency_hz() const;
  std::vector<double> theta_radians() const;
  ExcitationWeights excitation() const;
  ArrayLayout scan_layout() const;
  std::vector<SteeringCommand> scan_commands() const;
};

/// Parses JSON text into a fully defaulted, validated config. Unknown keys
/// are rejected with their key path. Throws ParseError (1-based line and
/// column) on malformed JSON and ConfigError naming the field and the
/// violated constraint otherwise.
RunConfig parse_config(std::string_view json_text);

/// Reads and parses a JSON config file. Throws IoError if unreadable.
RunConfig load_config(const std::filesystem::path& path);

/// Every field written explicitly; parse_config(serialize_config(c)) == c.
std::string serialize_config(const RunConfig& config);

/// Throws ConfigError on the first violated constraint.
void validate_config(const RunConfig& config);

}  // namespace tiltbeam
