#pragma once

#include <complex>
#include <limits>
#include <span>
#include <vector>

#include "tiltbeam/arrayfactor.hpp"
#include "tiltbeam/radiators.hpp"
#include "tiltbeam/specfun.hpp"

namespace tiltbeam {

/// Real, in-phase excitation amplitudes of the slot and the monopole pair.
struct ExcitationWeights {
  double slot = 1.0;
  double monopole = 0.3;

  /// Both >= 0 and not both zero.
  void validate() const;

  bool operator==(const ExcitationWeights&) const = default;
};

/// Complex far field sampled along an elevation cut. Angles in radians,
/// measured from the board normal, inside [-pi/2, pi/2].
struct PatternCut {
  std::vector<double> theta;
  std::vector<std::complex<double>> values;
  bool normalized = false;

  /// Same length, non-empty, strictly increasing grid inside [-pi/2, pi/2],
  /// and unit peak magnitude when flagged normalized.
  void validate() const;

  /// Divides by the peak magnitude. Throws DomainError on an all-zero cut.
  void normalize();

  std::size_t size() const noexcept { return theta.size(); }
};

inline constexpr double kNoSidelobe = -std::numeric_limits<double>::infinity();

struct PatternMetrics {
  double tilt_deg = 0.0;       // direction of the peak
  double sll_db = kNoSidelobe; // highest secondary lobe relative to the peak, <= 0
  double beamwidth_deg = 0.0;  // -3 dB width
  double peak_linear = 0.0;
  bool beamwidth_one_sided = false;  // a -3 dB crossing is missing on one side

  bool has_sidelobe() const noexcept { return sll_db != kNoSidelobe; }
};

/// Element geometry entering the superposition.
struct Geometry {
  SlotSpec slot;
  MonopoleSpec monopole;
  ArrayLayout array;

  bool operator==(const Geometry&) const = default;
};

/// Unweighted slot and monopole-array fields on a grid, so several weightings
/// can be combined without re-running the radiation integrals.
struct ElementFields {
  std::vector<double> theta;
  std::vector<double> slot;                      // remapped slot pattern
  std::vector<std::complex<double>> monopole;    // E_m(theta) * AF(theta)
};

/// Degree grid [start, stop] with the given step, returned in radians.
/// Throws DomainError unless step > 0 and stop >= start.
std::vector<double> theta_grid(double start_deg, double stop_deg, double step_deg);

ElementFields element_fields(std::span<const double> grid, const Geometry& geometry,
                             const FrequencyContext& ctx, const QuadratureSpec& quad = {});

/// s1 * slot + s2 * monopole at every sample, optionally normalized to unit
/// peak. Complex amplitudes are accepted for phase studies.
PatternCut combine(const ElementFields& fields, std::complex<double> s1, std::complex<double> s2,
                   bool normalize = true);
PatternCut combine(const ElementFields& fields, const ExcitationWeights& weights,
                   bool normalize = true);

/// Superposition of the slot (broadside, magnetic source) and monopole pair
/// (electric source) fields sharing one phase centre, normalized to unit peak.
///
/// The slot term is the cavity-model pattern with argument (pi/2 - theta) so
/// that its peak lies on the board normal. The monopole term is
/// E_m(theta) * AF(theta, phi = 0).
PatternCut synthesize_pattern(const ExcitationWeights& weights, std::span<const double> grid,
                              const Geometry& geometry, const FrequencyContext& ctx,
                              const QuadratureSpec& quad = {});

/// Tilt, sidelobe level and -3 dB beamwidth of a normalized cut with grid
/// spacing <= 0.5 deg.
///
/// Tilt is the grid argmax (smallest angle on ties) refined by a parabola
/// through the three samples around it. The main lobe extends from the peak
/// down to the first minimum on each side; any local maximum outside it is a
/// sidelobe, including a grid end that rises above its neighbour. Without
/// one, sll_db is kNoSidelobe.
PatternMetrics pattern_metrics(const PatternCut& cut);

struct RatioRow {
  double ratio = 0.0;  // s2 / s1 with s1 = 1
  PatternMetrics metrics;
};

struct RatioSweep {
  std::vector<RatioRow> rows;
  double best_ratio = 0.0;  // lowest sll_db; first such ratio on ties
  double best_sll_db = kNoSidelobe;
};

/// Metrics for each excitation ratio s2/s1 (s1 fixed at 1). Ratios must be > 0.
RatioSweep ratio_sweep(std::span<const double> ratios, std::span<const double> grid,
                       const Geometry& geometry, const FrequencyContext& ctx,
                       const QuadratureSpec& quad = {});

struct StabilityRow {
  double frequency = 0.0;  // Hz
  PatternMetrics metrics;
};

struct StabilityReport {
  std::vector<StabilityRow> rows;
  double center_frequency = 0.0;
  double center_tilt_deg = 0.0;
  double max_tilt_deviation_deg = 0.0;  // max |tilt(f) - tilt(center)|
  double tilt_spread_deg = 0.0;         // max tilt - min tilt over rows
};

inline constexpr double kBandLowHz = 20e9;
inline constexpr double kBandHighHz = 45e9;
inline constexpr double kCenterFrequencyHz = 32.4e9;

/// Metrics per frequency at fixed geometry and weights, plus the largest
/// tilt excursion from the centre-frequency tilt. Frequencies must lie in
/// [20, 45] GHz.
StabilityReport beam_stability(std::span<const double> frequencies, std::span<const double> grid,
                               const Geometry& geometry, const ExcitationWeights& weights,
                               const QuadratureSpec& quad = {},
                               double center_frequency = kCenterFrequencyHz);

}  // namespace tiltbeam
