#pragma once

#include <span>
#include <vector>

#include "tiltbeam/arrayfactor.hpp"
#include "tiltbeam/radiators.hpp"
#include "tiltbeam/synthesis.hpp"

namespace tiltbeam {

struct ScanReport {
  double commanded_deg = 0.0;
  double achieved_deg = 0.0;
  double pointing_error_deg = 0.0;  // |achieved - commanded|
  double scan_loss_db = 0.0;        // boresight peak (dB) - scanned peak (dB)
  double sll_db = kNoSidelobe;
};

/// 1x4 sub-array along x with half-wavelength pitch at the given frequency.
ArrayLayout default_scan_layout(const FrequencyContext& ctx);

/// Element pattern times the steered array factor, scaled so that the
/// boresight-steered product peaks at 1. Non-boresight cuts are therefore
/// not flagged normalized and their peak reads directly as scan loss.
/// Scans in the same elevation cut as the element pattern.
PatternCut scan_pattern(const PatternCut& element, const ArrayLayout& layout,
                        const SteeringCommand& cmd, const FrequencyContext& ctx);

/// One report per (cut, command) pair, losses relative to the boresight
/// command (theta0 == 0), which must be present; otherwise ConfigError.
std::vector<ScanReport> scan_report(std::span<const PatternCut> cuts,
                                    std::span<const SteeringCommand> commands);

}  // namespace tiltbeam
