#pragma once

#include <numbers>

namespace tiltbeam {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kSpeedOfLight = 299792458.0;          // m/s, exact
inline constexpr double kMu0 = 1.25663706212e-6;              // H/m
inline constexpr double kFreeSpaceImpedance = 376.730313668;  // ohm
inline constexpr double kNepersToDb = 8.685889638065036;      // 20 / ln(10)

/// Observation distance used in the far-field prefactors. It cancels under
/// pattern normalization, so any positive value works.
inline constexpr double kFarFieldDistance = 1.0;  // m

inline constexpr double deg_to_rad(double deg) { return deg * kPi / 180.0; }
inline constexpr double rad_to_deg(double rad) { return rad * 180.0 / kPi; }

}  // namespace tiltbeam
