#include "tiltbeam/synthesis.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "tiltbeam/constants.hpp"
#include "tiltbeam/detail/parallel.hpp"
#include "tiltbeam/errors.hpp"

namespace tiltbeam {

namespace {

constexpr double kAngleSlack = 1e-12;
constexpr double kMaxMetricSpacingDeg = 0.5;

}  // namespace

void ExcitationWeights::validate() const {
  if (!(slot >= 0.0) || !(monopole >= 0.0) || !std::isfinite(slot) || !std::isfinite(monopole))
    throw DomainError("excitation weights must be finite and >= 0");
  if (slot == 0.0 && monopole == 0.0) throw DomainError("excitation weights must not both be zero");
}

void PatternCut::validate() const {
  if (theta.empty()) throw DomainError("pattern cut is empty");
  if (theta.size() != values.size()) throw DomainError("pattern cut grid and values differ in length");
  for (std::size_t i = 0; i < theta.size(); ++i) {
    if (!(std::fabs(theta[i]) <= 0.5 * kPi + kAngleSlack))
      throw DomainError("pattern cut angle outside [-90, 90] deg");
    if (i > 0 && !(theta[i] > theta[i - 1]))
      throw DomainError("pattern cut grid must be strictly increasing");
  }
  if (normalized) {
    double peak = 0.0;
    for (const auto& v : values) peak = std::max(peak, std::abs(v));
    if (std::fabs(peak - 1.0) > 1e-9) throw DomainError("normalized pattern cut must peak at 1");
  }
}

void PatternCut::normalize() {
  double peak = 0.0;
  for (const auto& v : values) peak = std::max(peak, std::abs(v));
  if (!(peak > 0.0)) throw DomainError("cannot normalize an all-zero pattern");
  for (auto& v : values) v /= peak;
  normalized = true;
}

std::vector<double> theta_grid(double start_deg, double stop_deg, double step_deg) {
  if (!(step_deg > 0.0)) throw DomainError("step must be > 0");
  if (!(stop_deg >= start_deg)) throw DomainError("stop must be >= start");
  const auto n = static_cast<std::size_t>(std::floor((stop_deg - start_deg) / step_deg + 1e-9)) + 1;
  std::vector<double> grid(n);
  for (std::size_t i = 0; i < n; ++i) grid[i] = deg_to_rad(start_deg + static_cast<double>(i) * step_deg);
  return grid;
}

ElementFields element_fields(std::span<const double> grid, const Geometry& geometry,
                             const FrequencyContext& ctx, const QuadratureSpec& quad) {
  if (grid.empty()) throw DomainError("theta grid is empty");
  geometry.slot.validate();
  geometry.array.validate();
  const MonopolePattern monopole(geometry.monopole, ctx, quad);

  ElementFields fields;
  fields.theta.assign(grid.begin(), grid.end());
  fields.slot.resize(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) fields.slot[i] = slot_pattern(0.5 * kPi - grid[i]);
  fields.monopole = detail::parallel_map(grid.size(), [&](std::size_t i) {
    const double af = array_factor(geometry.array, grid[i], 0.0, ctx.wavelength());
    return monopole.in_cut(grid[i]) * af;
  });
  return fields;
}

PatternCut combine(const ElementFields& fields, std::complex<double> s1, std::complex<double> s2,
                   bool normalize) {
  PatternCut cut;
  cut.theta = fields.theta;
  cut.values.resize(fields.theta.size());
  for (std::size_t i = 0; i < cut.values.size(); ++i)
    cut.values[i] = s1 * fields.slot[i] + s2 * fields.monopole[i];
  if (normalize) cut.normalize();
  return cut;
}

PatternCut combine(const ElementFields& fields, const ExcitationWeights& weights, bool normalize) {
  weights.validate();
  // Rescale so the larger weight is exactly 1; a common factor then only
  // survives as rounding in the smaller weight.
  const double top = std::max(weights.slot, weights.monopole);
  return combine(fields, std::complex<double>(weights.slot / top),
                 std::complex<double>(weights.monopole / top), normalize);
}

PatternCut synthesize_pattern(const ExcitationWeights& weights, std::span<const double> grid,
                              const Geometry& geometry, const FrequencyContext& ctx,
                              const QuadratureSpec& quad) {
  weights.validate();
  PatternCut cut = combine(element_fields(grid, geometry, ctx, quad), weights);
  cut.validate();
  return cut;
}

PatternMetrics pattern_metrics(const PatternCut& cut) {
  cut.validate();
  if (!cut.normalized) throw DomainError("pattern_metrics: cut must be normalized");
  const std::size_t n = cut.size();
  for (std::size_t i = 1; i < n; ++i) {
    if (cut.theta[i] - cut.theta[i - 1] > deg_to_rad(kMaxMetricSpacingDeg) + kAngleSlack)
      throw DomainError("pattern_metrics: grid spacing must be <= 0.5 deg");
  }

  std::vector<double> mag(n);
  for (std::size_t i = 0; i < n; ++i) mag[i] = std::abs(cut.values[i]);

  std::size_t peak = 0;
  for (std::size_t i = 1; i < n; ++i)
    if (mag[i] > mag[peak]) peak = i;

  PatternMetrics m;
  m.peak_linear = mag[peak];
  double tilt = cut.theta[peak];
  if (peak > 0 && peak + 1 < n) {
    const double y0 = mag[peak - 1], y1 = mag[peak], y2 = mag[peak + 1];
    const double den = y0 - 2.0 * y1 + y2;
    if (den < 0.0) {
      const double h = 0.5 * (cut.theta[peak + 1] - cut.theta[peak - 1]);
      tilt += 0.5 * (y0 - y2) / den * h;
    }
  }
  m.tilt_deg = rad_to_deg(tilt);

  // Main lobe: from the peak down to the first minimum on either side.
  std::size_t lo = peak;
  while (lo > 0 && mag[lo - 1] <= mag[lo]) --lo;
  std::size_t hi = peak;
  while (hi + 1 < n && mag[hi + 1] <= mag[hi]) ++hi;

  double side = 0.0;
  bool found = false;
  for (std::size_t j = 0; j < n; ++j) {
    if (j >= lo && j <= hi) continue;
    const bool interior_max = j > 0 && j + 1 < n && mag[j] >= mag[j - 1] && mag[j] >= mag[j + 1];
    const bool edge_max = (j == 0 && n > 1 && mag[0] > mag[1]) ||
                          (j + 1 == n && n > 1 && mag[j] > mag[j - 1]);
    if (interior_max || edge_max) {
      if (!found || mag[j] > side) side = mag[j];
      found = true;
    }
  }
  m.sll_db = found && side > 0.0 ? 20.0 * std::log10(side / mag[peak]) : kNoSidelobe;

  const double level = mag[peak] * std::pow(10.0, -3.0 / 20.0);
  auto crossing = [&](std::size_t below, std::size_t above) {
    const double t = (level - mag[below]) / (mag[above] - mag[below]);
    return cut.theta[below] + t * (cut.theta[above] - cut.theta[below]);
  };
  std::size_t l = peak;
  while (l > 0 && mag[l - 1] >= level) --l;
  std::size_t r = peak;
  while (r + 1 < n && mag[r + 1] >= level) ++r;
  const bool left_found = l > 0;
  const bool right_found = r + 1 < n;
  const double left = left_found ? crossing(l - 1, l) : cut.theta[0];
  const double right = right_found ? crossing(r + 1, r) : cut.theta[n - 1];
  m.beamwidth_deg = rad_to_deg(right - left);
  m.beamwidth_one_sided = !(left_found && right_found);
  return m;
}

RatioSweep ratio_sweep(std::span<const double> ratios, std::span<const double> grid,
                       const Geometry& geometry, const FrequencyContext& ctx,
                       const QuadratureSpec& quad) {
  if (ratios.empty()) throw DomainError("ratio_sweep: no ratios given");
  for (double r : ratios)
    if (!(r > 0.0) || !std::isfinite(r)) throw DomainError("ratio_sweep: ratios must be > 0");

  const ElementFields fields = element_fields(grid, geometry, ctx, quad);
  RatioSweep sweep;
  sweep.rows = detail::parallel_map(ratios.size(), [&](std::size_t i) {
    return RatioRow{ratios[i], pattern_metrics(combine(fields, ExcitationWeights{1.0, ratios[i]}))};
  });
  sweep.best_ratio = sweep.rows.front().ratio;
  sweep.best_sll_db = sweep.rows.front().metrics.sll_db;
  for (const RatioRow& row : sweep.rows) {
    if (row.metrics.sll_db < sweep.best_sll_db) {
      sweep.best_ratio = row.ratio;
      sweep.best_sll_db = row.metrics.sll_db;
    }
  }
  return sweep;
}

StabilityReport beam_stability(std::span<const double> frequencies, std::span<const double> grid,
                               const Geometry& geometry, const ExcitationWeights& weights,
                               const QuadratureSpec& quad, double center_frequency) {
  weights.validate();
  if (frequencies.empty()) throw DomainError("beam_stability: no frequencies given");
  auto check_band = [](double f) {
    if (!(f >= kBandLowHz && f <= kBandHighHz)) {
      std::ostringstream msg;
      msg << "beam_stability: frequency " << f / 1e9 << " GHz outside [20, 45] GHz";
      throw DomainError(msg.str());
    }
  };
  for (double f : frequencies) check_band(f);
  check_band(center_frequency);

  auto metrics_at = [&](double f) {
    return pattern_metrics(synthesize_pattern(weights, grid, geometry, FrequencyContext(f), quad));
  };

  StabilityReport report;
  report.rows = detail::parallel_map(frequencies.size(), [&](std::size_t i) {
    return StabilityRow{frequencies[i], metrics_at(frequencies[i])};
  });
  report.center_frequency = center_frequency;
  report.center_tilt_deg = metrics_at(center_frequency).tilt_deg;
  double lo = report.rows.front().metrics.tilt_deg;
  double hi = lo;
  for (const StabilityRow& row : report.rows) {
    report.max_tilt_deviation_deg = std::max(
        report.max_tilt_deviation_deg, std::fabs(row.metrics.tilt_deg - report.center_tilt_deg));
    lo = std::min(lo, row.metrics.tilt_deg);
    hi = std::max(hi, row.metrics.tilt_deg);
  }
  report.tilt_spread_deg = hi - lo;
  return report;
}

}  // namespace tiltbeam
