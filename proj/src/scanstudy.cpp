#include "tiltbeam/scanstudy.hpp"

#include <algorithm>
#include <cmath>

#include "tiltbeam/constants.hpp"
#include "tiltbeam/errors.hpp"

namespace tiltbeam {

namespace {

double peak_magnitude(const PatternCut& cut) {
  double peak = 0.0;
  for (const auto& v : cut.values) peak = std::max(peak, std::abs(v));
  return peak;
}

std::vector<std::complex<double>> steered_product(const PatternCut& element,
                                                  const ArrayLayout& layout,
                                                  const SteeringCommand& cmd,
                                                  const FrequencyContext& ctx) {
  std::vector<std::complex<double>> out(element.size());
  for (std::size_t i = 0; i < out.size(); ++i)
    out[i] = element.values[i] *
             std::abs(steered_array_factor(layout, cmd, element.theta[i], ctx.wavelength()));
  return out;
}

}  // namespace

ArrayLayout default_scan_layout(const FrequencyContext& ctx) {
  return ArrayLayout{4, 1, 0.5 * ctx.wavelength(), 0.0};
}

PatternCut scan_pattern(const PatternCut& element, const ArrayLayout& layout,
                        const SteeringCommand& cmd, const FrequencyContext& ctx) {
  element.validate();
  if (!element.normalized) throw DomainError("scan_pattern: element pattern must be normalized");
  if (!layout.is_linear()) throw DomainError("scan_pattern: layout must be 1xN");
  cmd.validate();

  double boresight_peak = 0.0;
  for (const auto& v : steered_product(element, layout, SteeringCommand{0.0}, ctx))
    boresight_peak = std::max(boresight_peak, std::abs(v));
  if (!(boresight_peak > 0.0)) throw DomainError("scan_pattern: boresight pattern vanishes");

  PatternCut cut;
  cut.theta = element.theta;
  cut.values = steered_product(element, layout, cmd, ctx);
  for (auto& v : cut.values) v /= boresight_peak;
  cut.normalized = cmd.theta0 == 0.0;
  return cut;
}

std::vector<ScanReport> scan_report(std::span<const PatternCut> cuts,
                                    std::span<const SteeringCommand> commands) {
  if (cuts.size() != commands.size())
    throw ConfigError("scan.commands_deg", "one pattern cut is required per steering command");
  const auto bore = std::find_if(commands.begin(), commands.end(),
                                 [](const SteeringCommand& c) { return c.theta0 == 0.0; });
  if (bore == commands.end())
    throw ConfigError("scan.commands_deg", "the boresight command (0 deg) is required");
  const double boresight_db =
      20.0 * std::log10(peak_magnitude(cuts[static_cast<std::size_t>(bore - commands.begin())]));

  std::vector<ScanReport> reports;
  reports.reserve(cuts.size());
  for (std::size_t i = 0; i < cuts.size(); ++i) {
    PatternCut unit = cuts[i];
    unit.normalize();
    const PatternMetrics m = pattern_metrics(unit);
    ScanReport r;
    r.commanded_deg = rad_to_deg(commands[i].theta0);
    r.achieved_deg = m.tilt_deg;
    r.pointing_error_deg = std::fabs(r.achieved_deg - r.commanded_deg);
    r.scan_loss_db = boresight_db - 20.0 * std::log10(peak_magnitude(cuts[i]));
    r.sll_db = m.sll_db;
    reports.push_back(r);
  }
  return reports;
}

}  // namespace tiltbeam
