// Acceptance suite: one PASS/FAIL line per criterion.
//
//   acceptance                 exit status = number of failing criteria
//   acceptance --expect-red L  exit 0 iff exactly the criteria in the
//                              comma-separated list L fail
//
// Tolerances are pinned here, not read from anywhere else.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <functional>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "../support/gauss_legendre.hpp"
#include "tiltbeam/arrayfactor.hpp"
#include "tiltbeam/circuitmodel.hpp"
#include "tiltbeam/commands.hpp"
#include "tiltbeam/constants.hpp"
#include "tiltbeam/radiators.hpp"
#include "tiltbeam/scanstudy.hpp"
#include "tiltbeam/synthesis.hpp"

using namespace tiltbeam;
namespace fs = std::filesystem;

namespace {

constexpr double kAfTol = 1e-12;
constexpr double kAfMaxSeconds = 1.0;
constexpr double kSlotTol = 1e-12;
constexpr double kNullTol = 1e-12;
constexpr double kPeakTol = 1e-12;
constexpr double kOracleRelTol = 1e-6;
constexpr double kScalingTol = 1e-12;
constexpr double kTiltLowDeg = 35.0;
constexpr double kTiltHighDeg = 60.0;
constexpr double kSweepMaxSeconds = 30.0;
constexpr double kBestRatioLow = 0.1;
constexpr double kBestRatioHigh = 0.6;
constexpr double kTiltSpreadDeg = 10.0;
constexpr double kStabilityDeg = 10.0;
constexpr double kRawResonanceGhz = 36.12;
constexpr double kRawResonanceTolGhz = 0.01;
constexpr double kEffResonanceGhz = 42.0;
constexpr double kEffResonanceRel = 0.10;
constexpr double kPlaneWaveDeltaDb = 1.5;
constexpr double kRoughnessDeltaDb = 1.0;
constexpr double kBoresightPointingDeg = 5.0;
constexpr double kScannedPointingDeg = 8.0;

struct Outcome {
  bool pass;
  std::string detail;
};

std::string fmt(const char* f, double a) {
  char buf[160];
  std::snprintf(buf, sizeof buf, f, a);
  return buf;
}

template <typename... T>
std::string fmt(const char* f, T... args) {
  char buf[400];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

Integrator gl64_integrator() {
  return [](const ComplexIntegrand& f, double a, double b) {
    return testsupport::gl64().integrate(f, a, b, 8);
  };
}

Outcome criterion1() {
  const auto t0 = std::chrono::steady_clock::now();
  const ArrayLayout layout{1, 2, 0.0, 1.2e-3};
  double worst = 0.0;
  for (double f : {26e9, 32.4e9, 41e9}) {
    const double lambda = FrequencyContext(f).wavelength();
    for (double deg = -90.0; deg <= 90.0; deg += 0.25)
      worst = std::max(worst, std::fabs(array_factor(layout, deg_to_rad(deg), 0.0, lambda) - 1.0));
  }
  const double secs = seconds_since(t0);
  return {worst <= kAfTol && secs < kAfMaxSeconds, fmt("max |AF-1| = %.2e, %.3f s", worst, secs)};
}

Outcome criterion2() {
  const double e0 = std::fabs(slot_pattern(0.0) - 0.0);
  const double e30 = std::fabs(slot_pattern(deg_to_rad(30.0)) - std::sqrt(2.0) / 2.0);
  const double e90 = std::fabs(slot_pattern(deg_to_rad(90.0)) - 1.0);
  const double worst = std::max({e0, e30, e90});
  return {worst <= kSlotTol, fmt("max error %.2e at {0, 30, 90} deg", worst)};
}

Outcome criterion3() {
  double worst_null = 0.0, worst_peak = 0.0, worst_oracle = 0.0;
  for (double f : {26e9, 32.4e9, 41e9}) {
    const FrequencyContext ctx(f);
    for (double h : {0.25, 0.375, 0.5}) {
      const MonopoleSpec mono{h * ctx.wavelength(), 5e-3, CurrentModel::Sinusoidal};
      const MonopolePattern pattern(mono, ctx);
      const MonopolePattern oracle(mono, ctx, gl64_integrator());
      worst_null = std::max(worst_null, std::abs(pattern(0.0)));
      double peak = 0.0;
      for (int i = 0; i * kMonopoleNormalizationStepDeg <= 90.0; ++i)
        peak = std::max(peak, std::abs(pattern(deg_to_rad(i * kMonopoleNormalizationStepDeg))));
      worst_peak = std::max(worst_peak, std::fabs(peak - 1.0));
      for (int deg = 5; deg <= 90; deg += 5) {
        const auto a = pattern(deg_to_rad(deg));
        const auto r = oracle(deg_to_rad(deg));
        worst_oracle = std::max(worst_oracle, std::abs(a - r) / std::abs(r));
      }
    }
  }
  const bool pass = worst_null <= kNullTol && worst_peak <= kPeakTol && worst_oracle <= kOracleRelTol;
  return {pass, fmt("null %.2e, |peak-1| %.2e, GL64 rel err %.2e", worst_null, worst_peak, worst_oracle)};
}

Outcome criterion4() {
  const auto grid = theta_grid(-90.0, 90.0, 0.25);
  const FrequencyContext ctx(32.4e9);
  const ElementFields f = element_fields(grid, Geometry{}, ctx);

  bool exact = true;
  const PatternCut slot_only = combine(f, 1.0, 0.0, false);
  const PatternCut mono_only = combine(f, 0.0, 1.0, false);
  for (std::size_t i = 0; i < grid.size(); ++i) {
    exact = exact && slot_only.values[i] == std::complex<double>(f.slot[i]);
    exact = exact && mono_only.values[i] == f.monopole[i];
  }

  const PatternCut base = combine(f, ExcitationWeights{1.0, 0.3});
  const PatternMetrics mb = pattern_metrics(base);
  double worst = 0.0;
  for (double scale : {1e-3, 0.5, 2.0, 17.0, 1e4}) {
    const PatternCut s = combine(f, ExcitationWeights{scale, 0.3 * scale});
    for (std::size_t i = 0; i < grid.size(); ++i) worst = std::max(worst, std::abs(s.values[i] - base.values[i]));
    const PatternMetrics ms = pattern_metrics(s);
    worst = std::max({worst, std::fabs(ms.tilt_deg - mb.tilt_deg), std::fabs(ms.sll_db - mb.sll_db),
                      std::fabs(ms.beamwidth_deg - mb.beamwidth_deg)});
  }
  return {exact && worst <= kScalingTol,
          fmt("degenerate cases %s, max scaling deviation %.2e", exact ? "exact" : "NOT exact", worst)};
}

Outcome criterion5() {
  const auto t0 = std::chrono::steady_clock::now();
  std::vector<double> ratios;
  for (int i = 1; i <= 40; ++i) ratios.push_back(0.05 * i);
  const RatioSweep sweep =
      ratio_sweep(ratios, theta_grid(-90.0, 90.0, 0.25), Geometry{}, FrequencyContext(32.4e9));
  double best_tilt = -1e9, best_ratio = 0.0;
  bool hit = false;
  double hit_ratio = 0.0, hit_tilt = 0.0;
  for (const auto& r : sweep.rows) {
    if (r.metrics.tilt_deg > best_tilt) {
      best_tilt = r.metrics.tilt_deg;
      best_ratio = r.ratio;
    }
    if (!hit && r.metrics.tilt_deg >= kTiltLowDeg && r.metrics.tilt_deg <= kTiltHighDeg) {
      hit = true;
      hit_ratio = r.ratio;
      hit_tilt = r.metrics.tilt_deg;
    }
  }
  const double secs = seconds_since(t0);
  return {hit && secs < kSweepMaxSeconds,
          hit ? fmt("first in-range ratio %.2f gives tilt %.2f deg (max %.2f at %.2f), %.1f s", hit_ratio,
                    hit_tilt, best_tilt, best_ratio, secs)
              : fmt("no ratio in [0.05, 2] reaches [35, 60] deg (max %.2f at %.2f), %.1f s", best_tilt,
                    best_ratio, secs)};
}

Outcome criterion6() {
  std::vector<double> ratios;
  for (int i = 1; i <= 10; ++i) ratios.push_back(0.1 * i);
  const RatioSweep sweep =
      ratio_sweep(ratios, theta_grid(-90.0, 90.0, 0.25), Geometry{}, FrequencyContext(32.4e9));
  double lo = 1e9, hi = -1e9;
  for (const auto& r : sweep.rows) {
    lo = std::min(lo, r.metrics.tilt_deg);
    hi = std::max(hi, r.metrics.tilt_deg);
  }
  const bool pass = sweep.best_ratio >= kBestRatioLow - 1e-12 && sweep.best_ratio <= kBestRatioHigh + 1e-12 &&
                    hi - lo < kTiltSpreadDeg;
  return {pass, fmt("min-SLL ratio %.2f (%.2f dB), tilt spread %.2f deg", sweep.best_ratio, sweep.best_sll_db,
                    hi - lo)};
}

Outcome criterion7() {
  const std::vector<double> freqs{26e9, 31e9, 36e9, 41e9};
  const StabilityReport r =
      beam_stability(freqs, theta_grid(-90.0, 90.0, 0.25), Geometry{}, ExcitationWeights{1.0, 0.3});
  std::string tilts;
  for (const auto& row : r.rows) tilts += fmt("%.2f ", row.metrics.tilt_deg);
  return {r.tilt_spread_deg < kStabilityDeg && r.max_tilt_deviation_deg < kStabilityDeg,
          "tilts " + tilts + fmt("deg, spread %.2f, max dev from 32.4 GHz %.2f", r.tilt_spread_deg,
                                 r.max_tilt_deviation_deg)};
}

Outcome criterion8() {
  const MicrostripSpec strip;
  const double raw = half_wave_resonance(strip.length, 4.4) / 1e9;
  const double eff = half_wave_resonance(strip.length, effective_permittivity(strip)) / 1e9;
  const bool raw_ok = std::fabs(raw - kRawResonanceGhz) <= kRawResonanceTolGhz;
  const bool eff_ok = std::fabs(eff - kEffResonanceGhz) <= kEffResonanceRel * kEffResonanceGhz;
  return {raw_ok && eff_ok,
          fmt("raw eps 4.4: %.4f GHz (target 36.12 +- 0.01: %s); effective: %.3f GHz (42 +- 10%%: %s)", raw,
              raw_ok ? "ok" : "MISS", eff, eff_ok ? "ok" : "MISS")};
}

Outcome criterion9() {
  SubstrateSpec fr4 = substrate_preset("FR4");
  fr4.tan_delta = 0.1;
  const double plane_delta =
      plane_wave_attenuation(fr4, 50e9, 1.2e-3) - plane_wave_attenuation(substrate_preset("RO4003"), 50e9, 1.2e-3);

  MicrostripSpec line;
  line.length = 10e-3;
  MicrostripSpec rough = line;
  line.roughness = 1e-6;
  rough.roughness = 10e-6;
  const double rough_delta = std::fabs(loss_budget(rough, 40e9).total - loss_budget(line, 40e9).total);

  bool identity = true;
  for (const auto& name : substrate_preset_names())
    for (double f = 1e9; f <= 60e9; f += 1e9) {
      MicrostripSpec s;
      s.substrate = substrate_preset(name);
      s.substrate.thickness = 0.1e-3;
      const LossBudget b = loss_budget(s, f);
      identity = identity && b.total == b.alpha_c + b.alpha_d + b.alpha_r + b.alpha_l;
    }
  return {plane_delta <= kPlaneWaveDeltaDb && rough_delta <= kRoughnessDeltaDb && identity,
          fmt("plane-wave delta %.3f dB, roughness delta %.3f dB, budget identity %s", plane_delta, rough_delta,
              identity ? "exact" : "BROKEN")};
}

Outcome criterion10() {
  const FrequencyContext ctx(32.4e9);
  const PatternCut element =
      synthesize_pattern(ExcitationWeights{1.0, 0.3}, theta_grid(-90.0, 90.0, 0.25), Geometry{}, ctx);
  const ArrayLayout layout = default_scan_layout(ctx);
  const std::vector<SteeringCommand> cmds{{deg_to_rad(-45.0)}, {0.0}, {deg_to_rad(45.0)}};
  std::vector<PatternCut> cuts;
  for (const auto& c : cmds) cuts.push_back(scan_pattern(element, layout, c, ctx));
  const auto rows = scan_report(cuts, cmds);
  const auto& m45 = rows[0];
  const auto& b0 = rows[1];
  const auto& p45 = rows[2];
  const bool pointing = b0.pointing_error_deg <= kBoresightPointingDeg &&
                        m45.pointing_error_deg <= kScannedPointingDeg &&
                        p45.pointing_error_deg <= kScannedPointingDeg;
  const bool loss = b0.scan_loss_db == 0.0 && m45.scan_loss_db > 0.0 && p45.scan_loss_db > 0.0;
  return {pointing && loss,
          fmt("pointing err -45/0/+45: %.2f/%.2f/%.2f deg; scan loss %.2f/%.2f/%.2f dB", m45.pointing_error_deg,
              b0.pointing_error_deg, p45.pointing_error_deg, m45.scan_loss_db, b0.scan_loss_db, p45.scan_loss_db)};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

Outcome criterion11() {
  const fs::path root = fs::temp_directory_path() / "tiltbeam_acceptance_determinism";
  fs::remove_all(root);
  const RunConfig config = parse_config("{}");
  std::size_t compared = 0;
  std::string mismatch;
  for (const auto& cmd : command_names()) {
    const fs::path a = root / "a" / cmd, b = root / "b" / cmd;
    std::ostringstream err;
    if (run_command(cmd, config, {a, true}, err) != ExitCode::Ok ||
        run_command(cmd, config, {b, true}, err) != ExitCode::Ok) {
      mismatch = cmd + " failed: " + err.str();
      break;
    }
    for (const auto& e : fs::directory_iterator(a)) {
      ++compared;
      if (slurp(e.path()) != slurp(b / e.path().filename())) mismatch = e.path().filename().string();
    }
  }
  fs::remove_all(root);
  return {mismatch.empty() && compared > 0,
          mismatch.empty() ? fmt("%zu artifacts byte-identical across two runs", compared)
                           : "mismatch: " + mismatch};
}

std::set<int> parse_list(const char* text) {
  std::set<int> out;
  std::stringstream in(text);
  for (std::string item; std::getline(in, item, ',');)
    if (!item.empty()) out.insert(std::stoi(item));
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  std::optional<std::set<int>> expected_red;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--expect-red") == 0 && i + 1 < argc) expected_red = parse_list(argv[++i]);
  }

  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"array-factor identity", criterion1},
      {"slot pattern analytics", criterion2},
      {"monopole null and normalization", criterion3},
      {"superposition degeneracy", criterion4},
      {"tilt at band center", criterion5},
      {"ratio-sweep sidelobe behavior", criterion6},
      {"beam stability", criterion7},
      {"resonance consistency", criterion8},
      {"loss trends", criterion9},
      {"scan study", criterion10},
      {"determinism", criterion11},
  };

  std::set<int> red;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const int id = static_cast<int>(i) + 1;
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    if (!o.pass) red.insert(id);
    std::printf("%s  %2d  %-32s %s\n", o.pass ? "PASS" : "FAIL", id, criteria[i].first, o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%zu/%zu criteria pass\n", criteria.size() - red.size(), criteria.size());

  if (!expected_red) return static_cast<int>(red.size());
  if (red == *expected_red) {
    std::printf("failing set matches the documented known-red list\n");
    return 0;
  }
  std::printf("failing set differs from the documented known-red list\n");
  return 1;
}
