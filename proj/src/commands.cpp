#include "tiltbeam/commands.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>

#include "tiltbeam/circuitmodel.hpp"
#include "tiltbeam/constants.hpp"
#include "tiltbeam/errors.hpp"
#include "tiltbeam/scanstudy.hpp"
#include "tiltbeam/synthesis.hpp"

namespace tiltbeam {

namespace {

// Name of the operation in progress, reported when quadrature fails.
thread_local std::string g_operation;

template <typename Fn>
auto step(const char* name, Fn&& fn) {
  g_operation = name;
  return fn();
}

double to_db(double mag) { return mag > 0.0 ? 20.0 * std::log10(mag) : kNoSidelobe; }

std::string svg_title(const std::string& what, double frequency_hz) {
  return what + " at " + format_number(frequency_hz / 1e9) + " GHz";
}

std::vector<Artifact> pattern_artifacts(const RunConfig& c, bool svg) {
  const FrequencyContext ctx(c.center_frequency_hz());
  const auto grid = c.theta_radians();
  const PatternCut cut = step("synthesize_pattern", [&] {
    return synthesize_pattern(c.excitation(), grid, c.antenna(), ctx, c.quadrature);
  });
  const PatternMetrics m = step("pattern_metrics", [&] { return pattern_metrics(cut); });

  CsvTable table({"theta_deg", "re", "im", "mag_db"});
  for (std::size_t i = 0; i < cut.size(); ++i)
    table.add_row({rad_to_deg(grid[i]), cut.values[i].real(), cut.values[i].imag(),
                   to_db(std::abs(cut.values[i]))});
  CsvTable metrics({"frequency_ghz", "s1", "s2", "tilt_deg", "sll_db", "beamwidth_deg",
                    "beamwidth_one_sided"});
  metrics.add_row({ctx.frequency() / 1e9, c.weights.s1, c.weights.s2, m.tilt_deg, m.sll_db,
                   m.beamwidth_deg, m.beamwidth_one_sided ? 1.0 : 0.0});

  std::vector<Artifact> out{{"pattern.csv", table.str()}, {"pattern_metrics.csv", metrics.str()}};
  if (svg) out.push_back({"pattern.svg", render_polar_svg(cut, m, svg_title("pattern", ctx.frequency()))});
  return out;
}

std::vector<Artifact> ratio_sweep_artifacts(const RunConfig& c, bool) {
  const FrequencyContext ctx(c.center_frequency_hz());
  const auto grid = c.theta_radians();
  const RatioSweep sweep = step("ratio_sweep", [&] {
    return ratio_sweep(c.weights.ratios, grid, c.antenna(), ctx, c.quadrature);
  });
  CsvTable table({"row", "ratio", "tilt_deg", "sll_db", "beamwidth_deg"});
  for (std::size_t i = 0; i < sweep.rows.size(); ++i) {
    const auto& r = sweep.rows[i];
    table.add_row({std::to_string(i + 1), format_number(r.ratio), format_number(r.metrics.tilt_deg),
                   format_number(r.metrics.sll_db), format_number(r.metrics.beamwidth_deg)});
  }
  const auto best = std::find_if(sweep.rows.begin(), sweep.rows.end(),
                                 [&](const RatioRow& r) { return r.ratio == sweep.best_ratio; });
  table.add_row({"min_sll", format_number(sweep.best_ratio), format_number(best->metrics.tilt_deg),
                 format_number(sweep.best_sll_db), format_number(best->metrics.beamwidth_deg)});
  return {{"ratio_sweep.csv", table.str()}};
}

std::vector<Artifact> stability_artifacts(const RunConfig& c, bool svg) {
  const auto grid = c.theta_radians();
  const auto freqs = c.frequencies_hz();
  const StabilityReport report = step("beam_stability", [&] {
    return beam_stability(freqs, grid, c.antenna(), c.excitation(), c.quadrature,
                          c.center_frequency_hz());
  });
  CsvTable rows({"frequency_ghz", "tilt_deg", "sll_db", "beamwidth_deg", "tilt_deviation_deg"});
  for (const auto& r : report.rows)
    rows.add_row({r.frequency / 1e9, r.metrics.tilt_deg, r.metrics.sll_db, r.metrics.beamwidth_deg,
                  r.metrics.tilt_deg - report.center_tilt_deg});
  CsvTable summary(
      {"center_frequency_ghz", "center_tilt_deg", "max_tilt_deviation_deg", "tilt_spread_deg"});
  summary.add_row({report.center_frequency / 1e9, report.center_tilt_deg,
                   report.max_tilt_deviation_deg, report.tilt_spread_deg});
  std::vector<Artifact> out{{"stability.csv", rows.str()}, {"stability_summary.csv", summary.str()}};
  if (svg) {
    for (double f : freqs) {
      const FrequencyContext ctx(f);
      const PatternCut cut = step("synthesize_pattern", [&] {
        return synthesize_pattern(c.excitation(), grid, c.antenna(), ctx, c.quadrature);
      });
      out.push_back({"stability_" + format_number(f / 1e9) + "ghz.svg",
                     render_polar_svg(cut, pattern_metrics(cut), svg_title("pattern", f))});
    }
  }
  return out;
}

std::vector<Artifact> scan_artifacts(const RunConfig& c, bool svg) {
  const FrequencyContext ctx(c.center_frequency_hz());
  const auto grid = c.theta_radians();
  const PatternCut element = step("synthesize_pattern", [&] {
    return synthesize_pattern(c.excitation(), grid, c.antenna(), ctx, c.quadrature);
  });
  const ArrayLayout layout = c.scan_layout();
  const auto commands = c.scan_commands();
  std::vector<PatternCut> cuts;
  for (const auto& cmd : commands)
    cuts.push_back(step("scan_pattern", [&] { return scan_pattern(element, layout, cmd, ctx); }));
  const auto reports = step("scan_report", [&] { return scan_report(cuts, commands); });

  CsvTable table({"commanded_deg", "achieved_deg", "pointing_error_deg", "scan_loss_db", "sll_db"});
  for (const auto& r : reports)
    table.add_row({r.commanded_deg, r.achieved_deg, r.pointing_error_deg, r.scan_loss_db, r.sll_db});

  std::vector<std::string> header{"theta_deg"};
  for (const auto& cmd : commands) header.push_back("mag_db_" + format_number(rad_to_deg(cmd.theta0)));
  CsvTable patterns(header);
  for (std::size_t i = 0; i < grid.size(); ++i) {
    std::vector<std::string> row{format_number(rad_to_deg(grid[i]))};
    for (const auto& cut : cuts) row.push_back(format_number(to_db(std::abs(cut.values[i]))));
    patterns.add_row(std::move(row));
  }

  std::vector<Artifact> out{{"scan.csv", table.str()}, {"scan_patterns.csv", patterns.str()}};
  if (svg) {
    for (std::size_t i = 0; i < cuts.size(); ++i) {
      PatternCut unit = cuts[i];
      unit.normalize();
      const std::string cmd = format_number(rad_to_deg(commands[i].theta0));
      // Plotted relative to the boresight peak, so scan loss shows as a shrunken lobe.
      PatternCut relative = cuts[i];
      relative.normalized = true;
      out.push_back({"scan_" + cmd + ".svg",
                     render_polar_svg(relative, pattern_metrics(unit),
                                      "scan " + cmd + " deg at " +
                                          format_number(ctx.frequency() / 1e9) + " GHz")});
    }
  }
  return out;
}

std::vector<Artifact> resonance_artifacts(const RunConfig& c, bool) {
  const MicrostripSpec strip = c.strip();
  const double eps_eff = effective_permittivity(strip);
  CsvTable table({"length_mm", "eps_r", "f_raw_ghz", "eps_eff", "f_eff_ghz"});
  table.add_row({strip.length * 1e3, strip.substrate.eps_r,
                 half_wave_resonance(strip.length, strip.substrate.eps_r) / 1e9, eps_eff,
                 half_wave_resonance(strip.length, eps_eff) / 1e9});
  return {{"resonance.csv", table.str()}};
}

std::vector<Artifact> loss_artifacts(const RunConfig& c, bool) {
  const MicrostripSpec base = c.strip();
  const auto freqs = c.frequencies_hz();
  const double path = c.loss.plane_wave_path_mm * 1e-3;
  CsvTable budget({"substrate", "frequency_ghz", "alpha_c_db", "alpha_d_db", "alpha_r_db",
                   "alpha_l_db", "total_db"});
  CsvTable plane({"substrate", "eps_r", "tan_delta", "frequency_ghz", "path_mm", "loss_db"});
  for (const SubstrateSpec& sub : c.substrate_list()) {
    // The strip keeps its own dielectric thickness; only the material changes.
    MicrostripSpec strip = base;
    strip.substrate = sub;
    strip.substrate.thickness = base.substrate.thickness;
    for (double f : freqs) {
      const LossBudget b = loss_budget(strip, f);
      budget.add_row({sub.name, format_number(f / 1e9), format_number(b.alpha_c),
                      format_number(b.alpha_d), format_number(b.alpha_r), format_number(b.alpha_l),
                      format_number(b.total)});
      plane.add_row({sub.name, format_number(sub.eps_r), format_number(sub.tan_delta),
                     format_number(f / 1e9), format_number(c.loss.plane_wave_path_mm),
                     format_number(plane_wave_attenuation(sub, f, path))});
    }
  }
  return {{"loss.csv", budget.str()}, {"plane_wave.csv", plane.str()}};
}

}  // namespace

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names{"pattern", "ratio-sweep", "stability",
                                              "scan",    "resonance",   "loss"};
  return names;
}

std::vector<Artifact> build_artifacts(std::string_view command, const RunConfig& config,
                                      bool with_svg) {
  g_operation.clear();
  validate_config(config);
  if (command == "pattern") return pattern_artifacts(config, with_svg);
  if (command == "ratio-sweep") return ratio_sweep_artifacts(config, with_svg);
  if (command == "stability") return stability_artifacts(config, with_svg);
  if (command == "scan") return scan_artifacts(config, with_svg);
  if (command == "resonance") return resonance_artifacts(config, with_svg);
  if (command == "loss") return loss_artifacts(config, with_svg);
  throw UsageError("unknown command \"" + std::string(command) +
                   "\" (expected pattern, ratio-sweep, stability, scan, resonance or loss)");
}

ExitCode run_command(std::string_view command, const RunConfig& config, const RunOptions& options,
                     std::ostream& err) {
  try {
    const auto artifacts = build_artifacts(command, config, options.svg);
    const std::filesystem::path dir = options.output_dir ? *options.output_dir
                                                         : std::filesystem::path(config.output_dir);
    const OutputLock lock(dir);
    write_artifacts(dir, artifacts);
    return ExitCode::Ok;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return ExitCode::Usage;
  } catch (const ConvergenceError& e) {
    err << "convergence failure in " << (g_operation.empty() ? "unknown operation" : g_operation)
        << ": " << e.what() << '\n';
    return ExitCode::Convergence;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return ExitCode::Config;
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << '\n';
    return ExitCode::Config;
  } catch (const DomainError& e) {
    err << "domain error: " << e.what() << '\n';
    return ExitCode::Config;
  } catch (const IoError& e) {
    err << "i/o error: " << e.what() << '\n';
    return ExitCode::Io;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return ExitCode::Internal;
  }
}

}  // namespace tiltbeam
