#include <pybind11/complex.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include <sstream>

#include "tiltbeam/arrayfactor.hpp"
#include "tiltbeam/circuitmodel.hpp"
#include "tiltbeam/commands.hpp"
#include "tiltbeam/config.hpp"
#include "tiltbeam/constants.hpp"
#include "tiltbeam/errors.hpp"
#include "tiltbeam/radiators.hpp"
#include "tiltbeam/scanstudy.hpp"
#include "tiltbeam/specfun.hpp"
#include "tiltbeam/synthesis.hpp"

namespace py = pybind11;
using namespace tiltbeam;

namespace {

std::vector<double> to_vector(const py::array_t<double, py::array::c_style | py::array::forcecast>& a) {
  return {a.data(), a.data() + a.size()};
}

template <typename T>
py::array_t<T> to_array(const std::vector<T>& v) {
  return py::array_t<T>(std::vector<py::ssize_t>{static_cast<py::ssize_t>(v.size())}, v.data());
}

}  // namespace

PYBIND11_MODULE(_tiltbeam, m) {
  m.doc() = "Tilted-beam slot/monopole antenna model";

  auto base = py::register_exception<Error>(m, "Error");
  py::register_exception<DomainError>(m, "DomainError", base.ptr());
  py::register_exception<ConvergenceError>(m, "ConvergenceError", base.ptr());
  py::register_exception<ConfigError>(m, "ConfigError", base.ptr());
  py::register_exception<ParseError>(m, "ParseError", base.ptr());
  py::register_exception<IoError>(m, "IoError", base.ptr());

  m.def("bessel_j1", py::vectorize(&bessel_j1), py::arg("x"));
  m.def("slot_pattern", py::vectorize(&slot_pattern), py::arg("theta"), "theta in radians");

  py::class_<FrequencyContext>(m, "FrequencyContext")
      .def(py::init<double>(), py::arg("frequency_hz"))
      .def_property_readonly("frequency", &FrequencyContext::frequency)
      .def_property_readonly("wavenumber", &FrequencyContext::wavenumber)
      .def_property_readonly("wavelength", &FrequencyContext::wavelength);

  py::enum_<CurrentModel>(m, "CurrentModel")
      .value("Sinusoidal", CurrentModel::Sinusoidal)
      .value("Triangular", CurrentModel::Triangular);

  py::class_<QuadratureSpec>(m, "QuadratureSpec")
      .def(py::init<>())
      .def_readwrite("abs_tol", &QuadratureSpec::abs_tol)
      .def_readwrite("rel_tol", &QuadratureSpec::rel_tol)
      .def_readwrite("max_subdivisions", &QuadratureSpec::max_subdivisions);

  py::class_<SlotSpec>(m, "SlotSpec")
      .def(py::init<>())
      .def_readwrite("length", &SlotSpec::length)
      .def_readwrite("amplitude", &SlotSpec::amplitude);

  py::class_<MonopoleSpec>(m, "MonopoleSpec")
      .def(py::init<>())
      .def_readwrite("height", &MonopoleSpec::height)
      .def_readwrite("ground_radius", &MonopoleSpec::ground_radius)
      .def_readwrite("current_model", &MonopoleSpec::current_model);

  py::class_<ArrayLayout>(m, "ArrayLayout")
      .def(py::init<>())
      .def_readwrite("count_x", &ArrayLayout::count_x)
      .def_readwrite("count_y", &ArrayLayout::count_y)
      .def_readwrite("spacing_x", &ArrayLayout::spacing_x)
      .def_readwrite("spacing_y", &ArrayLayout::spacing_y);

  py::class_<Geometry>(m, "Geometry")
      .def(py::init<>())
      .def_readwrite("slot", &Geometry::slot)
      .def_readwrite("monopole", &Geometry::monopole)
      .def_readwrite("array", &Geometry::array);

  py::class_<ExcitationWeights>(m, "ExcitationWeights")
      .def(py::init<>())
      .def(py::init([](double s, double m) { return ExcitationWeights{s, m}; }), py::arg("slot"),
           py::arg("monopole"))
      .def_readwrite("slot", &ExcitationWeights::slot)
      .def_readwrite("monopole", &ExcitationWeights::monopole);

  m.def("array_factor", &array_factor, py::arg("layout"), py::arg("theta"), py::arg("phi"), py::arg("wavelength"));
  m.def("theta_grid", [](double a, double b, double s) { return to_array(theta_grid(a, b, s)); },
        py::arg("start_deg"), py::arg("stop_deg"), py::arg("step_deg"), "grid in radians");

  py::class_<PatternCut>(m, "PatternCut")
      .def_property_readonly("theta", [](const PatternCut& c) { return to_array(c.theta); })
      .def_property_readonly("values", [](const PatternCut& c) { return to_array(c.values); })
      .def_readonly("normalized", &PatternCut::normalized)
      .def("__len__", &PatternCut::size);

  py::class_<PatternMetrics>(m, "PatternMetrics")
      .def_readonly("tilt_deg", &PatternMetrics::tilt_deg)
      .def_readonly("sll_db", &PatternMetrics::sll_db)
      .def_readonly("beamwidth_deg", &PatternMetrics::beamwidth_deg)
      .def_readonly("peak_linear", &PatternMetrics::peak_linear)
      .def_readonly("beamwidth_one_sided", &PatternMetrics::beamwidth_one_sided)
      .def("has_sidelobe", &PatternMetrics::has_sidelobe);

  m.def(
      "synthesize_pattern",
      [](const ExcitationWeights& w, const py::array_t<double, py::array::c_style | py::array::forcecast>& grid,
         const Geometry& g, double frequency_hz, const QuadratureSpec& q) {
        return synthesize_pattern(w, to_vector(grid), g, FrequencyContext(frequency_hz), q);
      },
      py::arg("weights"), py::arg("theta"), py::arg("geometry") = Geometry{}, py::arg("frequency_hz") = 32.4e9,
      py::arg("quadrature") = QuadratureSpec{});
  m.def("pattern_metrics", &pattern_metrics, py::arg("cut"));

  py::class_<RatioRow>(m, "RatioRow")
      .def_readonly("ratio", &RatioRow::ratio)
      .def_readonly("metrics", &RatioRow::metrics);
  py::class_<RatioSweep>(m, "RatioSweep")
      .def_readonly("rows", &RatioSweep::rows)
      .def_readonly("best_ratio", &RatioSweep::best_ratio)
      .def_readonly("best_sll_db", &RatioSweep::best_sll_db);
  m.def(
      "ratio_sweep",
      [](const std::vector<double>& ratios, const py::array_t<double, py::array::c_style | py::array::forcecast>& grid,
         const Geometry& g, double frequency_hz) {
        return ratio_sweep(ratios, to_vector(grid), g, FrequencyContext(frequency_hz));
      },
      py::arg("ratios"), py::arg("theta"), py::arg("geometry") = Geometry{}, py::arg("frequency_hz") = 32.4e9);

  py::class_<StabilityRow>(m, "StabilityRow")
      .def_readonly("frequency", &StabilityRow::frequency)
      .def_readonly("metrics", &StabilityRow::metrics);
  py::class_<StabilityReport>(m, "StabilityReport")
      .def_readonly("rows", &StabilityReport::rows)
      .def_readonly("center_frequency", &StabilityReport::center_frequency)
      .def_readonly("center_tilt_deg", &StabilityReport::center_tilt_deg)
      .def_readonly("max_tilt_deviation_deg", &StabilityReport::max_tilt_deviation_deg)
      .def_readonly("tilt_spread_deg", &StabilityReport::tilt_spread_deg);
  m.def(
      "beam_stability",
      [](const std::vector<double>& freqs, const py::array_t<double, py::array::c_style | py::array::forcecast>& grid,
         const Geometry& g, const ExcitationWeights& w) { return beam_stability(freqs, to_vector(grid), g, w); },
      py::arg("frequencies_hz"), py::arg("theta"), py::arg("geometry") = Geometry{},
      py::arg("weights") = ExcitationWeights{});

  py::class_<ScanReport>(m, "ScanReport")
      .def_readonly("commanded_deg", &ScanReport::commanded_deg)
      .def_readonly("achieved_deg", &ScanReport::achieved_deg)
      .def_readonly("pointing_error_deg", &ScanReport::pointing_error_deg)
      .def_readonly("scan_loss_db", &ScanReport::scan_loss_db)
      .def_readonly("sll_db", &ScanReport::sll_db);
  m.def(
      "scan_study",
      [](const PatternCut& element, const std::vector<double>& commands_deg, double frequency_hz) {
        const FrequencyContext ctx(frequency_hz);
        const ArrayLayout layout = default_scan_layout(ctx);
        std::vector<SteeringCommand> cmds;
        std::vector<PatternCut> cuts;
        for (double c : commands_deg) {
          cmds.push_back({deg_to_rad(c)});
          cuts.push_back(scan_pattern(element, layout, cmds.back(), ctx));
        }
        return scan_report(cuts, cmds);
      },
      py::arg("element"), py::arg("commands_deg"), py::arg("frequency_hz") = 32.4e9,
      "Steers a half-wavelength linear array of the element; one report per command (0 must be included).");

  py::class_<SubstrateSpec>(m, "SubstrateSpec")
      .def(py::init<>())
      .def_readwrite("name", &SubstrateSpec::name)
      .def_readwrite("eps_r", &SubstrateSpec::eps_r)
      .def_readwrite("tan_delta", &SubstrateSpec::tan_delta)
      .def_readwrite("thickness", &SubstrateSpec::thickness);
  m.def("substrate_preset", &substrate_preset, py::arg("name"));
  m.def("substrate_preset_names", &substrate_preset_names);

  py::class_<MicrostripSpec>(m, "MicrostripSpec")
      .def(py::init<>())
      .def_readwrite("substrate", &MicrostripSpec::substrate)
      .def_readwrite("width", &MicrostripSpec::width)
      .def_readwrite("length", &MicrostripSpec::length)
      .def_readwrite("conductivity", &MicrostripSpec::conductivity)
      .def_readwrite("roughness", &MicrostripSpec::roughness);

  py::class_<LossBudget>(m, "LossBudget")
      .def_readonly("alpha_c", &LossBudget::alpha_c)
      .def_readonly("alpha_d", &LossBudget::alpha_d)
      .def_readonly("alpha_r", &LossBudget::alpha_r)
      .def_readonly("alpha_l", &LossBudget::alpha_l)
      .def_readonly("total", &LossBudget::total)
      .def_readonly("note", &LossBudget::note);

  m.def("effective_permittivity", &effective_permittivity, py::arg("strip"));
  m.def("characteristic_impedance", &characteristic_impedance, py::arg("strip"));
  m.def("half_wave_resonance", &half_wave_resonance, py::arg("length"), py::arg("eps"));
  m.def("plane_wave_attenuation", &plane_wave_attenuation, py::arg("substrate"), py::arg("frequency"),
        py::arg("path_length"));
  m.def("loss_budget", &loss_budget, py::arg("strip"), py::arg("frequency"));

  m.def("command_names", &command_names);
  m.def(
      "normalize_config", [](const std::string& text) { return serialize_config(parse_config(text)); },
      py::arg("config_json") = "{}", "Validates a config and returns it with every field spelled out.");
  m.def(
      "build_artifacts",
      [](const std::string& command, const std::string& config_json, bool svg) {
        py::dict out;
        for (const auto& a : build_artifacts(command, parse_config(config_json), svg))
          out[py::str(a.name)] = py::str(a.content);
        return out;
      },
      py::arg("command"), py::arg("config_json") = "{}", py::arg("svg") = false,
      "Runs a command in memory and returns {file name: content}.");
  m.def(
      "run",
      [](const std::string& command, const std::string& config_json, const std::filesystem::path& out, bool svg) {
        std::ostringstream err;
        const int code = static_cast<int>(run_command(command, parse_config(config_json), {out, svg}, err));
        return py::make_tuple(code, err.str());
      },
      py::arg("command"), py::arg("config_json"), py::arg("out"), py::arg("svg") = false,
      "Writes artifacts like the CLI; returns (exit code, stderr text).");
}
