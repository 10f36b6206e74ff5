#include "tiltbeam/config.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "tiltbeam/constants.hpp"
#include "tiltbeam/errors.hpp"

namespace tiltbeam {

using nlohmann::json;

namespace {

// Strict view of a JSON object: tracks consumed keys so leftovers can be
// reported as unknown.
class ObjectReader {
 public:
  ObjectReader(const json& node, std::string path) : node_(node), path_(std::move(path)) {
    if (!node_.is_object()) throw ConfigError(path_, "must be a JSON object");
  }

  std::string key_path(std::string_view key) const {
    return path_.empty() ? std::string(key) : path_ + "." + std::string(key);
  }

  const json* find(std::string_view key) {
    seen_.emplace(key);
    auto it = node_.find(std::string(key));
    return it == node_.end() ? nullptr : &*it;
  }

  void read(std::string_view key, double& out) {
    if (const json* v = find(key)) {
      if (!v->is_number()) throw ConfigError(key_path(key), "expected a number");
      out = v->get<double>();
    }
  }

  void read(std::string_view key, std::optional<double>& out) {
    if (const json* v = find(key)) {
      if (v->is_null()) {
        out.reset();
        return;
      }
      if (!v->is_number()) throw ConfigError(key_path(key), "expected a number or null");
      out = v->get<double>();
    }
  }

  void read(std::string_view key, int& out) {
    if (const json* v = find(key)) {
      if (!v->is_number_integer()) throw ConfigError(key_path(key), "expected an integer");
      const auto value = v->get<long long>();
      if (value < -1000000 || value > 1000000) throw ConfigError(key_path(key), "integer out of range");
      out = static_cast<int>(value);
    }
  }

  void read(std::string_view key, std::string& out) {
    if (const json* v = find(key)) {
      if (!v->is_string()) throw ConfigError(key_path(key), "expected a string");
      out = v->get<std::string>();
    }
  }

  void read(std::string_view key, std::vector<double>& out) {
    if (const json* v = find(key)) {
      if (!v->is_array()) throw ConfigError(key_path(key), "expected an array of numbers");
      out.clear();
      for (std::size_t i = 0; i < v->size(); ++i) {
        if (!(*v)[i].is_number())
          throw ConfigError(key_path(key) + "[" + std::to_string(i) + "]", "expected a number");
        out.push_back((*v)[i].get<double>());
      }
    }
  }

  void read(std::string_view key, std::vector<std::string>& out) {
    if (const json* v = find(key)) {
      if (!v->is_array()) throw ConfigError(key_path(key), "expected an array of strings");
      out.clear();
      for (std::size_t i = 0; i < v->size(); ++i) {
        if (!(*v)[i].is_string())
          throw ConfigError(key_path(key) + "[" + std::to_string(i) + "]", "expected a string");
        out.push_back((*v)[i].get<std::string>());
      }
    }
  }

  /// Calls fn(ObjectReader&) on a nested object when present.
  template <typename Fn>
  void nested(std::string_view key, Fn&& fn) {
    if (const json* v = find(key)) {
      ObjectReader child(*v, key_path(key));
      fn(child);
      child.finish();
    }
  }

  const json& node() const { return node_; }

  void finish() const {
    for (auto it = node_.begin(); it != node_.end(); ++it)
      if (!seen_.contains(it.key())) throw ConfigError(key_path(it.key()), "unknown key");
  }

 private:
  const json& node_;
  std::string path_;
  std::set<std::string, std::less<>> seen_;
};

void require(bool ok, const std::string& field, const std::string& what) {
  if (!ok) throw ConfigError(field, what);
}

bool finite_positive(double v) { return std::isfinite(v) && v > 0.0; }

std::pair<std::size_t, std::size_t> line_column(std::string_view text, std::size_t byte) {
  // nlohmann reports the 1-based byte index of the offending character.
  const std::size_t end = std::min(byte == 0 ? 0 : byte - 1, text.size());
  std::size_t line = 1;
  std::size_t column = 1;
  for (std::size_t i = 0; i < end; ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return {line, column};
}

json optional_number(const std::optional<double>& v) { return v ? json(*v) : json(nullptr); }

}  // namespace

void validate_config(const RunConfig& c) {
  const auto& g = c.geometry;
  require(finite_positive(g.slot.length_mm), "geometry.slot.length_mm", "must be > 0");
  require(finite_positive(g.slot.amplitude_v_per_m), "geometry.slot.amplitude_v_per_m", "must be > 0");
  require(finite_positive(g.monopole.height_mm), "geometry.monopole.height_mm", "must be > 0");
  require(finite_positive(g.monopole.ground_radius_mm), "geometry.monopole.ground_radius_mm",
          "must be > 0");
  require(g.monopole.current_model == "sinusoidal" || g.monopole.current_model == "triangular",
          "geometry.monopole.current_model", "must be \"sinusoidal\" or \"triangular\"");
  require(g.array.count_x >= 1, "geometry.array.count_x", "must be >= 1");
  require(g.array.count_y >= 1, "geometry.array.count_y", "must be >= 1");
  require(g.array.count_x == 1 || finite_positive(g.array.spacing_x_mm), "geometry.array.spacing_x_mm",
          "must be > 0 when count_x > 1");
  require(g.array.count_y == 1 || finite_positive(g.array.spacing_y_mm), "geometry.array.spacing_y_mm",
          "must be > 0 when count_y > 1");
  require(std::isfinite(g.array.spacing_x_mm) && g.array.spacing_x_mm >= 0.0,
          "geometry.array.spacing_x_mm", "must be >= 0");
  require(std::isfinite(g.array.spacing_y_mm) && g.array.spacing_y_mm >= 0.0,
          "geometry.array.spacing_y_mm", "must be >= 0");
  require(finite_positive(g.strip.width_mm), "geometry.strip.width_mm", "must be > 0");
  require(finite_positive(g.strip.length_mm), "geometry.strip.length_mm", "must be > 0");
  require(finite_positive(g.strip.thickness_mm), "geometry.strip.thickness_mm", "must be > 0");
  require(finite_positive(g.strip.conductivity_s_per_m), "geometry.strip.conductivity_s_per_m",
          "must be > 0");
  require(std::isfinite(g.strip.roughness_um) && g.strip.roughness_um >= 0.0,
          "geometry.strip.roughness_um", "must be >= 0");

  const auto known = substrate_preset_names();
  require(!c.substrates.presets.empty(), "substrates.presets", "must list at least one substrate");
  for (std::size_t i = 0; i < c.substrates.presets.size(); ++i) {
    const std::string field = "substrates.presets[" + std::to_string(i) + "]";
    require(std::find(known.begin(), known.end(), c.substrates.presets[i]) != known.end(), field,
            "unknown substrate preset \"" + c.substrates.presets[i] + "\"");
  }
  for (const auto& [name, o] : c.substrates.overrides) {
    const std::string field = "substrates.overrides." + name;
    require(std::find(c.substrates.presets.begin(), c.substrates.presets.end(), name) !=
                c.substrates.presets.end(),
            field, "override for a substrate not listed in substrates.presets");
    require(!o.eps_r || (std::isfinite(*o.eps_r) && *o.eps_r >= 1.0), field + ".eps_r", "must be >= 1");
    require(!o.tan_delta || (std::isfinite(*o.tan_delta) && *o.tan_delta >= 0.0),
            field + ".tan_delta", "must be >= 0");
    require(!o.thickness_mm || finite_positive(*o.thickness_mm), field + ".thickness_mm",
            "must be > 0");
  }
  require(std::find(c.substrates.presets.begin(), c.substrates.presets.end(), g.strip.substrate) !=
              c.substrates.presets.end(),
          "geometry.strip.substrate",
          "substrate \"" + g.strip.substrate + "\" is not listed in substrates.presets");

  const auto& f = c.frequency_grid;
  require(finite_positive(f.start_ghz), "frequency_grid.start_ghz", "must be > 0");
  require(finite_positive(f.step_ghz), "frequency_grid.step_ghz", "step must be > 0");
  require(std::isfinite(f.stop_ghz) && f.stop_ghz >= f.start_ghz, "frequency_grid.stop_ghz",
          "must be >= start_ghz");
  require(finite_positive(f.center_ghz), "frequency_grid.center_ghz", "must be > 0");

  const auto& t = c.theta_grid;
  require(std::isfinite(t.step_deg) && t.step_deg > 0.0, "theta_grid.step_deg", "step must be > 0");
  require(t.step_deg <= 0.5, "theta_grid.step_deg", "step must be <= 0.5 for pattern metrics");
  require(std::isfinite(t.start_deg) && t.start_deg >= -90.0, "theta_grid.start_deg",
          "must be >= -90");
  require(std::isfinite(t.stop_deg) && t.stop_deg <= 90.0, "theta_grid.stop_deg", "must be <= 90");
  require(t.stop_deg > t.start_deg, "theta_grid.stop_deg", "must be > start_deg");

  const auto& w = c.weights;
  require(std::isfinite(w.s1) && w.s1 >= 0.0, "weights.s1", "must be >= 0");
  require(std::isfinite(w.s2) && w.s2 >= 0.0, "weights.s2", "must be >= 0");
  require(w.s1 > 0.0 || w.s2 > 0.0, "weights", "s1 and s2 must not both be zero");
  require(!w.ratios.empty(), "weights.ratios", "must not be empty");
  for (std::size_t i = 0; i < w.ratios.size(); ++i)
    require(finite_positive(w.ratios[i]), "weights.ratios[" + std::to_string(i) + "]", "must be > 0");

  require(c.scan.count >= 1, "scan.count", "must be >= 1");
  require(!c.scan.spacing_mm || finite_positive(*c.scan.spacing_mm), "scan.spacing_mm", "must be > 0");
  require(!c.scan.commands_deg.empty(), "scan.commands_deg", "must not be empty");
  for (std::size_t i = 0; i < c.scan.commands_deg.size(); ++i)
    require(std::isfinite(c.scan.commands_deg[i]) && std::fabs(c.scan.commands_deg[i]) < 90.0,
            "scan.commands_deg[" + std::to_string(i) + "]", "must satisfy |angle| < 90");
  require(std::find(c.scan.commands_deg.begin(), c.scan.commands_deg.end(), 0.0) !=
              c.scan.commands_deg.end(),
          "scan.commands_deg", "the boresight command (0 deg) is required");

  require(finite_positive(c.loss.plane_wave_path_mm), "loss.plane_wave_path_mm", "must be > 0");

  require(c.quadrature.abs_tol > 0.0, "quadrature.abs_tol", "must be > 0");
  require(c.quadrature.rel_tol > 0.0, "quadrature.rel_tol", "must be > 0");
  require(c.quadrature.max_subdivisions >= 1, "quadrature.max_subdivisions", "must be >= 1");
  require(!c.output_dir.empty(), "output_dir", "must not be empty");
}

RunConfig parse_config(std::string_view json_text) {
  json root;
  try {
    root = json::parse(json_text.begin(), json_text.end());
  } catch (const json::parse_error& e) {
    const auto [line, column] = line_column(json_text, e.byte);
    std::ostringstream msg;
    msg << "config parse error at line " << line << ", column " << column << ": " << e.what();
    throw ParseError(msg.str(), line, column);
  }

  RunConfig c;
  ObjectReader top(root, "");
  top.nested("geometry", [&](ObjectReader& g) {
    g.nested("slot", [&](ObjectReader& s) {
      s.read("length_mm", c.geometry.slot.length_mm);
      s.read("amplitude_v_per_m", c.geometry.slot.amplitude_v_per_m);
    });
    g.nested("monopole", [&](ObjectReader& m) {
      m.read("height_mm", c.geometry.monopole.height_mm);
      m.read("ground_radius_mm", c.geometry.monopole.ground_radius_mm);
      m.read("current_model", c.geometry.monopole.current_model);
    });
    g.nested("array", [&](ObjectReader& a) {
      a.read("count_x", c.geometry.array.count_x);
      a.read("count_y", c.geometry.array.count_y);
      a.read("spacing_x_mm", c.geometry.array.spacing_x_mm);
      a.read("spacing_y_mm", c.geometry.array.spacing_y_mm);
    });
    g.nested("strip", [&](ObjectReader& s) {
      s.read("width_mm", c.geometry.strip.width_mm);
      s.read("length_mm", c.geometry.strip.length_mm);
      s.read("substrate", c.geometry.strip.substrate);
      s.read("thickness_mm", c.geometry.strip.thickness_mm);
      s.read("conductivity_s_per_m", c.geometry.strip.conductivity_s_per_m);
      s.read("roughness_um", c.geometry.strip.roughness_um);
    });
  });
  top.nested("substrates", [&](ObjectReader& s) {
    s.read("presets", c.substrates.presets);
    s.nested("overrides", [&](ObjectReader& o) {
      for (auto it = o.node().begin(); it != o.node().end(); ++it) {
        SubstrateOverride entry;
        o.nested(it.key(), [&](ObjectReader& e) {
          e.read("eps_r", entry.eps_r);
          e.read("tan_delta", entry.tan_delta);
          e.read("thickness_mm", entry.thickness_mm);
        });
        c.substrates.overrides[it.key()] = entry;
      }
    });
  });
  top.nested("frequency_grid", [&](ObjectReader& f) {
    f.read("start_ghz", c.frequency_grid.start_ghz);
    f.read("stop_ghz", c.frequency_grid.stop_ghz);
    f.read("step_ghz", c.frequency_grid.step_ghz);
    f.read("center_ghz", c.frequency_grid.center_ghz);
  });
  top.nested("theta_grid", [&](ObjectReader& t) {
    t.read("start_deg", c.theta_grid.start_deg);
    t.read("stop_deg", c.theta_grid.stop_deg);
    t.read("step_deg", c.theta_grid.step_deg);
  });
  top.nested("weights", [&](ObjectReader& w) {
    w.read("s1", c.weights.s1);
    w.read("s2", c.weights.s2);
    w.read("ratios", c.weights.ratios);
  });
  top.nested("scan", [&](ObjectReader& s) {
    s.read("count", c.scan.count);
    s.read("spacing_mm", c.scan.spacing_mm);
    s.read("commands_deg", c.scan.commands_deg);
  });
  top.nested("loss", [&](ObjectReader& l) { l.read("plane_wave_path_mm", c.loss.plane_wave_path_mm); });
  top.nested("quadrature", [&](ObjectReader& q) {
    q.read("abs_tol", c.quadrature.abs_tol);
    q.read("rel_tol", c.quadrature.rel_tol);
    q.read("max_subdivisions", c.quadrature.max_subdivisions);
  });
  top.read("output_dir", c.output_dir);
  top.finish();

  validate_config(c);
  return c;
}

RunConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open config file " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_config(buffer.str());
}

std::string serialize_config(const RunConfig& c) {
  const auto& g = c.geometry;
  json overrides = json::object();
  for (const auto& [name, o] : c.substrates.overrides) {
    overrides[name] = {{"eps_r", optional_number(o.eps_r)},
                       {"tan_delta", optional_number(o.tan_delta)},
                       {"thickness_mm", optional_number(o.thickness_mm)}};
  }
  const json root = {
      {"geometry",
       {{"slot", {{"length_mm", g.slot.length_mm}, {"amplitude_v_per_m", g.slot.amplitude_v_per_m}}},
        {"monopole",
         {{"height_mm", g.monopole.height_mm},
          {"ground_radius_mm", g.monopole.ground_radius_mm},
          {"current_model", g.monopole.current_model}}},
        {"array",
         {{"count_x", g.array.count_x},
          {"count_y", g.array.count_y},
          {"spacing_x_mm", g.array.spacing_x_mm},
          {"spacing_y_mm", g.array.spacing_y_mm}}},
        {"strip",
         {{"width_mm", g.strip.width_mm},
          {"length_mm", g.strip.length_mm},
          {"substrate", g.strip.substrate},
          {"thickness_mm", g.strip.thickness_mm},
          {"conductivity_s_per_m", g.strip.conductivity_s_per_m},
          {"roughness_um", g.strip.roughness_um}}}}},
      {"substrates", {{"presets", c.substrates.presets}, {"overrides", overrides}}},
      {"frequency_grid",
       {{"start_ghz", c.frequency_grid.start_ghz},
        {"stop_ghz", c.frequency_grid.stop_ghz},
        {"step_ghz", c.frequency_grid.step_ghz},
        {"center_ghz", c.frequency_grid.center_ghz}}},
      {"theta_grid",
       {{"start_deg", c.theta_grid.start_deg},
        {"stop_deg", c.theta_grid.stop_deg},
        {"step_deg", c.theta_grid.step_deg}}},
      {"weights", {{"s1", c.weights.s1}, {"s2", c.weights.s2}, {"ratios", c.weights.ratios}}},
      {"scan",
       {{"count", c.scan.count},
        {"spacing_mm", optional_number(c.scan.spacing_mm)},
        {"commands_deg", c.scan.commands_deg}}},
      {"loss", {{"plane_wave_path_mm", c.loss.plane_wave_path_mm}}},
      {"quadrature",
       {{"abs_tol", c.quadrature.abs_tol},
        {"rel_tol", c.quadrature.rel_tol},
        {"max_subdivisions", c.quadrature.max_subdivisions}}},
      {"output_dir", c.output_dir},
  };
  return root.dump(2) + "\n";
}

Geometry RunConfig::antenna() const {
  Geometry g;
  g.slot = {geometry.slot.length_mm * 1e-3, geometry.slot.amplitude_v_per_m};
  g.monopole = {geometry.monopole.height_mm * 1e-3, geometry.monopole.ground_radius_mm * 1e-3,
                current_model_from_string(geometry.monopole.current_model)};
  g.array = {geometry.array.count_x, geometry.array.count_y, geometry.array.spacing_x_mm * 1e-3,
             geometry.array.spacing_y_mm * 1e-3};
  return g;
}

std::vector<SubstrateSpec> RunConfig::substrate_list() const {
  std::vector<SubstrateSpec> list;
  for (const std::string& name : substrates.presets) {
    SubstrateSpec s = substrate_preset(name);
    if (auto it = substrates.overrides.find(name); it != substrates.overrides.end()) {
      if (it->second.eps_r) s.eps_r = *it->second.eps_r;
      if (it->second.tan_delta) s.tan_delta = *it->second.tan_delta;
      if (it->second.thickness_mm) s.thickness = *it->second.thickness_mm * 1e-3;
    }
    list.push_back(s);
  }
  return list;
}

MicrostripSpec RunConfig::strip() const {
  const auto& s = geometry.strip;
  MicrostripSpec strip;
  strip.width = s.width_mm * 1e-3;
  strip.length = s.length_mm * 1e-3;
  const auto list = substrate_list();
  const auto it = std::find_if(list.begin(), list.end(),
                               [&](const SubstrateSpec& sub) { return sub.name == s.substrate; });
  if (it == list.end())
    throw ConfigError("geometry.strip.substrate", "substrate \"" + s.substrate + "\" not available");
  strip.substrate = *it;
  strip.substrate.thickness = s.thickness_mm * 1e-3;
  strip.conductivity = s.conductivity_s_per_m;
  strip.roughness = s.roughness_um * 1e-6;
  return strip;
}

std::vector<double> RunConfig::frequencies_hz() const {
  const auto& f = frequency_grid;
  const auto n = static_cast<std::size_t>(std::floor((f.stop_ghz - f.start_ghz) / f.step_ghz + 1e-9)) + 1;
  std::vector<double> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = (f.start_ghz + static_cast<double>(i) * f.step_ghz) * 1e9;
  return out;
}

double RunConfig::center_frequency_hz() const { return frequency_grid.center_ghz * 1e9; }

std::vector<double> RunConfig::theta_radians() const {
  return tiltbeam::theta_grid(theta_grid.start_deg, theta_grid.stop_deg, theta_grid.step_deg);
}

ExcitationWeights RunConfig::excitation() const { return {weights.s1, weights.s2}; }

ArrayLayout RunConfig::scan_layout() const {
  const double pitch =
      scan.spacing_mm ? *scan.spacing_mm * 1e-3 : 0.5 * FrequencyContext(center_frequency_hz()).wavelength();
  return ArrayLayout{scan.count, 1, pitch, 0.0};
}

std::vector<SteeringCommand> RunConfig::scan_commands() const {
  std::vector<SteeringCommand> out;
  for (double deg : scan.commands_deg) out.push_back({deg_to_rad(deg)});
  return out;
}

}  // namespace tiltbeam
