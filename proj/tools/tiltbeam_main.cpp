// tiltbeam <command> --config <path> [--out <dir>] [--svg]

#include <algorithm>
#include <iostream>

#include <CLI11.hpp>

#include "tiltbeam/commands.hpp"
#include "tiltbeam/config.hpp"
#include "tiltbeam/errors.hpp"

namespace {

std::string command_list() {
  std::string s;
  for (const auto& name : tiltbeam::command_names()) s += (s.empty() ? "" : ", ") + name;
  return s;
}

}  // namespace

int main(int argc, char** argv) {
  using tiltbeam::ExitCode;

  CLI::App app{"Tilted-beam antenna model: patterns, sweeps, scan and loss studies"};
  std::string command;
  std::string config_path;
  std::string out_dir;
  bool svg = false;
  app.add_option("command", command, "one of: " + command_list())->required();
  app.add_option("--config", config_path, "JSON config file")->required();
  app.add_option("--out", out_dir, "output directory (overrides output_dir in the config)");
  app.add_flag("--svg", svg, "also write polar plots");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return static_cast<int>(ExitCode::Usage);
  }

  const auto& names = tiltbeam::command_names();
  if (std::find(names.begin(), names.end(), command) == names.end()) {
    std::cerr << "usage error: unknown command \"" << command << "\" (expected " << command_list()
              << ")\n";
    return static_cast<int>(ExitCode::Usage);
  }

  tiltbeam::RunConfig config;
  try {
    config = tiltbeam::load_config(config_path);
  } catch (const tiltbeam::IoError& e) {
    std::cerr << "i/o error: " << e.what() << '\n';
    return static_cast<int>(ExitCode::Io);
  } catch (const tiltbeam::ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return static_cast<int>(ExitCode::Config);
  } catch (const tiltbeam::ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return static_cast<int>(ExitCode::Config);
  }

  tiltbeam::RunOptions options;
  if (!out_dir.empty()) options.output_dir = out_dir;
  options.svg = svg;
  return static_cast<int>(tiltbeam::run_command(command, config, options, std::cerr));
}
