#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tiltbeam/artifacts.hpp"
#include "tiltbeam/config.hpp"
#include "tiltbeam/errors.hpp"

namespace tiltbeam {

enum class ExitCode : int {
  Ok = 0,
  Internal = 1,
  Usage = 2,
  Convergence = 3,
  Config = 4,  // invalid config, parse error or out-of-domain input
  Io = 5,
};

/// pattern, ratio-sweep, stability, scan, resonance, loss.
const std::vector<std::string>& command_names();

/// Computes the artifacts of one command without touching the filesystem.
/// Throws on any failure; an unknown name raises UsageError.
std::vector<Artifact> build_artifacts(std::string_view command, const RunConfig& config,
                                      bool with_svg);

class UsageError : public Error {
 public:
  using Error::Error;
};

struct RunOptions {
  std::optional<std::filesystem::path> output_dir;  // overrides config.output_dir
  bool svg = false;
};

/// Runs a command and writes its artifacts atomically under a per-directory
/// lock. Errors are reported on `err`; the return value is the exit code.
/// A convergence failure names the operation that failed.
ExitCode run_command(std::string_view command, const RunConfig& config, const RunOptions& options,
                     std::ostream& err);

}  // namespace tiltbeam
