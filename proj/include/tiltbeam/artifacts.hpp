#pragma once

#include <filesystem>
#include <initializer_list>
#include <string>
#include <vector>

#include "tiltbeam/synthesis.hpp"

namespace tiltbeam {

/// Nine significant digits, "%.9g". Negative zero prints as 0; infinities
/// as inf / -inf.
std::string format_number(double value);

/// Comma-separated table with a mandatory header row and LF line endings.
class CsvTable {
 public:
  explicit CsvTable(std::vector<std::string> header);

  /// Throws DomainError if the row width differs from the header.
  void add_row(std::vector<std::string> cells);
  void add_row(std::initializer_list<double> values);

  std::size_t rows() const noexcept { return rows_.size(); }
  std::string str() const;

 private:
  std::vector<std::string> header_;
  std::vector<std::vector<std::string>> rows_;
};

/// Polar plot of a cut in dB, 0 deg (board normal) at the top, radial axis
/// from -40 dB (centre) to 0 dB (outer ring). Draws a tilt marker and an SLL
/// label from `annotations`. A one-sample cut is drawn as a single marker.
/// Cuts not flagged normalized are scaled to unit peak before plotting.
std::string render_polar_svg(const PatternCut& cut, const PatternMetrics& annotations,
                             const std::string& title = "");

inline constexpr double kPolarFloorDb = -40.0;

struct Artifact {
  std::string name;  // file name inside the output directory
  std::string content;
};

/// Writes every artifact to a temporary file, then renames them all into
/// place. On any failure the temporaries are removed and IoError is thrown.
void write_artifacts(const std::filesystem::path& dir, const std::vector<Artifact>& artifacts);

/// Exclusive per-directory lock (".tiltbeam.lock", created with O_EXCL).
/// Throws IoError if another process holds it.
class OutputLock {
 public:
  explicit OutputLock(const std::filesystem::path& dir);
  ~OutputLock();
  OutputLock(const OutputLock&) = delete;
  OutputLock& operator=(const OutputLock&) = delete;

 private:
  std::filesystem::path path_;
};

inline constexpr const char* kLockFileName = ".tiltbeam.lock";

}  // namespace tiltbeam
