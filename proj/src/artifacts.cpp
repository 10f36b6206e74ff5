#include "tiltbeam/artifacts.hpp"

#include <fcntl.h>
#include <unistd.h>

#include <algorithm>
#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <sstream>

#include "tiltbeam/constants.hpp"
#include "tiltbeam/errors.hpp"

namespace tiltbeam {

std::string format_number(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  if (value == 0.0) value = 0.0;  // drop the sign of -0
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.9g", value);
  return buf;
}

CsvTable::CsvTable(std::vector<std::string> header) : header_(std::move(header)) {
  if (header_.empty()) throw DomainError("csv header must not be empty");
}

void CsvTable::add_row(std::vector<std::string> cells) {
  if (cells.size() != header_.size()) throw DomainError("csv row width differs from header");
  rows_.push_back(std::move(cells));
}

void CsvTable::add_row(std::initializer_list<double> values) {
  std::vector<std::string> cells;
  for (double v : values) cells.push_back(format_number(v));
  add_row(std::move(cells));
}

std::string CsvTable::str() const {
  std::string out;
  auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) out += ',';
      out += cells[i];
    }
    out += '\n';
  };
  line(header_);
  for (const auto& row : rows_) line(row);
  return out;
}

namespace {

constexpr double kSize = 440.0;
constexpr double kCentre = 220.0;
constexpr double kRadius = 170.0;

std::string fixed(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  std::string s = buf;
  if (s == "-0.000") s = "0.000";
  return s;
}

double radius_for_db(double db) {
  const double clipped = std::clamp(db, kPolarFloorDb, 0.0);
  return kRadius * (clipped - kPolarFloorDb) / -kPolarFloorDb;
}

// theta from the board normal, positive towards the right of the plot.
std::pair<double, double> polar_point(double theta, double r) {
  return {kCentre + r * std::sin(theta), kCentre - r * std::cos(theta)};
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace

std::string render_polar_svg(const PatternCut& cut, const PatternMetrics& annotations,
                             const std::string& title) {
  const std::size_t n = std::min(cut.theta.size(), cut.values.size());
  double peak = 0.0;
  for (std::size_t i = 0; i < n; ++i) peak = std::max(peak, std::abs(cut.values[i]));
  const double scale = cut.normalized || !(peak > 0.0) ? 1.0 : 1.0 / peak;

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fixed(kSize) << "\" height=\""
      << fixed(kSize) << "\" viewBox=\"0 0 " << fixed(kSize) << ' ' << fixed(kSize) << "\">\n";
  svg << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  if (!title.empty())
    svg << "<text x=\"" << fixed(kCentre) << "\" y=\"20.000\" text-anchor=\"middle\" "
        << "font-family=\"sans-serif\" font-size=\"13\">" << escape(title) << "</text>\n";

  // dB rings every 10 dB and spokes every 30 deg.
  for (int db = 0; db >= static_cast<int>(kPolarFloorDb); db -= 10) {
    const double r = radius_for_db(db);
    if (r > 0.0)
      svg << "<circle cx=\"" << fixed(kCentre) << "\" cy=\"" << fixed(kCentre) << "\" r=\"" << fixed(r)
          << "\" fill=\"none\" stroke=\"#cccccc\" stroke-width=\"0.8\"/>\n";
    svg << "<text x=\"" << fixed(kCentre + 2.0) << "\" y=\"" << fixed(kCentre - r - 2.0)
        << "\" font-family=\"sans-serif\" font-size=\"9\" fill=\"#666666\">" << db << " dB</text>\n";
  }
  for (int deg = -180; deg < 180; deg += 30) {
    const auto [x, y] = polar_point(deg_to_rad(deg), kRadius);
    svg << "<line x1=\"" << fixed(kCentre) << "\" y1=\"" << fixed(kCentre) << "\" x2=\"" << fixed(x)
        << "\" y2=\"" << fixed(y) << "\" stroke=\"#e0e0e0\" stroke-width=\"0.6\"/>\n";
    const auto [lx, ly] = polar_point(deg_to_rad(deg), kRadius + 14.0);
    svg << "<text x=\"" << fixed(lx) << "\" y=\"" << fixed(ly + 3.0)
        << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"9\">" << deg
        << "</text>\n";
  }

  auto point_for = [&](std::size_t i) {
    const double mag = std::abs(cut.values[i]) * scale;
    const double db = mag > 0.0 ? 20.0 * std::log10(mag) : kPolarFloorDb;
    return polar_point(cut.theta[i], radius_for_db(db));
  };

  if (n == 1) {
    const auto [x, y] = point_for(0);
    svg << "<circle class=\"sample\" cx=\"" << fixed(x) << "\" cy=\"" << fixed(y)
        << "\" r=\"3.000\" fill=\"#1f4e9c\"/>\n";
  } else if (n > 1) {
    svg << "<polyline class=\"pattern\" fill=\"none\" stroke=\"#1f4e9c\" stroke-width=\"1.5\" points=\"";
    for (std::size_t i = 0; i < n; ++i) {
      const auto [x, y] = point_for(i);
      if (i) svg << ' ';
      svg << fixed(x) << ',' << fixed(y);
    }
    svg << "\"/>\n";
  }

  if (n > 0) {
    const double tilt = deg_to_rad(annotations.tilt_deg);
    const auto [x, y] = polar_point(tilt, kRadius);
    svg << "<line class=\"tilt-marker\" x1=\"" << fixed(kCentre) << "\" y1=\"" << fixed(kCentre)
        << "\" x2=\"" << fixed(x) << "\" y2=\"" << fixed(y)
        << "\" stroke=\"#c0392b\" stroke-width=\"1.2\" stroke-dasharray=\"4 3\"/>\n";
  }
  const std::string sll =
      annotations.has_sidelobe() ? format_number(annotations.sll_db) + " dB" : "none";
  svg << "<text class=\"annotation\" x=\"10.000\" y=\"" << fixed(kSize - 24.0)
      << "\" font-family=\"sans-serif\" font-size=\"11\">tilt " << format_number(annotations.tilt_deg)
      << " deg</text>\n";
  svg << "<text class=\"annotation\" x=\"10.000\" y=\"" << fixed(kSize - 10.0)
      << "\" font-family=\"sans-serif\" font-size=\"11\">SLL " << sll << "</text>\n";
  svg << "</svg>\n";
  return svg.str();
}

void write_artifacts(const std::filesystem::path& dir, const std::vector<Artifact>& artifacts) {
  namespace fs = std::filesystem;
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw IoError("cannot create output directory " + dir.string() + ": " + ec.message());

  std::vector<fs::path> temps;
  auto cleanup = [&] {
    for (const auto& t : temps) fs::remove(t, ec);
  };
  for (const Artifact& a : artifacts) {
    const fs::path tmp = dir / ("." + a.name + ".tmp");
    temps.push_back(tmp);
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    out << a.content;
    out.close();
    if (!out) {
      cleanup();
      throw IoError("cannot write " + tmp.string());
    }
  }
  // Commit. Existing files are moved aside first so a failed rename can be
  // rolled back to the previous state.
  std::vector<fs::path> committed;
  std::vector<std::pair<fs::path, fs::path>> backups;  // (backup, target)
  auto rollback = [&] {
    for (const auto& t : committed) fs::remove(t, ec);
    for (const auto& [bak, target] : backups) fs::rename(bak, target, ec);
    cleanup();
  };
  for (std::size_t i = 0; i < artifacts.size(); ++i) {
    const fs::path target = dir / artifacts[i].name;
    if (fs::is_regular_file(target, ec)) {
      const fs::path bak = dir / ("." + artifacts[i].name + ".bak");
      fs::rename(target, bak, ec);
      if (ec) {
        const std::string why = ec.message();
        rollback();
        throw IoError("cannot replace " + target.string() + ": " + why);
      }
      backups.emplace_back(bak, target);
    }
    fs::rename(temps[i], target, ec);
    if (ec) {
      const std::string why = ec.message();
      rollback();
      throw IoError("cannot rename into " + target.string() + ": " + why);
    }
    committed.push_back(target);
  }
  for (const auto& b : backups) fs::remove(b.first, ec);
}

OutputLock::OutputLock(const std::filesystem::path& dir) : path_(dir / kLockFileName) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw IoError("cannot create output directory " + dir.string() + ": " + ec.message());
  const int fd = ::open(path_.c_str(), O_CREAT | O_EXCL | O_WRONLY, 0644);
  if (fd < 0) {
    if (errno == EEXIST)
      throw IoError("output directory " + dir.string() + " is locked by another run (" +
                    path_.string() + ")");
    throw IoError("cannot create lock file " + path_.string() + ": " + std::strerror(errno));
  }
  const std::string pid = std::to_string(::getpid()) + "\n";
  [[maybe_unused]] const auto written = ::write(fd, pid.data(), pid.size());
  ::close(fd);
}

OutputLock::~OutputLock() {
  std::error_code ec;
  std::filesystem::remove(path_, ec);
}

}  // namespace tiltbeam
