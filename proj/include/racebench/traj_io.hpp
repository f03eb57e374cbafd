#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "racebench/trajectory.hpp"

namespace racebench {

enum class FormatKind { kTum, kKitti, kCsv };

std::optional<FormatKind> format_from_name(std::string_view name);
const char* format_name(FormatKind kind);

// TUM: one sample per line, 8 whitespace-separated fields
// "t x y z qx qy qz qw". '#' comments and blank lines are skipped.
Trajectory parse_tum(std::string_view text);

// KITTI: 12 whitespace-separated fields per line, the row-major 3x4 pose
// matrix [R | t]. No timestamps; t becomes the line index. Mildly
// non-orthonormal rotations (||R^T R - I||_F <= 1e-3) are repaired via polar
// decomposition, anything worse or with det <= 0 is rejected.
Trajectory parse_kitti(std::string_view text);

struct CsvTrajectory {
  Trajectory trajectory;
  std::optional<std::vector<double>> speeds;
};

// CSV with a header line naming the columns; x and y are required, t, z,
// yaw and speed are optional. '#' comments allowed before and after the
// header.
CsvTrajectory parse_csv(std::string_view text);

std::string write_tum(const Trajectory& traj);
std::string write_kitti(const Trajectory& traj);
std::string write_csv(const Trajectory& traj, const std::vector<double>* speeds = nullptr);

Trajectory parse_trajectory(std::string_view text, FormatKind kind);
Trajectory load_trajectory_file(const std::filesystem::path& path, FormatKind kind);

// Extension-based guess: .csv -> csv, .kitti -> kitti, anything else tum.
FormatKind guess_format(const std::filesystem::path& path);

// Shortest exact decimal representation of v (round-trips bit-identically).
std::string format_double(double v);

}  // namespace racebench
