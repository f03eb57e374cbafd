#include "racebench/traj_io.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "racebench/errors.hpp"

namespace racebench {

std::optional<FormatKind> format_from_name(std::string_view name) {
  if (name == "tum") return FormatKind::kTum;
  if (name == "kitti") return FormatKind::kKitti;
  if (name == "csv") return FormatKind::kCsv;
  return std::nullopt;
}

const char* format_name(FormatKind kind) {
  switch (kind) {
    case FormatKind::kTum: return "tum";
    case FormatKind::kKitti: return "kitti";
    case FormatKind::kCsv: return "csv";
  }
  return "?";
}

std::string format_double(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

namespace {

std::optional<double> parse_double(std::string_view token) {
  if (!token.empty() && token.front() == '+') token.remove_prefix(1);
  double value = 0.0;
  const auto res = std::from_chars(token.data(), token.data() + token.size(), value);
  if (res.ec != std::errc() || res.ptr != token.data() + token.size()) return std::nullopt;
  return value;
}

double parse_finite(std::string_view token, std::size_t line) {
  const auto v = parse_double(token);
  if (!v || !std::isfinite(*v)) {
    throw ParseError(ParseError::Code::kNonNumeric, line,
                     "expected a finite number, got '" + std::string(token) + "'");
  }
  return *v;
}

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

// Calls fn(line_number, line) for every line, CRLF tolerated, comments and
// blanks skipped.
template <typename Fn>
void for_each_data_line(std::string_view text, Fn&& fn) {
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find('\n', pos), text.size());
    ++line_no;
    std::string_view line = text.substr(pos, end - pos);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    const std::string_view stripped = trim(line);
    if (!stripped.empty() && stripped.front() != '#') {
      fn(line_no, stripped);
    }
    if (end == text.size()) break;
    pos = end + 1;
  }
}

Quat quat_from_rotation(const Eigen::Matrix3d& rot) {
  const Eigen::Quaterniond q(rot);
  const Eigen::Quaterniond n = q.normalized();
  return {n.w(), n.x(), n.y(), n.z()};
}

Eigen::Matrix3d rotation_from_quat(const Quat& q) {
  return Eigen::Quaterniond(q.w, q.x, q.y, q.z).normalized().toRotationMatrix();
}

}  // namespace

Trajectory parse_tum(std::string_view text) {
  Trajectory traj;
  traj.has_time = true;
  for_each_data_line(text, [&](std::size_t line_no, std::string_view line) {
    const auto fields = split_ws(line);
    if (fields.size() != 8) {
      throw ParseError(ParseError::Code::kBadFieldCount, line_no,
                       "TUM line needs 8 fields, got " + std::to_string(fields.size()));
    }
    TrajSample s;
    s.t = parse_finite(fields[0], line_no);
    s.x = parse_finite(fields[1], line_no);
    s.y = parse_finite(fields[2], line_no);
    s.z = parse_finite(fields[3], line_no);
    const double qx = parse_finite(fields[4], line_no);
    const double qy = parse_finite(fields[5], line_no);
    const double qz = parse_finite(fields[6], line_no);
    const double qw = parse_finite(fields[7], line_no);
    const Quat raw{qw, qx, qy, qz};
    if (raw.norm() < 1e-12) {
      throw ParseError(ParseError::Code::kNonNumeric, line_no, "zero-norm quaternion");
    }
    s.q = raw.normalized();
    if (!traj.samples.empty() && s.t < traj.samples.back().t) {
      throw ParseError(ParseError::Code::kNonMonotonicTime, line_no,
                       "timestamp " + format_double(s.t) + " precedes " +
                           format_double(traj.samples.back().t));
    }
    traj.samples.push_back(s);
  });
  return traj;
}

Trajectory parse_kitti(std::string_view text) {
  Trajectory traj;
  traj.has_time = false;
  for_each_data_line(text, [&](std::size_t line_no, std::string_view line) {
    const auto fields = split_ws(line);
    if (fields.size() != 12) {
      throw ParseError(ParseError::Code::kBadFieldCount, line_no,
                       "KITTI line needs 12 fields, got " + std::to_string(fields.size()));
    }
    double m[12];
    for (int i = 0; i < 12; ++i) m[i] = parse_finite(fields[static_cast<std::size_t>(i)], line_no);

    Eigen::Matrix3d rot;
    rot << m[0], m[1], m[2], m[4], m[5], m[6], m[8], m[9], m[10];
    const double ortho_err = (rot.transpose() * rot - Eigen::Matrix3d::Identity()).norm();
    if (ortho_err > 1e-3) {
      throw ParseError(ParseError::Code::kNonRotation, line_no,
                       "||R^T R - I|| = " + format_double(ortho_err) + " exceeds 1e-3");
    }
    if (rot.determinant() <= 0.0) {
      throw ParseError(ParseError::Code::kNonRotation, line_no, "det(R) <= 0");
    }
    // Nearest orthonormal matrix (polar factor); exact inputs pass through
    // to machine precision.
    const Eigen::JacobiSVD<Eigen::Matrix3d> svd(rot,
                                                Eigen::ComputeFullU | Eigen::ComputeFullV);
    const Eigen::Matrix3d repaired = svd.matrixU() * svd.matrixV().transpose();

    TrajSample s;
    s.t = static_cast<double>(traj.samples.size());
    s.x = m[3];
    s.y = m[7];
    s.z = m[11];
    s.q = quat_from_rotation(repaired);
    traj.samples.push_back(s);
  });
  return traj;
}

CsvTrajectory parse_csv(std::string_view text) {
  std::vector<std::pair<std::size_t, std::string_view>> lines;
  for_each_data_line(text, [&](std::size_t line_no, std::string_view line) {
    lines.emplace_back(line_no, line);
  });
  if (lines.empty()) {
    throw ParseError(ParseError::Code::kEmptyFile, 0, "no header line found");
  }

  const auto split_csv = [](std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t pos = 0;
    while (true) {
      const std::size_t comma = line.find(',', pos);
      if (comma == std::string_view::npos) {
        out.push_back(trim(line.substr(pos)));
        break;
      }
      out.push_back(trim(line.substr(pos, comma - pos)));
      pos = comma + 1;
    }
    return out;
  };

  const auto header = split_csv(lines.front().second);
  const auto column = [&](std::string_view name) -> std::optional<std::size_t> {
    for (std::size_t i = 0; i < header.size(); ++i) {
      std::string lowered(header[i]);
      std::transform(lowered.begin(), lowered.end(), lowered.begin(),
                     [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
      if (lowered == name) return i;
    }
    return std::nullopt;
  };

  const auto col_x = column("x");
  const auto col_y = column("y");
  if (!col_x) throw ParseError(ParseError::Code::kMissingColumn, lines.front().first, "x");
  if (!col_y) throw ParseError(ParseError::Code::kMissingColumn, lines.front().first, "y");
  const auto col_t = column("t");
  const auto col_z = column("z");
  const auto col_yaw = column("yaw");
  const auto col_speed = column("speed");

  CsvTrajectory out;
  out.trajectory.has_time = col_t.has_value();
  if (col_speed) out.speeds.emplace();

  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto [line_no, line] = lines[i];
    const auto fields = split_csv(line);
    if (fields.size() != header.size()) {
      throw ParseError(ParseError::Code::kBadFieldCount, line_no,
                       "row has " + std::to_string(fields.size()) + " fields, header has " +
                           std::to_string(header.size()));
    }
    TrajSample s;
    s.t = col_t ? parse_finite(fields[*col_t], line_no)
                : static_cast<double>(out.trajectory.samples.size());
    s.x = parse_finite(fields[*col_x], line_no);
    s.y = parse_finite(fields[*col_y], line_no);
    s.z = col_z ? parse_finite(fields[*col_z], line_no) : 0.0;
    s.q = yaw_to_quat(col_yaw ? parse_finite(fields[*col_yaw], line_no) : 0.0);
    if (col_t && !out.trajectory.samples.empty() && s.t < out.trajectory.samples.back().t) {
      throw ParseError(ParseError::Code::kNonMonotonicTime, line_no,
                       "timestamp " + format_double(s.t) + " precedes " +
                           format_double(out.trajectory.samples.back().t));
    }
    if (col_speed) out.speeds->push_back(parse_finite(fields[*col_speed], line_no));
    out.trajectory.samples.push_back(s);
  }
  return out;
}

std::string write_tum(const Trajectory& traj) {
  std::string out;
  for (const auto& s : traj.samples) {
    out += format_double(s.t);
    out += ' ';
    out += format_double(s.x);
    out += ' ';
    out += format_double(s.y);
    out += ' ';
    out += format_double(s.z);
    out += ' ';
    out += format_double(s.q.x);
    out += ' ';
    out += format_double(s.q.y);
    out += ' ';
    out += format_double(s.q.z);
    out += ' ';
    out += format_double(s.q.w);
    out += '\n';
  }
  return out;
}

std::string write_kitti(const Trajectory& traj) {
  std::string out;
  for (const auto& s : traj.samples) {
    const Eigen::Matrix3d rot = rotation_from_quat(s.q);
    const double t[3] = {s.x, s.y, s.z};
    for (int row = 0; row < 3; ++row) {
      for (int col = 0; col < 3; ++col) {
        out += format_double(rot(row, col));
        out += ' ';
      }
      out += format_double(t[row]);
      out += row == 2 ? '\n' : ' ';
    }
  }
  return out;
}

std::string write_csv(const Trajectory& traj, const std::vector<double>* speeds) {
  if (speeds != nullptr && speeds->size() != traj.samples.size()) {
    throw LengthMismatch("speed column length does not match sample count");
  }
  std::string out = speeds != nullptr ? "t,x,y,z,yaw,speed\n" : "t,x,y,z,yaw\n";
  for (std::size_t i = 0; i < traj.samples.size(); ++i) {
    const auto& s = traj.samples[i];
    out += format_double(s.t);
    out += ',';
    out += format_double(s.x);
    out += ',';
    out += format_double(s.y);
    out += ',';
    out += format_double(s.z);
    out += ',';
    out += format_double(s.yaw());
    if (speeds != nullptr) {
      out += ',';
      out += format_double((*speeds)[i]);
    }
    out += '\n';
  }
  return out;
}

Trajectory parse_trajectory(std::string_view text, FormatKind kind) {
  switch (kind) {
    case FormatKind::kTum: return parse_tum(text);
    case FormatKind::kKitti: return parse_kitti(text);
    case FormatKind::kCsv: return parse_csv(text).trajectory;
  }
  throw std::invalid_argument("unknown trajectory format");
}

Trajectory load_trajectory_file(const std::filesystem::path& path, FormatKind kind) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw IoFailure("cannot open trajectory file: " + path.string());
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_trajectory(buf.str(), kind);
}

FormatKind guess_format(const std::filesystem::path& path) {
  const std::string ext = path.extension().string();
  if (ext == ".csv") return FormatKind::kCsv;
  if (ext == ".kitti") return FormatKind::kKitti;
  return FormatKind::kTum;
}

}  // namespace racebench
