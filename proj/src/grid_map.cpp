#include "racebench/grid_map.hpp"

#include <yaml-cpp/yaml.h>

#include <cmath>
#include <fstream>
#include <stdexcept>

#include "racebench/errors.hpp"

namespace racebench {

GridMap::GridMap(int width, int height, double resolution, Pose2D origin,
                 std::vector<Occupancy> cells)
    : width_(width), height_(height), resolution_(resolution), origin_(origin),
      cells_(std::move(cells)) {
  if (width_ <= 0 || height_ <= 0) {
    throw std::invalid_argument("grid dimensions must be positive");
  }
  if (resolution_ <= 0.0) {
    throw std::invalid_argument("grid resolution must be positive");
  }
  if (cells_.size() != static_cast<std::size_t>(width_) * height_) {
    throw std::invalid_argument("cell count does not match width*height");
  }
}

Vec2 GridMap::world_to_map(const Vec2& p) const {
  const double c = std::cos(origin_.yaw);
  const double s = std::sin(origin_.yaw);
  const double dx = p.x - origin_.x;
  const double dy = p.y - origin_.y;
  return {c * dx + s * dy, -s * dx + c * dy};
}

Vec2 GridMap::map_to_world(const Vec2& p) const {
  const double c = std::cos(origin_.yaw);
  const double s = std::sin(origin_.yaw);
  return {origin_.x + c * p.x - s * p.y, origin_.y + s * p.x + c * p.y};
}

std::optional<std::pair<int, int>> GridMap::world_to_cell(double x, double y) const {
  const Vec2 m = world_to_map({x, y});
  const int ix = static_cast<int>(std::floor(m.x / resolution_));
  const int iy = static_cast<int>(std::floor(m.y / resolution_));
  if (!cell_in_bounds(ix, iy)) return std::nullopt;
  return std::make_pair(ix, iy);
}

Vec2 GridMap::cell_center(int ix, int iy) const {
  return map_to_world({(ix + 0.5) * resolution_, (iy + 0.5) * resolution_});
}

namespace {

// Reads one whitespace-delimited PGM header token, skipping '#' comments.
std::string next_pgm_token(std::span<const std::uint8_t> bytes, std::size_t& pos) {
  while (pos < bytes.size()) {
    const char c = static_cast<char>(bytes[pos]);
    if (c == '#') {
      while (pos < bytes.size() && bytes[pos] != '\n') ++pos;
    } else if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
      ++pos;
    } else {
      break;
    }
  }
  std::string token;
  while (pos < bytes.size()) {
    const char c = static_cast<char>(bytes[pos]);
    if (c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '#') break;
    token += c;
    ++pos;
  }
  return token;
}

int parse_header_int(std::span<const std::uint8_t> bytes, std::size_t& pos, const char* what) {
  const std::string token = next_pgm_token(bytes, pos);
  try {
    std::size_t consumed = 0;
    const int value = std::stoi(token, &consumed);
    if (consumed != token.size() || value <= 0) throw std::invalid_argument(token);
    return value;
  } catch (const std::exception&) {
    throw ParseError(ParseError::Code::kMalformedImage, 0,
                     std::string("bad PGM ") + what + " token '" + token + "'");
  }
}

}  // namespace

GridMap load_map(std::span<const std::uint8_t> pgm_bytes, const MapMeta& meta) {
  if (meta.occupied_thresh <= meta.free_thresh) {
    throw ParseError(ParseError::Code::kBadThresholds, 0,
                     "occupied_thresh must exceed free_thresh");
  }
  if (meta.resolution <= 0.0) {
    throw ParseError(ParseError::Code::kBadThresholds, 0, "resolution must be positive");
  }

  std::size_t pos = 0;
  const std::string magic = next_pgm_token(pgm_bytes, pos);
  if (magic != "P5") {
    throw ParseError(ParseError::Code::kMalformedImage, 0,
                     "expected binary PGM magic 'P5', got '" + magic + "'");
  }
  const int width = parse_header_int(pgm_bytes, pos, "width");
  const int height = parse_header_int(pgm_bytes, pos, "height");
  const int maxval = parse_header_int(pgm_bytes, pos, "maxval");
  if (maxval != 255) {
    throw ParseError(ParseError::Code::kMalformedImage, 0,
                     "only 8-bit PGM supported (maxval 255), got " + std::to_string(maxval));
  }
  if (pos >= pgm_bytes.size()) {
    throw ParseError(ParseError::Code::kMalformedImage, 0, "missing pixel data");
  }
  ++pos;  // single whitespace byte after maxval

  const std::size_t expected = static_cast<std::size_t>(width) * height;
  if (pgm_bytes.size() - pos != expected) {
    throw ParseError(ParseError::Code::kDimensionMismatch, 0,
                     "pixel payload is " + std::to_string(pgm_bytes.size() - pos) +
                         " bytes, header says " + std::to_string(expected));
  }

  std::vector<Occupancy> cells(expected);
  for (int iy = 0; iy < height; ++iy) {
    // Image row 0 is the top of the picture; cell row 0 is the origin corner.
    const std::uint8_t* row = pgm_bytes.data() + pos + static_cast<std::size_t>(height - 1 - iy) * width;
    for (int ix = 0; ix < width; ++ix) {
      const double p = meta.negate ? row[ix] / 255.0 : (255.0 - row[ix]) / 255.0;
      Occupancy occ = Occupancy::kUnknown;
      if (p >= meta.occupied_thresh) {
        occ = Occupancy::kOccupied;
      } else if (p <= meta.free_thresh) {
        occ = Occupancy::kFree;
      }
      cells[static_cast<std::size_t>(iy) * width + ix] = occ;
    }
  }

  return GridMap(width, height, meta.resolution, meta.origin, std::move(cells));
}

MapMeta parse_map_meta(const std::filesystem::path& meta_path) {
  YAML::Node root;
  try {
    root = YAML::LoadFile(meta_path.string());
  } catch (const YAML::BadFile&) {
    throw IoFailure("cannot open map metadata file: " + meta_path.string());
  } catch (const YAML::Exception& e) {
    throw ParseError(ParseError::Code::kMalformedImage, e.mark.line + 1,
                     "bad map metadata: " + std::string(e.what()));
  }

  MapMeta meta;
  try {
    meta.image = root["image"].as<std::string>();
    meta.resolution = root["resolution"].as<double>();
    const auto origin = root["origin"];
    meta.origin = Pose2D(origin[0].as<double>(), origin[1].as<double>(),
                         origin.size() > 2 ? origin[2].as<double>() : 0.0);
    if (root["negate"]) meta.negate = root["negate"].as<int>() != 0;
    if (root["occupied_thresh"]) meta.occupied_thresh = root["occupied_thresh"].as<double>();
    if (root["free_thresh"]) meta.free_thresh = root["free_thresh"].as<double>();
  } catch (const YAML::Exception& e) {
    throw ParseError(ParseError::Code::kMalformedImage, e.mark.line + 1,
                     "bad map metadata: " + std::string(e.what()));
  }
  return meta;
}

GridMap load_map_file(const std::filesystem::path& meta_path) {
  const MapMeta meta = parse_map_meta(meta_path);
  std::filesystem::path image_path(meta.image);
  if (image_path.is_relative()) {
    image_path = meta_path.parent_path() / image_path;
  }
  std::ifstream in(image_path, std::ios::binary);
  if (!in) {
    throw IoFailure("cannot open map image: " + image_path.string());
  }
  std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                                  std::istreambuf_iterator<char>());
  return load_map(bytes, meta);
}

}  // namespace racebench
