#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "racebench/geometry.hpp"

namespace racebench {

enum class Occupancy : std::uint8_t {
  kFree = 0,
  kOccupied = 1,
  kUnknown = 2,
};

// Map-server style metadata. `origin` is the world pose of the corner of
// cell (0, 0).
struct MapMeta {
  std::string image;
  double resolution{0.05};
  Pose2D origin;
  bool negate{false};
  double occupied_thresh{0.65};
  double free_thresh{0.196};
};

class GridMap {
 public:
  GridMap(int width, int height, double resolution, Pose2D origin, std::vector<Occupancy> cells);

  int width() const { return width_; }
  int height() const { return height_; }
  double resolution() const { return resolution_; }
  const Pose2D& origin() const { return origin_; }

  Occupancy at(int ix, int iy) const { return cells_[static_cast<std::size_t>(iy) * width_ + ix]; }
  bool cell_in_bounds(int ix, int iy) const {
    return ix >= 0 && iy >= 0 && ix < width_ && iy < height_;
  }

  // Occupied and unknown cells both block rays and count as collisions.
  bool blocked(int ix, int iy) const { return at(ix, iy) != Occupancy::kFree; }

  // World <-> map-frame transforms honoring the origin pose.
  Vec2 world_to_map(const Vec2& p) const;
  Vec2 map_to_world(const Vec2& p) const;

  std::optional<std::pair<int, int>> world_to_cell(double x, double y) const;
  // World position of a cell's center.
  Vec2 cell_center(int ix, int iy) const;

  bool world_in_bounds(double x, double y) const { return world_to_cell(x, y).has_value(); }

 private:
  int width_;
  int height_;
  double resolution_;
  Pose2D origin_;
  std::vector<Occupancy> cells_;
};

// Decodes a binary 8-bit grayscale PGM (P5) per the map-server rule:
// p = (255 - pixel) / 255, inverted when negate is set; p >= occupied_thresh
// is occupied, p <= free_thresh is free, anything between is unknown. Image
// rows are flipped so cell (0, 0) sits at the origin corner.
GridMap load_map(std::span<const std::uint8_t> pgm_bytes, const MapMeta& meta);

// Reads the metadata file (keys image, resolution, origin, negate,
// occupied_thresh, free_thresh) and the image it references, resolved
// relative to the metadata file's directory.
GridMap load_map_file(const std::filesystem::path& meta_path);

MapMeta parse_map_meta(const std::filesystem::path& meta_path);

}  // namespace racebench
