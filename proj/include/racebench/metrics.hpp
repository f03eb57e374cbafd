#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "racebench/geometry.hpp"
#include "racebench/trajectory.hpp"

namespace racebench {

// Monotone timestamp pairing between a reference and an estimate.
struct Association {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;  // (ref index, est index)
  double max_t_diff{0.0};

  std::size_t size() const { return pairs.size(); }
};

// Greedy nearest-timestamp matching that preserves monotonicity in both
// index sequences. Falls back to index pairing (i <-> i) when either
// trajectory lacks timestamps. Throws NoMatches when nothing pairs up.
Association associate(const Trajectory& ref, const Trajectory& est, double max_t_diff);

// Planar similarity transform: p_ref ~ scale * rotation * p_est + translation.
struct AlignmentTransform {
  double rotation[2][2]{{1.0, 0.0}, {0.0, 1.0}};
  Vec2 translation;
  double scale{1.0};

  Vec2 apply(const Vec2& p) const {
    return {scale * (rotation[0][0] * p.x + rotation[0][1] * p.y) + translation.x,
            scale * (rotation[1][0] * p.x + rotation[1][1] * p.y) + translation.y};
  }

  double yaw_offset() const;

  static AlignmentTransform identity() { return {}; }
  static AlignmentTransform from_parts(double theta, Vec2 translation, double scale);
};

// Closed-form least-squares similarity (or rigid when with_scale is false)
// transform minimizing sum ||ref_i - (s R est_i + t)||^2. Throws
// DegenerateInput when all estimate points coincide (or, with scale, when
// the optimum would collapse to scale 0).
AlignmentTransform umeyama_align(const std::vector<Vec2>& ref, const std::vector<Vec2>& est,
                                 bool with_scale);

enum class AlignMode { kNone, kRigid, kSimilarity };
enum class ErrorRelation { kTranslation, kYaw };

const char* align_mode_name(AlignMode mode);
const char* error_relation_name(ErrorRelation relation);

struct ErrorPoint {
  double x{0.0};
  double y{0.0};
  double error{0.0};
};

struct ErrorSeries {
  std::vector<double> values;
  std::vector<ErrorPoint> points;
};

// Aggregate statistics; std uses the population convention, so
// std^2 + mean^2 == rmse^2 and rmse^2 * n == sse.
struct MetricStats {
  double mean{0.0};
  double rmse{0.0};
  double median{0.0};
  double std_dev{0.0};
  double min{0.0};
  double max{0.0};
  double sse{0.0};
};

MetricStats compute_stats(const std::vector<double>& values);

struct ApeResult {
  ErrorSeries series;
  MetricStats stats;
  AlignmentTransform transform;
  Association assoc;
};

// Absolute pose error: optionally aligns est onto ref, then compares poses
// pairwise. Translation errors are Euclidean distances, yaw errors are
// wrapped absolute differences.
ApeResult ape(const Trajectory& ref, const Trajectory& est, AlignMode align,
              ErrorRelation relation, double max_t_diff = 0.01);

struct RpeResult {
  ErrorSeries series;
  MetricStats stats;
  Association assoc;
};

// Relative pose error over a fixed pair-step delta; invariant under rigid
// placement of either trajectory by construction.
RpeResult rpe(const Trajectory& ref, const Trajectory& est, std::size_t delta,
              ErrorRelation relation, double max_t_diff = 0.01);

// Per-point (x, y, error) records for color-mapped plotting. Throws
// LengthMismatch when the series does not line up with the points.
std::vector<ErrorPoint> error_mapped_trajectory(const std::vector<Vec2>& points,
                                                const std::vector<double>& errors);

// Serial reference kernels; the public ape/rpe entry points use the OpenMP
// variants, which must produce bit-identical series.
std::vector<double> ape_translation_errors(const std::vector<Vec2>& ref,
                                           const std::vector<Vec2>& est);
std::vector<double> ape_translation_errors_serial(const std::vector<Vec2>& ref,
                                                  const std::vector<Vec2>& est);
std::vector<double> rpe_errors(const std::vector<Pose2D>& ref, const std::vector<Pose2D>& est,
                               std::size_t delta, ErrorRelation relation);
std::vector<double> rpe_errors_serial(const std::vector<Pose2D>& ref,
                                      const std::vector<Pose2D>& est, std::size_t delta,
                                      ErrorRelation relation);

}  // namespace racebench
