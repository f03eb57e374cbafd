#include "racebench/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "racebench/errors.hpp"

namespace racebench {

Association associate(const Trajectory& ref, const Trajectory& est, double max_t_diff) {
  if (ref.empty() || est.empty()) {
    throw std::invalid_argument("associate requires non-empty trajectories");
  }
  Association assoc;
  assoc.max_t_diff = max_t_diff;

  if (!ref.has_time || !est.has_time) {
    const std::size_t n = std::min(ref.size(), est.size());
    assoc.pairs.reserve(n);
    for (std::size_t i = 0; i < n; ++i) assoc.pairs.emplace_back(i, i);
    return assoc;
  }

  std::size_t i = 0;
  std::size_t j = 0;
  while (i < ref.size() && j < est.size()) {
    const double tr = ref.samples[i].t;
    while (j + 1 < est.size() &&
           std::abs(est.samples[j + 1].t - tr) < std::abs(est.samples[j].t - tr)) {
      ++j;
    }
    const double diff = est.samples[j].t - tr;
    if (std::abs(diff) <= max_t_diff) {
      assoc.pairs.emplace_back(i, j);
      ++i;
      ++j;
    } else if (diff < 0.0) {
      ++j;
    } else {
      ++i;
    }
  }

  if (assoc.pairs.empty()) {
    throw NoMatches("no timestamp pairs within " + std::to_string(max_t_diff) + " s");
  }
  return assoc;
}

double AlignmentTransform::yaw_offset() const { return std::atan2(rotation[1][0], rotation[0][0]); }

AlignmentTransform AlignmentTransform::from_parts(double theta, Vec2 translation_, double scale_) {
  AlignmentTransform out;
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  out.rotation[0][0] = c;
  out.rotation[0][1] = -s;
  out.rotation[1][0] = s;
  out.rotation[1][1] = c;
  out.translation = translation_;
  out.scale = scale_;
  return out;
}

AlignmentTransform umeyama_align(const std::vector<Vec2>& ref, const std::vector<Vec2>& est,
                                 bool with_scale) {
  if (ref.size() != est.size()) {
    throw std::invalid_argument("umeyama_align needs paired point sets of equal size");
  }
  const std::size_t n = ref.size();
  if (n < 2) {
    throw DegenerateInput("umeyama_align needs at least 2 paired points");
  }

  Vec2 mu_ref{0.0, 0.0};
  Vec2 mu_est{0.0, 0.0};
  for (std::size_t i = 0; i < n; ++i) {
    mu_ref = mu_ref + ref[i];
    mu_est = mu_est + est[i];
  }
  mu_ref = mu_ref * (1.0 / static_cast<double>(n));
  mu_est = mu_est * (1.0 / static_cast<double>(n));

  // Cross-covariance of centered point sets and the estimate's variance.
  double cxx = 0.0, cxy = 0.0, cyx = 0.0, cyy = 0.0, var_est = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const Vec2 r = ref[i] - mu_ref;
    const Vec2 e = est[i] - mu_est;
    cxx += r.x * e.x;
    cxy += r.x * e.y;
    cyx += r.y * e.x;
    cyy += r.y * e.y;
    var_est += e.squared_norm();
  }
  const double inv_n = 1.0 / static_cast<double>(n);
  cxx *= inv_n;
  cxy *= inv_n;
  cyx *= inv_n;
  cyy *= inv_n;
  var_est *= inv_n;

  if (var_est == 0.0) {
    throw DegenerateInput("all estimate points coincide");
  }

  // Planar closed form: the optimal rotation maximizes
  // cos(theta)*(cxx+cyy) + sin(theta)*(cyx-cxy).
  const double a = cxx + cyy;
  const double b = cyx - cxy;
  const double theta = std::atan2(b, a);
  const double gain = std::hypot(a, b);

  double scale = 1.0;
  if (with_scale) {
    if (gain == 0.0) {
      throw DegenerateInput("optimal scale collapses to zero");
    }
    scale = gain / var_est;
  }

  const double c = std::cos(theta);
  const double s = std::sin(theta);
  const Vec2 rotated{c * mu_est.x - s * mu_est.y, s * mu_est.x + c * mu_est.y};
  return AlignmentTransform::from_parts(theta, mu_ref - rotated * scale, scale);
}

const char* align_mode_name(AlignMode mode) {
  switch (mode) {
    case AlignMode::kNone: return "none";
    case AlignMode::kRigid: return "rigid";
    case AlignMode::kSimilarity: return "similarity";
  }
  return "?";
}

const char* error_relation_name(ErrorRelation relation) {
  return relation == ErrorRelation::kTranslation ? "translation" : "yaw";
}

MetricStats compute_stats(const std::vector<double>& values) {
  MetricStats stats;
  if (values.empty()) return stats;
  const double n = static_cast<double>(values.size());

  double sum = 0.0;
  double sse = 0.0;
  stats.min = values.front();
  stats.max = values.front();
  for (double v : values) {
    sum += v;
    sse += v * v;
    stats.min = std::min(stats.min, v);
    stats.max = std::max(stats.max, v);
  }
  stats.mean = sum / n;
  stats.sse = sse;
  stats.rmse = std::sqrt(sse / n);

  double var = 0.0;
  for (double v : values) {
    const double d = v - stats.mean;
    var += d * d;
  }
  stats.std_dev = std::sqrt(var / n);

  std::vector<double> sorted = values;
  std::sort(sorted.begin(), sorted.end());
  const std::size_t mid = sorted.size() / 2;
  stats.median = sorted.size() % 2 == 1 ? sorted[mid] : 0.5 * (sorted[mid - 1] + sorted[mid]);
  return stats;
}

std::vector<double> ape_translation_errors_serial(const std::vector<Vec2>& ref,
                                                  const std::vector<Vec2>& est) {
  std::vector<double> values(ref.size());
  for (std::size_t i = 0; i < ref.size(); ++i) {
    values[i] = (ref[i] - est[i]).norm();
  }
  return values;
}

std::vector<double> ape_translation_errors(const std::vector<Vec2>& ref,
                                           const std::vector<Vec2>& est) {
  std::vector<double> values(ref.size());
  const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(ref.size());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    values[static_cast<std::size_t>(i)] =
        (ref[static_cast<std::size_t>(i)] - est[static_cast<std::size_t>(i)]).norm();
  }
  return values;
}

namespace {

double rpe_error_at(const std::vector<Pose2D>& ref, const std::vector<Pose2D>& est, std::size_t i,
                    std::size_t delta, ErrorRelation relation) {
  const Pose2D rel_ref = se2_compose(se2_inverse(ref[i]), ref[i + delta]);
  const Pose2D rel_est = se2_compose(se2_inverse(est[i]), est[i + delta]);
  const Pose2D err = se2_compose(se2_inverse(rel_ref), rel_est);
  return relation == ErrorRelation::kTranslation ? std::hypot(err.x, err.y) : std::abs(err.yaw);
}

}  // namespace

std::vector<double> rpe_errors_serial(const std::vector<Pose2D>& ref,
                                      const std::vector<Pose2D>& est, std::size_t delta,
                                      ErrorRelation relation) {
  std::vector<double> values(ref.size() - delta);
  for (std::size_t i = 0; i < values.size(); ++i) {
    values[i] = rpe_error_at(ref, est, i, delta, relation);
  }
  return values;
}

std::vector<double> rpe_errors(const std::vector<Pose2D>& ref, const std::vector<Pose2D>& est,
                               std::size_t delta, ErrorRelation relation) {
  std::vector<double> values(ref.size() - delta);
  const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(values.size());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    values[static_cast<std::size_t>(i)] =
        rpe_error_at(ref, est, static_cast<std::size_t>(i), delta, relation);
  }
  return values;
}

ApeResult ape(const Trajectory& ref, const Trajectory& est, AlignMode align,
              ErrorRelation relation, double max_t_diff) {
  ApeResult result;
  result.assoc = associate(ref, est, max_t_diff);
  const std::size_t n = result.assoc.size();

  std::vector<Vec2> ref_pts(n);
  std::vector<Vec2> est_pts(n);
  std::vector<double> ref_yaws(n);
  std::vector<double> est_yaws(n);
  for (std::size_t k = 0; k < n; ++k) {
    const auto& [ri, ei] = result.assoc.pairs[k];
    const auto& rs = ref.samples[ri];
    const auto& es = est.samples[ei];
    ref_pts[k] = {rs.x, rs.y};
    est_pts[k] = {es.x, es.y};
    ref_yaws[k] = rs.yaw();
    est_yaws[k] = es.yaw();
  }

  result.transform = align == AlignMode::kNone
                         ? AlignmentTransform::identity()
                         : umeyama_align(ref_pts, est_pts, align == AlignMode::kSimilarity);

  std::vector<Vec2> aligned(n);
  for (std::size_t k = 0; k < n; ++k) aligned[k] = result.transform.apply(est_pts[k]);

  if (relation == ErrorRelation::kTranslation) {
    result.series.values = ape_translation_errors(ref_pts, aligned);
  } else {
    const double dtheta = result.transform.yaw_offset();
    result.series.values.resize(n);
    for (std::size_t k = 0; k < n; ++k) {
      result.series.values[k] = std::abs(wrap_angle(ref_yaws[k] - est_yaws[k] - dtheta));
    }
  }

  result.series.points.resize(n);
  for (std::size_t k = 0; k < n; ++k) {
    result.series.points[k] = {aligned[k].x, aligned[k].y, result.series.values[k]};
  }
  result.stats = compute_stats(result.series.values);
  return result;
}

RpeResult rpe(const Trajectory& ref, const Trajectory& est, std::size_t delta,
              ErrorRelation relation, double max_t_diff) {
  if (delta < 1) {
    throw std::invalid_argument("rpe delta must be at least 1");
  }
  RpeResult result;
  result.assoc = associate(ref, est, max_t_diff);
  const std::size_t n = result.assoc.size();
  if (delta >= n) {
    throw DeltaTooLarge("delta " + std::to_string(delta) + " needs more than " +
                        std::to_string(delta) + " associated pairs, have " + std::to_string(n));
  }

  std::vector<Pose2D> ref_poses(n);
  std::vector<Pose2D> est_poses(n);
  for (std::size_t k = 0; k < n; ++k) {
    const auto& [ri, ei] = result.assoc.pairs[k];
    ref_poses[k] = ref.samples[ri].pose2d();
    est_poses[k] = est.samples[ei].pose2d();
  }

  result.series.values = rpe_errors(ref_poses, est_poses, delta, relation);
  result.series.points.resize(result.series.values.size());
  for (std::size_t k = 0; k < result.series.values.size(); ++k) {
    result.series.points[k] = {est_poses[k].x, est_poses[k].y, result.series.values[k]};
  }
  result.stats = compute_stats(result.series.values);
  return result;
}

std::vector<ErrorPoint> error_mapped_trajectory(const std::vector<Vec2>& points,
                                                const std::vector<double>& errors) {
  if (points.size() != errors.size()) {
    throw LengthMismatch("error series length " + std::to_string(errors.size()) +
                         " does not match point count " + std::to_string(points.size()));
  }
  std::vector<ErrorPoint> records(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) {
    records[i] = {points[i].x, points[i].y, errors[i]};
  }
  return records;
}

}  // namespace racebench
