#include "maskpoints/losses.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace maskpoints {

namespace {

double squared_distance(const AttributedPoint& a, const AttributedPoint& b) {
  const double dx = a.x - b.x;
  const double dy = a.y - b.y;
  return dx * dx + dy * dy;
}

// Sum over a of the distance to the nearest point of b, in index order.
double directed_nearest_sum(const std::vector<AttributedPoint>& a,
                            const std::vector<AttributedPoint>& b) {
  double sum = 0.0;
  for (const AttributedPoint& p : a) {
    double best = std::numeric_limits<double>::infinity();
    for (const AttributedPoint& q : b) {
      best = std::min(best, squared_distance(p, q));
    }
    sum += std::sqrt(best);
  }
  return sum;
}

}  // namespace

double point_to_point_loss(const DensePointSet& r, const DensePointSet& r_gt) {
  if (r.size() != r_gt.size()) {
    throw Error(ErrorKind::CardinalityMismatch,
                "point-to-point loss requires equal point counts");
  }
  double sum = 0.0;
  for (std::size_t i = 0; i < r.size(); ++i) {
    sum += std::sqrt(squared_distance(r[i], r_gt[i]));
  }
  return sum / static_cast<double>(r.size());
}

double chamfer_loss(const DensePointSet& r, const DensePointSet& r_gt) {
  if (r.size() == 0 || r_gt.size() == 0) {
    throw Error(ErrorKind::CardinalityMismatch, "chamfer loss on empty set");
  }
  if (r.size() != r_gt.size()) {
    throw Error(ErrorKind::CardinalityMismatch,
                "chamfer loss requires equal point counts");
  }
  const double forward = directed_nearest_sum(r.points(), r_gt.points());
  const double backward = directed_nearest_sum(r_gt.points(), r.points());
  const double scale = 2.0 * static_cast<double>(r.size());
  return forward / scale + backward / scale;
}

double chamfer_loss_generalized(const DensePointSet& r,
                                const DensePointSet& r_gt) {
  if (r.size() == 0 || r_gt.size() == 0) {
    throw Error(ErrorKind::CardinalityMismatch, "chamfer loss on empty set");
  }
  const double forward =
      directed_nearest_sum(r.points(), r_gt.points()) / r.size();
  const double backward =
      directed_nearest_sum(r_gt.points(), r.points()) / r_gt.size();
  return 0.5 * (forward + backward);
}

double point_cls_loss(const std::vector<double>& predicted,
                      const std::vector<int>& labels) {
  if (predicted.size() != labels.size()) {
    throw Error(ErrorKind::CardinalityMismatch,
                "probability and label lengths differ");
  }
  if (predicted.empty()) {
    throw Error(ErrorKind::CardinalityMismatch,
                "classification loss on empty input");
  }
  constexpr double kEps = 1e-7;
  double sum = 0.0;
  for (std::size_t i = 0; i < predicted.size(); ++i) {
    const double p = std::clamp(predicted[i], kEps, 1.0 - kEps);
    sum -= labels[i] != 0 ? std::log(p) : std::log(1.0 - p);
  }
  return sum / static_cast<double>(predicted.size());
}

}  // namespace maskpoints
