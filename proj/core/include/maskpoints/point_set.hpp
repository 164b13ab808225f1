#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

#include "maskpoints/error.hpp"

namespace maskpoints {

/// One attributed point: continuous pixel coordinates plus a foreground
/// score in [0, 1].
struct AttributedPoint {
  double x = 0.0;
  double y = 0.0;
  double a = 1.0;

  friend bool operator==(const AttributedPoint&, const AttributedPoint&) =
      default;
};

/// Ordered set of attributed points. Validation enforces n >= 1, finite
/// coordinates, and scores within [0, 1].
class DensePointSet {
 public:
  DensePointSet() = default;
  explicit DensePointSet(std::vector<AttributedPoint> points)
      : points_(std::move(points)) {
    validate();
  }

  std::size_t size() const { return points_.size(); }
  const std::vector<AttributedPoint>& points() const { return points_; }
  const AttributedPoint& operator[](std::size_t i) const { return points_[i]; }

  void validate() const {
    if (points_.empty()) {
      throw Error(ErrorKind::InvalidCount, "point set must be non-empty");
    }
    for (const AttributedPoint& p : points_) {
      if (!std::isfinite(p.x) || !std::isfinite(p.y)) {
        throw Error(ErrorKind::DegenerateInput,
                    "point coordinates must be finite");
      }
      if (!(p.a >= 0.0 && p.a <= 1.0)) {
        throw Error(ErrorKind::DegenerateInput,
                    "attribute score outside [0, 1]");
      }
    }
  }

 private:
  std::vector<AttributedPoint> points_;
};

}  // namespace maskpoints
