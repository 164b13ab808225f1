#pragma once

#include <cstddef>
#include <vector>

#include "maskpoints/error.hpp"

namespace maskpoints {

struct Point2 {
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const Point2&, const Point2&) = default;
};

/// Axis-aligned box in pixel coordinates.
struct Box {
  double x_min = 0.0;
  double y_min = 0.0;
  double x_max = 0.0;
  double y_max = 0.0;

  Box() = default;
  Box(double x0, double y0, double x1, double y1);

  double width() const { return x_max - x_min; }
  double height() const { return y_max - y_min; }
  bool contains(double x, double y) const {
    return x >= x_min && x <= x_max && y >= y_min && y <= y_max;
  }
};

/// Closed polygon; the edge from the last vertex back to the first is
/// implicit. Construction rejects fewer than 3 vertices and consecutive
/// duplicates (including last == first).
class Polygon {
 public:
  explicit Polygon(std::vector<Point2> vertices);

  const std::vector<Point2>& vertices() const { return vertices_; }
  std::size_t size() const { return vertices_.size(); }
  double perimeter() const;

 private:
  std::vector<Point2> vertices_;
};

}  // namespace maskpoints
