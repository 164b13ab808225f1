#pragma once

#include <cstdint>
#include <vector>

#include "maskpoints/geometry.hpp"

namespace maskpoints {

/// Row-major binary grid. Pixel (r, c) occupies the unit square
/// [c, c+1) x [r, r+1) with center (c + 0.5, r + 0.5).
class BinaryMask {
 public:
  BinaryMask(int height, int width);

  int height() const { return height_; }
  int width() const { return width_; }

  bool at(int r, int c) const { return cells_[index(r, c)] != 0; }
  void set(int r, int c, bool fg) { cells_[index(r, c)] = fg ? 1 : 0; }

  /// Pixel containing a continuous point; throws OutOfBounds if the point
  /// falls outside the grid extent [0, width) x [0, height).
  bool at_point(double x, double y) const;

  std::int64_t foreground_count() const;
  bool empty() const { return foreground_count() == 0; }

  const std::vector<std::uint8_t>& cells() const { return cells_; }
  std::vector<std::uint8_t>& cells() { return cells_; }

  friend bool operator==(const BinaryMask&, const BinaryMask&) = default;

 private:
  std::size_t index(int r, int c) const {
    return static_cast<std::size_t>(r) * width_ + c;
  }

  int height_;
  int width_;
  std::vector<std::uint8_t> cells_;
};

/// Centers of foreground pixels that touch background (4-connectivity) or the
/// grid border.
struct BoundaryPointSet {
  std::vector<Point2> points;
};

/// Fills pixels whose center lies inside the polygon by the even-odd rule.
/// Crossing ties use the half-open convention (an edge spans scanline y when
/// exactly one endpoint is strictly below it; spans fill x_enter <= x < x_exit)
/// so abutting polygons never double-cover a pixel.
BinaryMask rasterize_polygon(const Polygon& poly, int height, int width);

/// |a AND b| / |a OR b|; two empty masks compare equal at 1.0.
double mask_iou(const BinaryMask& a, const BinaryMask& b);

BoundaryPointSet boundary_points(const BinaryMask& mask);

/// Tight bounding box over foreground pixel centers.
Box foreground_center_box(const BinaryMask& mask);

}  // namespace maskpoints
