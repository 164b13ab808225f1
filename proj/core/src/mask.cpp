#include "maskpoints/mask.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace maskpoints {

BinaryMask::BinaryMask(int height, int width)
    : height_(height), width_(width) {
  if (height < 1 || width < 1) {
    throw Error(ErrorKind::DimensionMismatch, "mask dimensions must be >= 1");
  }
  cells_.assign(static_cast<std::size_t>(height) * width, 0);
}

bool BinaryMask::at_point(double x, double y) const {
  const int c = static_cast<int>(std::floor(x));
  const int r = static_cast<int>(std::floor(y));
  if (r < 0 || r >= height_ || c < 0 || c >= width_) {
    throw Error(ErrorKind::OutOfBounds, "point outside mask grid");
  }
  return at(r, c);
}

std::int64_t BinaryMask::foreground_count() const {
  return std::accumulate(cells_.begin(), cells_.end(), std::int64_t{0});
}

double mask_iou(const BinaryMask& a, const BinaryMask& b) {
  if (a.height() != b.height() || a.width() != b.width()) {
    throw Error(ErrorKind::DimensionMismatch, "mask shapes differ");
  }
  std::int64_t inter = 0;
  std::int64_t uni = 0;
  const auto& ca = a.cells();
  const auto& cb = b.cells();
  for (std::size_t i = 0; i < ca.size(); ++i) {
    inter += (ca[i] & cb[i]);
    uni += (ca[i] | cb[i]);
  }
  if (uni == 0) return 1.0;
  return static_cast<double>(inter) / static_cast<double>(uni);
}

BoundaryPointSet boundary_points(const BinaryMask& mask) {
  const int h = mask.height();
  const int w = mask.width();
  BoundaryPointSet out;
  auto background = [&](int r, int c) {
    return r < 0 || r >= h || c < 0 || c >= w || !mask.at(r, c);
  };
  for (int r = 0; r < h; ++r) {
    for (int c = 0; c < w; ++c) {
      if (!mask.at(r, c)) continue;
      if (background(r - 1, c) || background(r + 1, c) ||
          background(r, c - 1) || background(r, c + 1)) {
        out.points.push_back({c + 0.5, r + 0.5});
      }
    }
  }
  if (out.points.empty()) {
    throw Error(ErrorKind::EmptyMask, "mask has no foreground pixels");
  }
  return out;
}

Box foreground_center_box(const BinaryMask& mask) {
  int rmin = std::numeric_limits<int>::max();
  int rmax = -1;
  int cmin = std::numeric_limits<int>::max();
  int cmax = -1;
  for (int r = 0; r < mask.height(); ++r) {
    for (int c = 0; c < mask.width(); ++c) {
      if (!mask.at(r, c)) continue;
      rmin = std::min(rmin, r);
      rmax = std::max(rmax, r);
      cmin = std::min(cmin, c);
      cmax = std::max(cmax, c);
    }
  }
  if (rmax < 0) {
    throw Error(ErrorKind::EmptyMask, "mask has no foreground pixels");
  }
  return Box(cmin + 0.5, rmin + 0.5, cmax + 0.5, rmax + 0.5);
}

BinaryMask rasterize_polygon(const Polygon& poly, int height, int width) {
  BinaryMask mask(height, width);
  const auto& verts = poly.vertices();
  const std::size_t n = verts.size();

  std::vector<double> crossings;
  crossings.reserve(n);
  for (int r = 0; r < height; ++r) {
    const double y = r + 0.5;
    crossings.clear();
    for (std::size_t i = 0, j = n - 1; i < n; j = i++) {
      const Point2& a = verts[i];
      const Point2& b = verts[j];
      if ((a.y > y) != (b.y > y)) {
        crossings.push_back((b.x - a.x) * (y - a.y) / (b.y - a.y) + a.x);
      }
    }
    if (crossings.empty()) continue;
    std::sort(crossings.begin(), crossings.end());
    // Fill [x_enter, x_exit) span pairs.
    for (std::size_t k = 0; k + 1 < crossings.size(); k += 2) {
      const double xe = crossings[k];
      const double xx = crossings[k + 1];
      for (int c = std::max(0, static_cast<int>(std::ceil(xe - 0.5)));
           c < width; ++c) {
        const double x = c + 0.5;
        if (x < xe) continue;
        if (x >= xx) break;
        mask.set(r, c, true);
      }
    }
  }
  return mask;
}

}  // namespace maskpoints
