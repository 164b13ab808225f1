// Brute-force reference implementations used only by the tests. These are
// deliberately naive and independent of the library's algorithmic paths.
#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <vector>

#include "maskpoints/geometry.hpp"
#include "maskpoints/mask.hpp"
#include "maskpoints/point_set.hpp"

namespace oracles {

// Even-odd crossing test (pnpoly) with the same half-open convention as the
// rasterizer contract: an edge spans y when exactly one endpoint is strictly
// above; crossings strictly right of the point toggle.
inline bool point_in_polygon(const std::vector<maskpoints::Point2>& verts,
                             double x, double y) {
  bool inside = false;
  const std::size_t n = verts.size();
  for (std::size_t i = 0, j = n - 1; i < n; j = i++) {
    const maskpoints::Point2& a = verts[i];
    const maskpoints::Point2& b = verts[j];
    if ((a.y > y) != (b.y > y)) {
      if (x < (b.x - a.x) * (y - a.y) / (b.y - a.y) + a.x) inside = !inside;
    }
  }
  return inside;
}

inline maskpoints::BinaryMask rasterize_by_pnpoly(
    const maskpoints::Polygon& poly, int height, int width) {
  maskpoints::BinaryMask mask(height, width);
  for (int r = 0; r < height; ++r) {
    for (int c = 0; c < width; ++c) {
      if (point_in_polygon(poly.vertices(), c + 0.5, r + 0.5)) {
        mask.set(r, c, true);
      }
    }
  }
  return mask;
}

// O(H * W * |E|) exact squared pixel distance to the nearest boundary pixel.
inline std::vector<std::int64_t> brute_squared_distances(
    const maskpoints::BoundaryPointSet& boundary, int height, int width) {
  std::vector<std::int64_t> out(static_cast<std::size_t>(height) * width,
                                std::numeric_limits<std::int64_t>::max());
  for (int r = 0; r < height; ++r) {
    for (int c = 0; c < width; ++c) {
      std::int64_t best = std::numeric_limits<std::int64_t>::max();
      for (const maskpoints::Point2& e : boundary.points) {
        const std::int64_t dr = r - static_cast<std::int64_t>(e.y - 0.5);
        const std::int64_t dc = c - static_cast<std::int64_t>(e.x - 0.5);
        best = std::min(best, dr * dr + dc * dc);
      }
      out[static_cast<std::size_t>(r) * width + c] = best;
    }
  }
  return out;
}

// O(n^2) Chamfer evaluation, square-rooting each candidate before the min.
inline double brute_chamfer(const maskpoints::DensePointSet& a,
                            const maskpoints::DensePointSet& b) {
  auto directed = [](const maskpoints::DensePointSet& from,
                     const maskpoints::DensePointSet& to) {
    double sum = 0.0;
    for (std::size_t i = 0; i < from.size(); ++i) {
      double best = std::numeric_limits<double>::infinity();
      for (std::size_t j = 0; j < to.size(); ++j) {
        const double dx = from[i].x - to[j].x;
        const double dy = from[i].y - to[j].y;
        best = std::min(best, std::sqrt(dx * dx + dy * dy));
      }
      sum += best;
    }
    return sum;
  };
  const double scale = 2.0 * static_cast<double>(a.size());
  return directed(a, b) / scale + directed(b, a) / scale;
}

// Andrew monotone chain; counterclockwise output.
inline std::vector<maskpoints::Point2> convex_hull(
    std::vector<maskpoints::Point2> pts) {
  auto cross = [](const maskpoints::Point2& o, const maskpoints::Point2& a,
                  const maskpoints::Point2& b) {
    return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
  };
  std::sort(pts.begin(), pts.end(),
            [](const maskpoints::Point2& a, const maskpoints::Point2& b) {
              return a.x < b.x || (a.x == b.x && a.y < b.y);
            });
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() < 3) return pts;
  std::vector<maskpoints::Point2> hull(2 * pts.size());
  std::size_t k = 0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    while (k >= 2 && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
    hull[k++] = pts[i];
  }
  const std::size_t lower = k + 1;
  for (std::size_t i = pts.size() - 1; i-- > 0;) {
    while (k >= lower && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
    hull[k++] = pts[i];
  }
  hull.resize(k - 1);
  return hull;
}

inline double polygon_area(const std::vector<maskpoints::Point2>& verts) {
  double twice = 0.0;
  const std::size_t n = verts.size();
  for (std::size_t i = 0; i < n; ++i) {
    const maskpoints::Point2& a = verts[i];
    const maskpoints::Point2& b = verts[(i + 1) % n];
    twice += a.x * b.y - b.x * a.y;
  }
  return std::fabs(twice) * 0.5;
}

// Direct four-term bilinear formula on a single-channel grid.
inline double brute_bilinear(const std::vector<double>& grid, int height,
                             int width, double x, double y) {
  const double cx = std::clamp(x, 0.0, static_cast<double>(width - 1));
  const double cy = std::clamp(y, 0.0, static_cast<double>(height - 1));
  const int x0 = std::clamp(static_cast<int>(std::floor(cx)), 0, width - 1);
  const int y0 = std::clamp(static_cast<int>(std::floor(cy)), 0, height - 1);
  const int x1 = std::min(x0 + 1, width - 1);
  const int y1 = std::min(y0 + 1, height - 1);
  const double fx = cx - x0;
  const double fy = cy - y0;
  auto at = [&](int r, int c) {
    return grid[static_cast<std::size_t>(r) * width + c];
  };
  return at(y0, x0) * (1 - fx) * (1 - fy) + at(y0, x1) * fx * (1 - fy) +
         at(y1, x0) * (1 - fx) * fy + at(y1, x1) * fx * fy;
}

}  // namespace oracles
