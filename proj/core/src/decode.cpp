#include "maskpoints/decode.hpp"

#include <algorithm>
#include <cmath>

#include "maskpoints/predicates.hpp"

namespace maskpoints {

ScoreMap interpolate_scores(const Triangulation& tri, int height, int width) {
  ScoreMap map;
  map.height = height;
  map.width = width;
  map.values.assign(static_cast<std::size_t>(height) * width, 0.0);
  std::vector<std::uint8_t> claimed(map.values.size(), 0);

  for (const auto& t : tri.triangles) {
    const AttributedPoint& va = tri.vertices[t[0]];
    const AttributedPoint& vb = tri.vertices[t[1]];
    const AttributedPoint& vc = tri.vertices[t[2]];
    const Point2 pa{va.x, va.y};
    const Point2 pb{vb.x, vb.y};
    const Point2 pc{vc.x, vc.y};

    const double min_x = std::min({pa.x, pb.x, pc.x});
    const double max_x = std::max({pa.x, pb.x, pc.x});
    const double min_y = std::min({pa.y, pb.y, pc.y});
    const double max_y = std::max({pa.y, pb.y, pc.y});
    const int c0 = std::max(0, static_cast<int>(std::floor(min_x - 0.5)));
    const int c1 = std::min(width - 1, static_cast<int>(std::ceil(max_x - 0.5)));
    const int r0 = std::max(0, static_cast<int>(std::floor(min_y - 0.5)));
    const int r1 = std::min(height - 1, static_cast<int>(std::ceil(max_y - 0.5)));

    for (int r = r0; r <= r1; ++r) {
      for (int c = c0; c <= c1; ++c) {
        const std::size_t cell = static_cast<std::size_t>(r) * width + c;
        if (claimed[cell]) continue;
        const Point2 p{c + 0.5, r + 0.5};
        if (orient2d_sign(pb, pc, p) < 0) continue;
        if (orient2d_sign(pc, pa, p) < 0) continue;
        if (orient2d_sign(pa, pb, p) < 0) continue;
        const double wa = std::max(0.0, orient2d_value(pb, pc, p));
        const double wb = std::max(0.0, orient2d_value(pc, pa, p));
        const double wc = std::max(0.0, orient2d_value(pa, pb, p));
        const double norm = wa + wb + wc;
        if (norm <= 0.0) continue;
        const double score = (wa * va.a + wb * vb.a + wc * vc.a) / norm;
        map.values[cell] = std::clamp(score, 0.0, 1.0);
        claimed[cell] = 1;
      }
    }
  }
  return map;
}

BinaryMask decode_triangulation(const DensePointSet& pts, int height,
                                int width, const DecodeConfig& cfg) {
  const Triangulation tri = delaunay(pts);
  const ScoreMap map = interpolate_scores(tri, height, width);
  BinaryMask mask(height, width);
  for (int r = 0; r < height; ++r) {
    for (int c = 0; c < width; ++c) {
      if (map.at(r, c) >= cfg.tau) mask.set(r, c, true);
    }
  }
  return mask;
}

BinaryMask decode_grid(const DensePointSet& pts, const GridSpec& spec,
                       const Box& box, int height, int width,
                       const DecodeConfig& cfg) {
  const int s = spec.side();
  if (static_cast<int>(pts.size()) != spec.n) {
    throw Error(ErrorKind::LayoutError, "point count does not match lattice");
  }
  const double tol_x = 1e-9 * (1.0 + std::fabs(spec.alpha));
  const double tol_y = 1e-9 * (1.0 + std::fabs(spec.beta));
  for (int r = 0; r < s; ++r) {
    for (int c = 0; c < s; ++c) {
      const AttributedPoint& p = pts[static_cast<std::size_t>(r) * s + c];
      const double ex = box.x_min + spec.alpha * c / (s - 1);
      const double ey = box.y_min + spec.beta * r / (s - 1);
      if (std::fabs(p.x - ex) > tol_x || std::fabs(p.y - ey) > tol_y) {
        throw Error(ErrorKind::LayoutError,
                    "points do not form the expected row-major lattice");
      }
    }
  }

  BinaryMask mask(height, width);
  for (int r = 0; r < height; ++r) {
    const double y = r + 0.5;
    for (int c = 0; c < width; ++c) {
      const double x = c + 0.5;
      if (!box.contains(x, y)) continue;
      const double u =
          spec.alpha > 0.0 ? (x - box.x_min) / spec.alpha * (s - 1) : 0.0;
      const double v =
          spec.beta > 0.0 ? (y - box.y_min) / spec.beta * (s - 1) : 0.0;
      const int c0 = std::clamp(static_cast<int>(std::floor(u)), 0, s - 1);
      const int r0 = std::clamp(static_cast<int>(std::floor(v)), 0, s - 1);
      const int c1 = std::min(c0 + 1, s - 1);
      const int r1 = std::min(r0 + 1, s - 1);
      const double fx = std::clamp(u - c0, 0.0, 1.0);
      const double fy = std::clamp(v - r0, 0.0, 1.0);
      auto score_at = [&](int rr, int cc) {
        return pts[static_cast<std::size_t>(rr) * s + cc].a;
      };
      const double top =
          score_at(r0, c0) * (1.0 - fx) + score_at(r0, c1) * fx;
      const double bottom =
          score_at(r1, c0) * (1.0 - fx) + score_at(r1, c1) * fx;
      const double score = top * (1.0 - fy) + bottom * fy;
      if (score >= cfg.tau) mask.set(r, c, true);
    }
  }
  return mask;
}

}  // namespace maskpoints
