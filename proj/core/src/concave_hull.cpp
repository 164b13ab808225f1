#include <algorithm>
#include <cmath>
#include <optional>
#include <set>
#include <vector>

#include "maskpoints/decode.hpp"
#include "maskpoints/predicates.hpp"

namespace maskpoints {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

double heading(const Point2& from, const Point2& to) {
  return std::atan2(to.y - from.y, to.x - from.x);
}

double clockwise_turn(double previous, double candidate) {
  double turn = previous - candidate;
  while (turn < 0.0) turn += kTwoPi;
  while (turn >= kTwoPi) turn -= kTwoPi;
  return turn;
}

bool on_segment_bounds(const Point2& p, const Point2& a, const Point2& b) {
  return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) &&
         std::min(a.y, b.y) <= p.y && p.y <= std::max(a.y, b.y);
}

// Proper or improper intersection of closed segments [a,b] and [c,d]. The
// bounding-box reject keeps the exact predicates off the common path.
bool segments_intersect(const Point2& a, const Point2& b, const Point2& c,
                        const Point2& d) {
  if (std::max(a.x, b.x) < std::min(c.x, d.x) ||
      std::max(c.x, d.x) < std::min(a.x, b.x) ||
      std::max(a.y, b.y) < std::min(c.y, d.y) ||
      std::max(c.y, d.y) < std::min(a.y, b.y)) {
    return false;
  }
  const int d1 = orient2d_sign(c, d, a);
  const int d2 = orient2d_sign(c, d, b);
  const int d3 = orient2d_sign(a, b, c);
  const int d4 = orient2d_sign(a, b, d);
  if (((d1 > 0 && d2 < 0) || (d1 < 0 && d2 > 0)) &&
      ((d3 > 0 && d4 < 0) || (d3 < 0 && d4 > 0))) {
    return true;
  }
  if (d1 == 0 && on_segment_bounds(a, c, d)) return true;
  if (d2 == 0 && on_segment_bounds(b, c, d)) return true;
  if (d3 == 0 && on_segment_bounds(c, a, b)) return true;
  if (d4 == 0 && on_segment_bounds(d, a, b)) return true;
  return false;
}

// Even-odd point-in-polygon, counting boundary points as inside.
bool inside_or_on(const Point2& p, const std::vector<Point2>& poly) {
  const std::size_t n = poly.size();
  bool inside = false;
  for (std::size_t i = 0, j = n - 1; i < n; j = i++) {
    const Point2& a = poly[i];
    const Point2& b = poly[j];
    if (on_segment_bounds(p, a, b) && orient2d_sign(a, b, p) == 0) return true;
    if ((a.y > p.y) != (b.y > p.y)) {
      const double cross = (b.x - a.x) * (p.y - a.y) / (b.y - a.y) + a.x;
      if (p.x < cross) inside = !inside;
    }
  }
  return inside;
}

std::vector<Point2> convex_hull(std::vector<Point2> pts) {
  std::sort(pts.begin(), pts.end(), [](const Point2& a, const Point2& b) {
    return a.x < b.x || (a.x == b.x && a.y < b.y);
  });
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  const std::size_t n = pts.size();
  if (n < 3) return pts;
  std::vector<Point2> hull(2 * n);
  std::size_t k = 0;
  for (std::size_t i = 0; i < n; ++i) {
    while (k >= 2 && orient2d_sign(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
    hull[k++] = pts[i];
  }
  const std::size_t lower = k + 1;
  for (std::size_t i = n - 1; i-- > 0;) {
    while (k >= lower && orient2d_sign(hull[k - 2], hull[k - 1], pts[i]) <= 0)
      --k;
    hull[k++] = pts[i];
  }
  hull.resize(k - 1);
  return hull;
}

// One Moreira-Santos walk attempt with a fixed neighbour count.
std::optional<std::vector<Point2>> knn_hull_attempt(
    const std::vector<Point2>& pts, int k) {
  const std::size_t n = pts.size();
  const int kk = std::min<int>(k, static_cast<int>(n) - 1);

  std::size_t first = 0;
  for (std::size_t i = 1; i < n; ++i) {
    if (pts[i].y < pts[first].y ||
        (pts[i].y == pts[first].y && pts[i].x < pts[first].x)) {
      first = i;
    }
  }

  std::vector<Point2> hull{pts[first]};
  std::vector<bool> used(n, false);
  used[first] = true;
  Point2 current = pts[first];
  double prev_heading = 0.0;
  bool first_reinserted = false;
  // Running hull bounding box; closure is impossible while any unused point
  // lies outside it, which makes that test O(n) with tiny constants.
  double bb_min_x = current.x, bb_max_x = current.x;
  double bb_min_y = current.y, bb_max_y = current.y;

  std::vector<std::size_t> candidates;
  candidates.reserve(n);
  std::vector<std::pair<double, std::size_t>> turns;
  turns.reserve(n);
  while (true) {
    if (!first_reinserted && hull.size() >= 3) {
      used[first] = false;
      first_reinserted = true;
    }

    candidates.clear();
    for (std::size_t i = 0; i < n; ++i) {
      if (!used[i]) candidates.push_back(i);
    }
    if (candidates.empty()) return std::nullopt;

    // k nearest by squared distance, ties broken by index for determinism.
    auto nearer = [&](std::size_t i, std::size_t j) {
      const double di = (pts[i].x - current.x) * (pts[i].x - current.x) +
                        (pts[i].y - current.y) * (pts[i].y - current.y);
      const double dj = (pts[j].x - current.x) * (pts[j].x - current.x) +
                        (pts[j].y - current.y) * (pts[j].y - current.y);
      if (di != dj) return di < dj;
      return i < j;
    };
    if (candidates.size() > static_cast<std::size_t>(kk)) {
      std::nth_element(candidates.begin(), candidates.begin() + (kk - 1),
                       candidates.end(), nearer);
      candidates.resize(kk);
    }
    // Largest clockwise turn from the previous heading first; distance and
    // index complete the total order so the walk is deterministic.
    turns.clear();
    for (const std::size_t i : candidates) {
      turns.push_back({clockwise_turn(prev_heading, heading(current, pts[i])),
                       i});
    }
    std::sort(turns.begin(), turns.end(),
              [&](const std::pair<double, std::size_t>& a,
                  const std::pair<double, std::size_t>& b) {
                if (a.first != b.first) return a.first > b.first;
                return nearer(a.second, b.second);
              });
    candidates.clear();
    for (const auto& [turn, i] : turns) candidates.push_back(i);

    std::optional<std::size_t> chosen;
    bool closed = false;
    for (const std::size_t cand : candidates) {
      // Path edges are (hull[e], hull[e+1]) for e in [0, hull.size()-2].
      // Skip the edge ending at `current` (shared endpoint); a closing move
      // additionally shares the first vertex with edge 0.
      bool crosses = false;
      const std::size_t skip_front = cand == first ? 1 : 0;
      for (std::size_t e = skip_front; hull.size() >= 2 && e + 2 < hull.size();
           ++e) {
        if (segments_intersect(current, pts[cand], hull[e], hull[e + 1])) {
          crosses = true;
          break;
        }
      }
      if (crosses) continue;
      if (cand == first) {
        // Close only when the finished polygon would keep every remaining
        // point inside; otherwise keep following the wall.
        bool all_inside = true;
        for (std::size_t i = 0; i < n && all_inside; ++i) {
          if (used[i] || i == first) continue;
          all_inside = pts[i].x >= bb_min_x && pts[i].x <= bb_max_x &&
                       pts[i].y >= bb_min_y && pts[i].y <= bb_max_y;
        }
        for (std::size_t i = 0; i < n && all_inside; ++i) {
          if (!used[i] && i != first) {
            all_inside = inside_or_on(pts[i], hull);
          }
        }
        if (!all_inside) continue;
        closed = true;
      }
      chosen = cand;
      break;
    }
    if (!chosen) return std::nullopt;
    if (closed) break;

    hull.push_back(pts[*chosen]);
    prev_heading = heading(pts[*chosen], current);
    current = pts[*chosen];
    used[*chosen] = true;
    bb_min_x = std::min(bb_min_x, current.x);
    bb_max_x = std::max(bb_max_x, current.x);
    bb_min_y = std::min(bb_min_y, current.y);
    bb_max_y = std::max(bb_max_y, current.y);
    if (hull.size() > 2 * n + 4) return std::nullopt;
  }

  for (std::size_t i = 0; i < n; ++i) {
    if (!inside_or_on(pts[i], hull)) return std::nullopt;
  }
  return hull;
}

}  // namespace

BinaryMask concave_hull(const DensePointSet& pts, const DecodeConfig& cfg,
                        int height, int width) {
  std::vector<Point2> fg;
  for (const AttributedPoint& p : pts.points()) {
    if (p.a >= cfg.tau) fg.push_back({p.x, p.y});
  }
  std::sort(fg.begin(), fg.end(), [](const Point2& a, const Point2& b) {
    return a.x < b.x || (a.x == b.x && a.y < b.y);
  });
  fg.erase(std::unique(fg.begin(), fg.end()), fg.end());
  if (fg.size() < 3) {
    throw Error(ErrorKind::InsufficientPoints,
                "concave hull needs at least 3 points above threshold");
  }

  // The walk needs point spacing on the order of the wall separation; below
  // half a pixel it zigzags and strands points. Cluster to a half-pixel
  // lattice for the walk only — the mask output cannot resolve finer anyway,
  // and every raw point pixel still gets stamped below.
  std::vector<Point2> walk_pts;
  {
    std::set<std::pair<std::int64_t, std::int64_t>> seen;
    for (const Point2& p : fg) {
      const std::pair<std::int64_t, std::int64_t> cell{
          static_cast<std::int64_t>(std::floor(p.x * 2.0)),
          static_cast<std::int64_t>(std::floor(p.y * 2.0))};
      if (seen.insert(cell).second) walk_pts.push_back(p);
    }
  }

  BinaryMask mask(height, width);
  auto stamp_points = [&]() {
    for (const Point2& p : fg) {
      const int c = static_cast<int>(std::floor(p.x));
      const int r = static_cast<int>(std::floor(p.y));
      if (r >= 0 && r < height && c >= 0 && c < width) mask.set(r, c, true);
    }
  };

  bool collinear = true;
  for (std::size_t i = 2; i < fg.size() && collinear; ++i) {
    collinear = orient2d_sign(fg[0], fg[1], fg[i]) == 0;
  }
  if (collinear) {
    stamp_points();  // degenerate hull has no interior
    return mask;
  }

  // k+1 restarts, bounded: shapes the walk cannot wrap at moderate k fall
  // back to the convex hull rather than burning through every k.
  std::vector<Point2> hull;
  if (walk_pts.size() >= 3) {
    const int k_start = std::max(3, cfg.hull_k);
    const int k_stop = std::min(static_cast<int>(walk_pts.size()) - 1,
                                k_start + 29);
    for (int k = k_start; k <= k_stop; ++k) {
      if (auto attempt = knn_hull_attempt(walk_pts, k)) {
        hull = std::move(*attempt);
        break;
      }
    }
  }
  if (hull.size() < 3) hull = convex_hull(fg);

  if (hull.size() >= 3) {
    std::vector<Point2> cleaned;
    for (const Point2& p : hull) {
      if (cleaned.empty() || !(cleaned.back() == p)) cleaned.push_back(p);
    }
    while (cleaned.size() > 1 && cleaned.front() == cleaned.back()) {
      cleaned.pop_back();
    }
    if (cleaned.size() >= 3) {
      mask = rasterize_polygon(Polygon(std::move(cleaned)), height, width);
    }
  }
  stamp_points();
  return mask;
}

}  // namespace maskpoints
