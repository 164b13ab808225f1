#include "maskpoints/corpus.hpp"

#include <algorithm>
#include <cmath>
#include <queue>

namespace maskpoints {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

BinaryMask blob_mask(Pcg32& rng, int size) {
  const double s = static_cast<double>(size);
  const double r0 = s * (0.14 + 0.16 * rng.next_double());
  double amplitude[4];
  double phase[4];
  double amp_sum = 0.0;
  for (int m = 0; m < 4; ++m) {
    amplitude[m] = (0.35 / (m + 2)) * rng.next_double();
    phase[m] = kTwoPi * rng.next_double();
    amp_sum += amplitude[m];
  }
  const double max_r = r0 * (1.0 + amp_sum);
  const double margin = max_r + 2.0;
  const double cx = margin + rng.next_double() * std::max(1.0, s - 2.0 * margin);
  const double cy = margin + rng.next_double() * std::max(1.0, s - 2.0 * margin);

  constexpr int kVertices = 256;
  std::vector<Point2> verts;
  verts.reserve(kVertices);
  for (int j = 0; j < kVertices; ++j) {
    const double theta = kTwoPi * j / kVertices;
    double radius = r0;
    for (int m = 0; m < 4; ++m) {
      radius += r0 * amplitude[m] * std::cos((m + 2) * theta + phase[m]);
    }
    verts.push_back({cx + radius * std::cos(theta),
                     cy + radius * std::sin(theta)});
  }
  return rasterize_polygon(Polygon(std::move(verts)), size, size);
}

BinaryMask rect_mask(Pcg32& rng, int size) {
  const double s = static_cast<double>(size);
  const double w = s * (0.12 + 0.68 * rng.next_double());
  const double h = s * (0.12 + 0.68 * rng.next_double());
  const double x0 = rng.next_double() * (s - w);
  const double y0 = rng.next_double() * (s - h);
  return rasterize_polygon(Polygon({{x0, y0},
                                    {x0 + w, y0},
                                    {x0 + w, y0 + h},
                                    {x0, y0 + h}}),
                           size, size);
}

BinaryMask ring_mask(Pcg32& rng, int size) {
  const double s = static_cast<double>(size);
  const double r_outer = s * (0.18 + 0.24 * rng.next_double());
  const double r_inner = r_outer * (0.45 + 0.25 * rng.next_double());
  const double margin = r_outer + 2.0;
  const double cx = margin + rng.next_double() * std::max(1.0, s - 2.0 * margin);
  const double cy = margin + rng.next_double() * std::max(1.0, s - 2.0 * margin);

  auto circle = [&](double radius) {
    constexpr int kVertices = 128;
    std::vector<Point2> verts;
    verts.reserve(kVertices);
    for (int j = 0; j < kVertices; ++j) {
      const double theta = kTwoPi * j / kVertices;
      verts.push_back({cx + radius * std::cos(theta),
                       cy + radius * std::sin(theta)});
    }
    return rasterize_polygon(Polygon(std::move(verts)), size, size);
  };

  BinaryMask outer = circle(r_outer);
  const BinaryMask inner = circle(r_inner);
  for (std::size_t i = 0; i < outer.cells().size(); ++i) {
    if (inner.cells()[i]) outer.cells()[i] = 0;
  }
  return outer;
}

}  // namespace

std::vector<BinaryMask> synthetic_corpus(SamplerSeed seed, int count,
                                         int size) {
  if (count < 1 || size < 8) {
    throw Error(ErrorKind::ConfigError,
                "corpus needs count >= 1 and size >= 8");
  }
  std::vector<BinaryMask> corpus;
  corpus.reserve(count);
  for (int i = 0; i < count; ++i) {
    Pcg32 rng(seed.seed, static_cast<std::uint64_t>(i) + 1);
    while (true) {
      const std::uint32_t kind = rng.bounded(10);
      BinaryMask mask = kind < 6   ? blob_mask(rng, size)
                        : kind < 8 ? rect_mask(rng, size)
                                   : ring_mask(rng, size);
      if (mask.foreground_count() > 0) {
        corpus.push_back(std::move(mask));
        break;
      }
    }
  }
  return corpus;
}

Polygon trace_contour(const BinaryMask& mask) {
  const int h = mask.height();
  const int w = mask.width();

  // Label 4-connected components; keep the largest (earliest on ties).
  std::vector<int> label(static_cast<std::size_t>(h) * w, -1);
  auto idx = [w](int r, int c) {
    return static_cast<std::size_t>(r) * w + c;
  };
  std::vector<std::int64_t> area;
  for (int r = 0; r < h; ++r) {
    for (int c = 0; c < w; ++c) {
      if (!mask.at(r, c) || label[idx(r, c)] >= 0) continue;
      const int id = static_cast<int>(area.size());
      area.push_back(0);
      std::queue<std::pair<int, int>> queue;
      queue.push({r, c});
      label[idx(r, c)] = id;
      while (!queue.empty()) {
        const auto [cr, cc] = queue.front();
        queue.pop();
        ++area[id];
        const int dr[4] = {-1, 1, 0, 0};
        const int dc[4] = {0, 0, -1, 1};
        for (int k = 0; k < 4; ++k) {
          const int nr = cr + dr[k];
          const int nc = cc + dc[k];
          if (nr < 0 || nr >= h || nc < 0 || nc >= w) continue;
          if (!mask.at(nr, nc) || label[idx(nr, nc)] >= 0) continue;
          label[idx(nr, nc)] = id;
          queue.push({nr, nc});
        }
      }
    }
  }
  if (area.empty()) {
    throw Error(ErrorKind::EmptyMask, "cannot trace an empty mask");
  }
  const int target = static_cast<int>(
      std::max_element(area.begin(), area.end()) - area.begin());

  auto in_target = [&](int r, int c) {
    return r >= 0 && r < h && c >= 0 && c < w && label[idx(r, c)] == target;
  };

  int r0 = -1, c0 = -1;
  for (int r = 0; r < h && r0 < 0; ++r) {
    for (int c = 0; c < w; ++c) {
      if (label[idx(r, c)] == target) {
        r0 = r;
        c0 = c;
        break;
      }
    }
  }

  // Crack following with foreground kept on the right of the walk direction.
  // Directions: 0 = E, 1 = S, 2 = W, 3 = N.
  const int dx[4] = {1, 0, -1, 0};
  const int dy[4] = {0, 1, 0, -1};
  auto crack_exists = [&](int x, int y, int dir) {
    switch (dir) {
      case 0: return in_target(y, x) && !in_target(y - 1, x);
      case 1: return in_target(y, x - 1) && !in_target(y, x);
      case 2: return in_target(y - 1, x - 1) && !in_target(y, x - 1);
      default: return in_target(y - 1, x) && !in_target(y - 1, x - 1);
    }
  };

  std::vector<Point2> corners;
  int x = c0;
  int y = r0;
  int dir = 0;  // start along the exposed top edge
  do {
    corners.push_back({static_cast<double>(x), static_cast<double>(y)});
    x += dx[dir];
    y += dy[dir];
    // Sharpest right turn first keeps diagonal neighbours separate.
    const int preference[3] = {(dir + 1) & 3, dir, (dir + 3) & 3};
    int next = -1;
    for (const int candidate : preference) {
      if (crack_exists(x, y, candidate)) {
        next = candidate;
        break;
      }
    }
    if (next < 0) {
      throw Error(ErrorKind::DegenerateInput, "contour trace lost the wall");
    }
    dir = next;
  } while (x != c0 || y != r0 || dir != 0);

  // Merge collinear runs (axis-aligned cracks make this a direction check).
  std::vector<Point2> verts;
  const std::size_t n = corners.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Point2& prev = corners[(i + n - 1) % n];
    const Point2& cur = corners[i];
    const Point2& next = corners[(i + 1) % n];
    const bool straight = (cur.x - prev.x == next.x - cur.x) &&
                          (cur.y - prev.y == next.y - cur.y);
    if (!straight) verts.push_back(cur);
  }
  return Polygon(std::move(verts));
}

}  // namespace maskpoints
