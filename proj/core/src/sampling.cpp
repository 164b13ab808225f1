#include "maskpoints/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace maskpoints {

GridSpec GridSpec::for_box(const Box& box, int n) {
  GridSpec spec;
  spec.alpha = box.width();
  spec.beta = box.height();
  spec.n = n;
  spec.side();  // validates
  return spec;
}

int GridSpec::side() const {
  const int s = static_cast<int>(std::lround(std::sqrt(static_cast<double>(n))));
  if (s < 2 || s * s != n) {
    throw Error(ErrorKind::InvalidCount,
                "grid point count must be a perfect square s^2 with s >= 2");
  }
  return s;
}

DensePointSet sample_boundary(const Polygon& poly, int n) {
  if (n < 1) {
    throw Error(ErrorKind::InvalidCount, "sample count must be >= 1");
  }
  const auto& verts = poly.vertices();
  const std::size_t m = verts.size();

  std::vector<double> cumulative(m + 1, 0.0);
  for (std::size_t i = 0; i < m; ++i) {
    const Point2& a = verts[i];
    const Point2& b = verts[(i + 1) % m];
    cumulative[i + 1] = cumulative[i] + std::hypot(b.x - a.x, b.y - a.y);
  }
  const double perimeter = cumulative[m];
  if (!(perimeter > 0.0)) {
    throw Error(ErrorKind::DegeneratePolygon, "polygon has zero perimeter");
  }

  std::vector<AttributedPoint> out;
  out.reserve(n);
  std::size_t edge = 0;
  for (int i = 0; i < n; ++i) {
    const double target = perimeter * static_cast<double>(i) / n;
    while (edge + 1 < m && cumulative[edge + 1] <= target) ++edge;
    const Point2& a = verts[edge];
    const Point2& b = verts[(edge + 1) % m];
    const double len = cumulative[edge + 1] - cumulative[edge];
    const double t = len > 0.0 ? (target - cumulative[edge]) / len : 0.0;
    out.push_back({a.x + t * (b.x - a.x), a.y + t * (b.y - a.y), 1.0});
  }
  return DensePointSet(std::move(out));
}

DensePointSet sample_grid(const Box& box, const GridSpec& spec) {
  const int s = spec.side();
  std::vector<AttributedPoint> out;
  out.reserve(spec.n);
  for (int r = 0; r < s; ++r) {
    for (int c = 0; c < s; ++c) {
      out.push_back({box.x_min + spec.alpha * c / (s - 1),
                     box.y_min + spec.beta * r / (s - 1), 1.0});
    }
  }
  return DensePointSet(std::move(out));
}

DensePointSet sample_dts(const ProbField& prob, int n, SamplerSeed seed,
                         const SamplingBandConfig& band,
                         const DistanceField& d) {
  if (n < 1) {
    throw Error(ErrorKind::InvalidCount, "sample count must be >= 1");
  }
  const std::int64_t cell_count =
      static_cast<std::int64_t>(d.height) * d.width;
  if (n > cell_count) {
    throw Error(ErrorKind::InfeasibleCount,
                "sample count exceeds total pixel count");
  }

  // Row-major support of the configured band.
  std::vector<std::int32_t> support;
  support.reserve(static_cast<std::size_t>(n));
  for (std::int64_t i = 0; i < cell_count; ++i) {
    if (prob.values[static_cast<std::size_t>(i)] > 0.0) {
      support.push_back(static_cast<std::int32_t>(i));
    }
  }

  // Widen by doubling delta until the support can hold n points. A zero
  // delta seeds the widening at the smallest positive distance on record.
  double delta = band.delta;
  while (static_cast<int>(support.size()) < n) {
    if (delta <= 0.0) {
      double smallest = std::numeric_limits<double>::infinity();
      for (const double v : d.values) {
        if (v > 0.0) smallest = std::min(smallest, v);
      }
      delta = smallest;
    } else {
      delta *= 2.0;
    }
    support.clear();
    for (std::int64_t i = 0; i < cell_count; ++i) {
      if (d.values[static_cast<std::size_t>(i)] <= delta) {
        support.push_back(static_cast<std::int32_t>(i));
      }
    }
  }

  // Partial Fisher-Yates: the first n slots become the sample.
  Pcg32 rng(seed.seed);
  const std::uint32_t m = static_cast<std::uint32_t>(support.size());
  std::vector<AttributedPoint> out;
  out.reserve(n);
  for (int i = 0; i < n; ++i) {
    const std::uint32_t j =
        static_cast<std::uint32_t>(i) +
        rng.bounded(m - static_cast<std::uint32_t>(i));
    std::swap(support[i], support[j]);
    const std::int32_t cell = support[i];
    const int r = static_cast<int>(cell / d.width);
    const int c = static_cast<int>(cell % d.width);
    out.push_back({c + 0.5, r + 0.5, 1.0});
  }
  return DensePointSet(std::move(out));
}

DensePointSet assign_attributes(const DensePointSet& pts,
                                const BinaryMask& mask) {
  std::vector<AttributedPoint> out = pts.points();
  for (AttributedPoint& p : out) {
    p.a = mask.at_point(p.x, p.y) ? 1.0 : 0.0;
  }
  return DensePointSet(std::move(out));
}

}  // namespace maskpoints
