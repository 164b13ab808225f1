#include "maskpoints/distance_field.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace maskpoints {

namespace {

// Large finite sentinel for unseeded cells; headroom for + n^2 in int64.
constexpr std::int64_t kFar = std::int64_t{1} << 60;

// 1-D squared distance transform over f, writing into out. Lower envelope of
// the parabolas y = (x - i)^2 + f[i] per Felzenszwalb-Huttenlocher.
void transform_1d(const std::int64_t* f, std::int64_t* out, int n,
                  std::vector<int>& hull, std::vector<double>& breaks) {
  constexpr double kInf = std::numeric_limits<double>::infinity();
  hull.resize(n);
  breaks.resize(n + 1);

  auto intersect = [f](int q, int p) {
    const std::int64_t num = (f[q] + static_cast<std::int64_t>(q) * q) -
                             (f[p] + static_cast<std::int64_t>(p) * p);
    return static_cast<double>(num) / (2.0 * (q - p));
  };

  int k = 0;
  hull[0] = 0;
  breaks[0] = -kInf;
  breaks[1] = kInf;
  for (int q = 1; q < n; ++q) {
    double s = intersect(q, hull[k]);
    while (s <= breaks[k]) {
      --k;
      s = intersect(q, hull[k]);
    }
    ++k;
    hull[k] = q;
    breaks[k] = s;
    breaks[k + 1] = kInf;
  }

  int j = 0;
  for (int x = 0; x < n; ++x) {
    while (breaks[j + 1] < x) ++j;
    const std::int64_t dx = x - hull[j];
    out[x] = dx * dx + f[hull[j]];
  }
}

}  // namespace

DistanceField distance_map(const BoundaryPointSet& boundary, int height,
                           int width) {
  if (boundary.points.empty()) {
    throw Error(ErrorKind::EmptyBoundary, "boundary point set is empty");
  }

  const std::size_t cell_count =
      static_cast<std::size_t>(height) * static_cast<std::size_t>(width);
  std::vector<std::int64_t> sq(cell_count, kFar);

  double x_min = boundary.points[0].x;
  double x_max = x_min;
  double y_min = boundary.points[0].y;
  double y_max = y_min;
  for (const Point2& p : boundary.points) {
    const int c = static_cast<int>(std::floor(p.x));
    const int r = static_cast<int>(std::floor(p.y));
    if (r < 0 || r >= height || c < 0 || c >= width) {
      throw Error(ErrorKind::OutOfBounds, "boundary point outside grid");
    }
    sq[static_cast<std::size_t>(r) * width + c] = 0;
    x_min = std::min(x_min, p.x);
    x_max = std::max(x_max, p.x);
    y_min = std::min(y_min, p.y);
    y_max = std::max(y_max, p.y);
  }

  // Columns first, then rows.
  std::vector<std::int64_t> col(height);
  std::vector<std::int64_t> tmp(std::max(height, width));
  std::vector<int> hull;
  std::vector<double> breaks;
  for (int c = 0; c < width; ++c) {
    for (int r = 0; r < height; ++r) {
      col[r] = sq[static_cast<std::size_t>(r) * width + c];
    }
    transform_1d(col.data(), tmp.data(), height, hull, breaks);
    for (int r = 0; r < height; ++r) {
      sq[static_cast<std::size_t>(r) * width + c] = tmp[r];
    }
  }
  std::vector<std::int64_t> row(width);
  for (int r = 0; r < height; ++r) {
    std::int64_t* base = sq.data() + static_cast<std::size_t>(r) * width;
    std::copy(base, base + width, row.data());
    transform_1d(row.data(), base, width, hull, breaks);
  }

  DistanceField field;
  field.height = height;
  field.width = width;
  const double extent_x = std::max(1.0, x_max - x_min);
  const double extent_y = std::max(1.0, y_max - y_min);
  field.denominator = std::sqrt(extent_x * extent_y);
  field.squared_pixels = std::move(sq);
  field.values.resize(cell_count);
  for (std::size_t i = 0; i < cell_count; ++i) {
    field.values[i] = std::sqrt(static_cast<double>(field.squared_pixels[i])) /
                      field.denominator;
  }
  return field;
}

ProbField sampling_probability(const DistanceField& d,
                               const SamplingBandConfig& band) {
  ProbField prob;
  prob.height = d.height;
  prob.width = d.width;
  prob.values.assign(d.values.size(), 0.0);

  std::size_t support = 0;
  for (const double v : d.values) {
    if (v <= band.delta) ++support;
  }
  if (support == 0) {
    throw Error(ErrorKind::EmptyBand, "no pixel within the sampling band");
  }
  const double p = 1.0 / static_cast<double>(support);
  for (std::size_t i = 0; i < d.values.size(); ++i) {
    if (d.values[i] <= band.delta) prob.values[i] = p;
  }
  return prob;
}

}  // namespace maskpoints
