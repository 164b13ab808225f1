#include "maskpoints/geometry.hpp"

#include <cmath>

namespace maskpoints {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::DegeneratePolygon: return "degenerate-polygon";
    case ErrorKind::DimensionMismatch: return "dimension-mismatch";
    case ErrorKind::EmptyMask: return "empty-mask";
    case ErrorKind::MalformedRle: return "malformed-rle";
    case ErrorKind::EmptyBoundary: return "empty-boundary";
    case ErrorKind::EmptyBand: return "empty-band";
    case ErrorKind::InvalidCount: return "invalid-count";
    case ErrorKind::InfeasibleCount: return "infeasible-count";
    case ErrorKind::OutOfBounds: return "out-of-bounds";
    case ErrorKind::CardinalityMismatch: return "cardinality-mismatch";
    case ErrorKind::DegenerateInput: return "degenerate-input";
    case ErrorKind::InsufficientPoints: return "insufficient-points";
    case ErrorKind::LayoutError: return "layout-error";
    case ErrorKind::ConfigError: return "config-error";
    case ErrorKind::ParseError: return "parse-error";
    case ErrorKind::SchemaError: return "schema-error";
    case ErrorKind::IoError: return "io-error";
  }
  return "unknown";
}

Box::Box(double x0, double y0, double x1, double y1)
    : x_min(x0), y_min(y0), x_max(x1), y_max(y1) {
  if (x_min > x_max || y_min > y_max) {
    throw Error(ErrorKind::DegenerateInput, "box min exceeds max");
  }
}

Polygon::Polygon(std::vector<Point2> vertices) : vertices_(std::move(vertices)) {
  if (vertices_.size() < 3) {
    throw Error(ErrorKind::DegeneratePolygon,
                "polygon needs at least 3 vertices");
  }
  const std::size_t n = vertices_.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (vertices_[i] == vertices_[(i + 1) % n]) {
      throw Error(ErrorKind::DegeneratePolygon,
                  "polygon has consecutive duplicate vertices");
    }
  }
}

double Polygon::perimeter() const {
  double total = 0.0;
  const std::size_t n = vertices_.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Point2& a = vertices_[i];
    const Point2& b = vertices_[(i + 1) % n];
    total += std::hypot(b.x - a.x, b.y - a.y);
  }
  return total;
}

}  // namespace maskpoints
