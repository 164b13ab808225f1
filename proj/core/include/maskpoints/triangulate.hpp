#pragma once

#include <array>
#include <vector>

#include "maskpoints/point_set.hpp"

namespace maskpoints {

/// Delaunay triangulation over the distinct points of a set. Triangles are
/// counterclockwise vertex-index triples into `vertices` (the input set,
/// verbatim). Coincident input points collapse to one vertex — the one with
/// the highest attribute — before triangulating, and no vertex ever lies
/// strictly inside another triangle's circumcircle. The triangle list is a
/// pure function of the point multiset (insertion follows coordinate order),
/// so geometrically equal inputs triangulate identically regardless of point
/// order.
struct Triangulation {
  std::vector<AttributedPoint> vertices;
  std::vector<std::array<int, 3>> triangles;
};

/// Throws DegenerateInput when fewer than 3 distinct points remain after
/// deduplication or all of them are collinear.
Triangulation delaunay(const DensePointSet& pts);

}  // namespace maskpoints
