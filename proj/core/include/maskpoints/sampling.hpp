#pragma once

#include "maskpoints/distance_field.hpp"
#include "maskpoints/point_set.hpp"
#include "maskpoints/rng.hpp"

namespace maskpoints {

/// s x s lattice specification over a box; n must be a perfect square with
/// s >= 2. alpha/beta are the lattice spans (the box extents at encode time).
struct GridSpec {
  double alpha = 0.0;
  double beta = 0.0;
  int n = 0;

  static GridSpec for_box(const Box& box, int n);
  int side() const;
};

/// n points at uniform arc-length along the closed polygon, starting from
/// vertex 0; all attributes 1.
DensePointSet sample_boundary(const Polygon& poly, int n);

/// Row-major s x s lattice spanning the box; attributes initialized to 1.
DensePointSet sample_grid(const Box& box, const GridSpec& spec);

/// Distance transform sampling: n distinct pixel centers drawn uniformly
/// without replacement from the band support {D(p) <= delta}. When the
/// support is smaller than n the band widens (delta doubles, seeded at the
/// smallest positive distance when delta is zero) until it fits. Output is a
/// pure function of (fields, n, seed); attributes initialized to 1.
DensePointSet sample_dts(const ProbField& prob, int n, SamplerSeed seed,
                         const SamplingBandConfig& band,
                         const DistanceField& d);

/// Sets each point's attribute from the mask pixel containing it: 1 on
/// foreground, 0 on background. Coordinates are unchanged.
DensePointSet assign_attributes(const DensePointSet& pts,
                                const BinaryMask& mask);

}  // namespace maskpoints
