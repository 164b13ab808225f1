#pragma once

#include "maskpoints/mask.hpp"
#include "maskpoints/sampling.hpp"
#include "maskpoints/triangulate.hpp"

namespace maskpoints {

/// Per-pixel interpolated score in [0, 1]; zero outside the convex hull of
/// the point set.
struct ScoreMap {
  int height = 0;
  int width = 0;
  std::vector<double> values;

  double at(int r, int c) const {
    return values[static_cast<std::size_t>(r) * width + c];
  }
};

struct DecodeConfig {
  double tau = 0.5;
  int hull_k = 3;

  DecodeConfig() = default;
  DecodeConfig(double threshold, int k) : tau(threshold), hull_k(k) {
    if (!(tau > 0.0 && tau < 1.0)) {
      throw Error(ErrorKind::ConfigError, "threshold must lie in (0, 1)");
    }
    if (hull_k < 3) {
      throw Error(ErrorKind::ConfigError, "hull neighbor count must be >= 3");
    }
  }
};

/// Barycentric interpolation of vertex scores at every pixel center inside a
/// triangle. Pixels covered by several triangles (shared edges) take the
/// value of the lowest-index triangle; containment uses exact edge signs so
/// adjacent triangles never leave gaps.
ScoreMap interpolate_scores(const Triangulation& tri, int height, int width);

/// delaunay + interpolate_scores + threshold at cfg.tau (foreground >= tau).
BinaryMask decode_triangulation(const DensePointSet& pts, int height,
                                int width, const DecodeConfig& cfg);

/// k-nearest-neighbour concave hull (Moreira-Santos) of the points scoring
/// >= tau, rasterized; pixels containing those points are always foreground.
/// Restarts with k+1 when the walk fails or leaves a point outside, falling
/// back to the convex hull once k exceeds the candidate count.
BinaryMask concave_hull(const DensePointSet& pts, const DecodeConfig& cfg,
                        int height, int width);

/// Bilinear upsampling of the s x s attribute lattice onto the box region,
/// thresholded at cfg.tau; pixels outside the box stay background. Points
/// must sit on the sample_grid lattice.
BinaryMask decode_grid(const DensePointSet& pts, const GridSpec& spec,
                       const Box& box, int height, int width,
                       const DecodeConfig& cfg);

}  // namespace maskpoints
