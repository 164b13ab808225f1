#pragma once

#include <cstdint>
#include <vector>

#include "maskpoints/mask.hpp"

namespace maskpoints {

/// Per-pixel distance to the nearest boundary point, normalized by the
/// geometric mean of the boundary set's coordinate extents (each clamped
/// below at 1 pixel).
struct DistanceField {
  int height = 0;
  int width = 0;
  std::vector<double> values;                // normalized distance D(p)
  std::vector<std::int64_t> squared_pixels;  // exact squared pixel distance
  double denominator = 1.0;

  double at(int r, int c) const {
    return values[static_cast<std::size_t>(r) * width + c];
  }
};

/// Normalized per-pixel sampling probability; uniform over the band
/// {p : D(p) <= delta}, zero elsewhere.
struct ProbField {
  int height = 0;
  int width = 0;
  std::vector<double> values;

  double at(int r, int c) const {
    return values[static_cast<std::size_t>(r) * width + c];
  }
};

struct SamplingBandConfig {
  double delta = 0.04;

  SamplingBandConfig() = default;
  explicit SamplingBandConfig(double d) : delta(d) {
    if (!(delta >= 0.0)) {
      throw Error(ErrorKind::ConfigError, "delta must be non-negative");
    }
  }
};

/// Exact Euclidean distance transform (two-pass lower envelope of parabolas)
/// seeded at the pixels containing the boundary points. Squared distances are
/// integers and match the brute-force nearest-point scan bit for bit.
DistanceField distance_map(const BoundaryPointSet& boundary, int height,
                           int width);

/// Heaviside band weighting: P(p) = 1/m on the m pixels with D(p) <= delta.
/// Throws EmptyBand if no pixel qualifies.
ProbField sampling_probability(const DistanceField& d,
                               const SamplingBandConfig& band);

}  // namespace maskpoints
