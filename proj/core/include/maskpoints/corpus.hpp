#pragma once

#include <vector>

#include "maskpoints/mask.hpp"
#include "maskpoints/rng.hpp"

namespace maskpoints {

/// Deterministic corpus of smooth random blobs (low-order Fourier contours),
/// rectangles, and rings. Every mask is non-empty; reproducible per seed.
std::vector<BinaryMask> synthetic_corpus(SamplerSeed seed, int count, int size);

/// Closed outer contour of the largest 4-connected foreground component,
/// traced along pixel edges (vertices at integer corners, collinear runs
/// merged).
Polygon trace_contour(const BinaryMask& mask);

}  // namespace maskpoints
