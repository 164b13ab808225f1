#pragma once

#include <cstdint>
#include <vector>

#include "maskpoints/mask.hpp"

namespace maskpoints {

/// COCO-style uncompressed run-length encoding: column-major scan order, the
/// first run counts background pixels (and may be zero).
struct Rle {
  int height = 0;
  int width = 0;
  std::vector<std::int64_t> counts;
};

Rle rle_encode(const BinaryMask& mask);

/// Throws MalformedRle when the counts do not sum to height * width or any
/// count is negative.
BinaryMask rle_decode(const Rle& rle);

}  // namespace maskpoints
