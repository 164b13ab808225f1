#include "maskpoints/rle.hpp"

#include <numeric>
#include <string>

namespace maskpoints {

Rle rle_encode(const BinaryMask& mask) {
  Rle rle;
  rle.height = mask.height();
  rle.width = mask.width();

  std::uint8_t prev = 0;  // leading run counts background
  std::int64_t run = 0;
  for (int c = 0; c < mask.width(); ++c) {
    for (int r = 0; r < mask.height(); ++r) {
      const std::uint8_t v = mask.at(r, c) ? 1 : 0;
      if (v != prev) {
        rle.counts.push_back(run);
        run = 0;
        prev = v;
      }
      ++run;
    }
  }
  rle.counts.push_back(run);
  return rle;
}

BinaryMask rle_decode(const Rle& rle) {
  if (rle.height < 1 || rle.width < 1) {
    throw Error(ErrorKind::MalformedRle, "RLE size must be positive");
  }
  std::int64_t total = 0;
  for (const std::int64_t count : rle.counts) {
    if (count < 0) {
      throw Error(ErrorKind::MalformedRle, "negative RLE count");
    }
    total += count;
  }
  const std::int64_t expected =
      static_cast<std::int64_t>(rle.height) * rle.width;
  if (total != expected) {
    throw Error(ErrorKind::MalformedRle,
                "RLE counts sum to " + std::to_string(total) + ", expected " +
                    std::to_string(expected));
  }

  BinaryMask mask(rle.height, rle.width);
  std::int64_t pos = 0;
  bool fg = false;
  for (const std::int64_t count : rle.counts) {
    if (fg) {
      for (std::int64_t i = 0; i < count; ++i) {
        const std::int64_t p = pos + i;
        mask.set(static_cast<int>(p % rle.height),
                 static_cast<int>(p / rle.height), true);
      }
    }
    pos += count;
    fg = !fg;
  }
  return mask;
}

}  // namespace maskpoints
