#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "maskpoints/geometry.hpp"
#include "maskpoints/rle.hpp"

namespace maskpoints {

/// One COCO-style instance annotation. Polygons are kept as vertex lists and
/// RLE counts stay encoded; to_mask() materializes on demand.
struct AnnotationRecord {
  std::int64_t id = 0;
  std::int64_t image_id = 0;
  std::int64_t category_id = 0;
  int height = 0;
  int width = 0;
  std::vector<std::vector<Point2>> polygons;
  std::optional<Rle> rle;

  /// Union of the rasterized polygon components, or the decoded RLE.
  BinaryMask to_mask() const;

  /// The polygon component with the longest perimeter (contour sampling
  /// source); empty optional when the record is RLE-only.
  std::optional<Polygon> longest_polygon() const;
};

struct AnnotationSet {
  std::vector<AnnotationRecord> records;
  int skipped_zero_area = 0;
};

/// Parses a COCO-style JSON file with "images" and "annotations" arrays.
/// Malformed JSON raises ParseError with the byte offset; an annotation
/// referencing an unknown image id raises SchemaError naming the id.
/// Zero-area segmentations are skipped and counted.
AnnotationSet load_annotations(const std::string& path);

}  // namespace maskpoints
