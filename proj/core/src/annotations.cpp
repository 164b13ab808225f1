#include "maskpoints/annotations.hpp"

#include <cmath>
#include <fstream>
#include <unordered_map>

#include "json.hpp"

namespace maskpoints {

using nlohmann::json;

namespace {

double shoelace_area(const std::vector<Point2>& verts) {
  double twice = 0.0;
  const std::size_t n = verts.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Point2& a = verts[i];
    const Point2& b = verts[(i + 1) % n];
    twice += a.x * b.y - b.x * a.y;
  }
  return std::fabs(twice) * 0.5;
}

std::vector<Point2> flat_to_points(const json& flat) {
  std::vector<Point2> verts;
  verts.reserve(flat.size() / 2);
  for (std::size_t i = 0; i + 1 < flat.size(); i += 2) {
    verts.push_back({flat[i].get<double>(), flat[i + 1].get<double>()});
  }
  return verts;
}

// Consecutive duplicates violate the Polygon invariant; COCO data contains
// them occasionally.
std::vector<Point2> drop_consecutive_duplicates(std::vector<Point2> verts) {
  std::vector<Point2> out;
  for (const Point2& p : verts) {
    if (out.empty() || !(out.back() == p)) out.push_back(p);
  }
  while (out.size() > 1 && out.front() == out.back()) out.pop_back();
  return out;
}

}  // namespace

BinaryMask AnnotationRecord::to_mask() const {
  if (rle) {
    return rle_decode(*rle);
  }
  BinaryMask mask(height, width);
  for (const auto& component : polygons) {
    const std::vector<Point2> verts = drop_consecutive_duplicates(component);
    if (verts.size() < 3) continue;
    const BinaryMask part = rasterize_polygon(Polygon(verts), height, width);
    for (std::size_t i = 0; i < mask.cells().size(); ++i) {
      mask.cells()[i] |= part.cells()[i];
    }
  }
  return mask;
}

std::optional<Polygon> AnnotationRecord::longest_polygon() const {
  std::optional<Polygon> best;
  double best_perimeter = -1.0;
  for (const auto& component : polygons) {
    const std::vector<Point2> verts = drop_consecutive_duplicates(component);
    if (verts.size() < 3) continue;
    Polygon poly(verts);
    const double p = poly.perimeter();
    if (p > best_perimeter) {
      best_perimeter = p;
      best = std::move(poly);
    }
  }
  return best;
}

AnnotationSet load_annotations(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(ErrorKind::IoError, "cannot open " + path);
  }
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::ParseError,
                "malformed JSON at byte " + std::to_string(e.byte) + " in " +
                    path);
  }

  if (!doc.contains("images") || !doc["images"].is_array() ||
      !doc.contains("annotations") || !doc["annotations"].is_array()) {
    throw Error(ErrorKind::SchemaError,
                "annotation file needs images and annotations arrays");
  }

  struct ImageSize {
    int height;
    int width;
  };
  std::unordered_map<std::int64_t, ImageSize> images;
  for (const json& image : doc["images"]) {
    if (!image.contains("id") || !image.contains("height") ||
        !image.contains("width")) {
      throw Error(ErrorKind::SchemaError,
                  "image entry lacks id, height, or width");
    }
    images[image["id"].get<std::int64_t>()] = {
        image["height"].get<int>(), image["width"].get<int>()};
  }

  AnnotationSet out;
  for (const json& ann : doc["annotations"]) {
    if (!ann.contains("image_id") || !ann.contains("segmentation")) {
      throw Error(ErrorKind::SchemaError,
                  "annotation lacks image_id or segmentation");
    }
    const std::int64_t image_id = ann["image_id"].get<std::int64_t>();
    const auto img = images.find(image_id);
    if (img == images.end()) {
      throw Error(ErrorKind::SchemaError,
                  "annotation references unknown image id " +
                      std::to_string(image_id));
    }

    AnnotationRecord record;
    record.id = ann.value("id", std::int64_t{0});
    record.image_id = image_id;
    record.category_id = ann.value("category_id", std::int64_t{0});
    record.height = img->second.height;
    record.width = img->second.width;

    const json& seg = ann["segmentation"];
    bool zero_area = false;
    if (seg.is_array()) {
      double total_area = 0.0;
      for (const json& flat : seg) {
        if (!flat.is_array()) {
          throw Error(ErrorKind::SchemaError,
                      "polygon segmentation must be arrays of coordinates");
        }
        std::vector<Point2> verts = flat_to_points(flat);
        if (verts.size() >= 3) total_area += shoelace_area(verts);
        record.polygons.push_back(std::move(verts));
      }
      zero_area = total_area <= 0.0;
    } else if (seg.is_object() && seg.contains("counts") &&
               seg.contains("size")) {
      if (!seg["counts"].is_array()) {
        throw Error(ErrorKind::SchemaError,
                    "compressed RLE strings are not supported; expected "
                    "uncompressed integer counts");
      }
      Rle rle;
      rle.height = seg["size"][0].get<int>();
      rle.width = seg["size"][1].get<int>();
      rle.counts = seg["counts"].get<std::vector<std::int64_t>>();
      // Foreground runs are the odd-indexed counts.
      std::int64_t fg = 0;
      for (std::size_t i = 1; i < rle.counts.size(); i += 2) {
        fg += rle.counts[i];
      }
      zero_area = fg == 0;
      record.rle = std::move(rle);
    } else {
      throw Error(ErrorKind::SchemaError,
                  "segmentation must be a polygon list or an RLE object");
    }

    if (zero_area) {
      ++out.skipped_zero_area;
      continue;
    }
    out.records.push_back(std::move(record));
  }
  return out;
}

}  // namespace maskpoints
