#pragma once

#include <string>
#include <vector>

#include "maskpoints/decode.hpp"
#include "maskpoints/distance_field.hpp"
#include "maskpoints/point_set.hpp"
#include "maskpoints/rle.hpp"
#include "maskpoints/triangulate.hpp"

namespace maskpoints {

/// {"n": int, "points": [[x, y, a], ...]}
std::string point_set_json(const DensePointSet& pts);
DensePointSet point_set_from_json(const std::string& text);

/// {"size": [height, width], "counts": [...]} (COCO uncompressed layout).
std::string rle_json(const Rle& rle);
Rle rle_from_json(const std::string& text);

/// {"vertices": [[x, y, a], ...], "triangles": [[i, j, k], ...]}
std::string triangulation_json(const Triangulation& tri);

/// {"height": h, "width": w, "values": [...]} — row-major 64-bit floats.
std::string field_json(int height, int width,
                       const std::vector<double>& values);

/// Binary PGM (P5), foreground = 255.
void write_pgm(const std::string& path, const BinaryMask& mask);
BinaryMask read_pgm(const std::string& path);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

}  // namespace maskpoints
