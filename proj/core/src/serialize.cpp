#include "maskpoints/serialize.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace maskpoints {

using nlohmann::json;

std::string point_set_json(const DensePointSet& pts) {
  json points = json::array();
  for (const AttributedPoint& p : pts.points()) {
    points.push_back({p.x, p.y, p.a});
  }
  const json doc = {{"n", pts.size()}, {"points", points}};
  return doc.dump();
}

DensePointSet point_set_from_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::ParseError,
                std::string("point-set JSON: ") + e.what());
  }
  if (!doc.contains("points") || !doc["points"].is_array()) {
    throw Error(ErrorKind::SchemaError, "point-set JSON lacks a points array");
  }
  std::vector<AttributedPoint> points;
  for (const json& entry : doc["points"]) {
    if (!entry.is_array() || entry.size() != 3) {
      throw Error(ErrorKind::SchemaError,
                  "each point must be an [x, y, a] triple");
    }
    points.push_back({entry[0].get<double>(), entry[1].get<double>(),
                      entry[2].get<double>()});
  }
  if (doc.contains("n") &&
      doc["n"].get<std::size_t>() != points.size()) {
    throw Error(ErrorKind::SchemaError,
                "declared point count does not match the points array");
  }
  return DensePointSet(std::move(points));
}

std::string rle_json(const Rle& rle) {
  const json doc = {{"size", {rle.height, rle.width}},
                    {"counts", rle.counts}};
  return doc.dump();
}

Rle rle_from_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::ParseError, std::string("RLE JSON: ") + e.what());
  }
  if (!doc.contains("size") || !doc["size"].is_array() ||
      doc["size"].size() != 2 || !doc.contains("counts")) {
    throw Error(ErrorKind::SchemaError,
                "RLE JSON needs size [h, w] and counts");
  }
  Rle rle;
  rle.height = doc["size"][0].get<int>();
  rle.width = doc["size"][1].get<int>();
  rle.counts = doc["counts"].get<std::vector<std::int64_t>>();
  return rle;
}

std::string triangulation_json(const Triangulation& tri) {
  json vertices = json::array();
  for (const AttributedPoint& p : tri.vertices) {
    vertices.push_back({p.x, p.y, p.a});
  }
  json triangles = json::array();
  for (const auto& t : tri.triangles) {
    triangles.push_back({t[0], t[1], t[2]});
  }
  const json doc = {{"vertices", vertices}, {"triangles", triangles}};
  return doc.dump();
}

std::string field_json(int height, int width,
                       const std::vector<double>& values) {
  const json doc = {{"height", height}, {"width", width}, {"values", values}};
  return doc.dump();
}

void write_pgm(const std::string& path, const BinaryMask& mask) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw Error(ErrorKind::IoError, "cannot open " + path + " for writing");
  }
  out << "P5\n" << mask.width() << " " << mask.height() << "\n255\n";
  std::vector<unsigned char> row(mask.width());
  for (int r = 0; r < mask.height(); ++r) {
    for (int c = 0; c < mask.width(); ++c) {
      row[c] = mask.at(r, c) ? 255 : 0;
    }
    out.write(reinterpret_cast<const char*>(row.data()), row.size());
  }
}

BinaryMask read_pgm(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(ErrorKind::IoError, "cannot open " + path);
  }
  std::string magic;
  in >> magic;
  if (magic != "P5") {
    throw Error(ErrorKind::ParseError, "expected binary PGM (P5) in " + path);
  }
  auto next_token = [&in, &path]() {
    std::string token;
    while (in >> token) {
      if (token[0] == '#') {
        std::string rest;
        std::getline(in, rest);
        continue;
      }
      return token;
    }
    throw Error(ErrorKind::ParseError, "truncated PGM header in " + path);
  };
  const int width = std::stoi(next_token());
  const int height = std::stoi(next_token());
  const int maxval = std::stoi(next_token());
  if (width < 1 || height < 1 || maxval < 1 || maxval > 255) {
    throw Error(ErrorKind::ParseError, "unsupported PGM header in " + path);
  }
  in.get();  // single whitespace after maxval

  BinaryMask mask(height, width);
  std::vector<unsigned char> row(width);
  for (int r = 0; r < height; ++r) {
    in.read(reinterpret_cast<char*>(row.data()), row.size());
    if (!in) {
      throw Error(ErrorKind::ParseError, "truncated PGM pixel data in " + path);
    }
    for (int c = 0; c < width; ++c) {
      if (row[c] != 0) mask.set(r, c, true);
    }
  }
  return mask;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(ErrorKind::IoError, "cannot open " + path);
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw Error(ErrorKind::IoError, "cannot open " + path + " for writing");
  }
  out << content;
}

}  // namespace maskpoints
