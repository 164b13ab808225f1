#include "maskpoints/triangulate.hpp"

#include <algorithm>
#include <cstdint>
#include <unordered_set>

#include "maskpoints/predicates.hpp"

namespace maskpoints {

namespace {

constexpr int kGhost = -1;

struct Tri {
  int a, b, c;  // kGhost allowed in slot c only
  bool alive = true;

  bool ghost() const { return c == kGhost; }
};

std::uint64_t edge_key(int a, int b) {
  return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(a + 1)) << 32) |
         static_cast<std::uint32_t>(b + 1);
}

// Strict lexicographic betweenness for points already known collinear.
bool strictly_between(const Point2& p, const Point2& u, const Point2& v) {
  auto less = [](const Point2& s, const Point2& t) {
    return s.x < t.x || (s.x == t.x && s.y < t.y);
  };
  return (less(u, p) && less(p, v)) || (less(v, p) && less(p, u));
}

class Builder {
 public:
  explicit Builder(std::vector<Point2> pts) : pts_(std::move(pts)) {}

  // First triangle from indices 0, 1, 2; the caller guarantees they are not
  // collinear.
  void seed() {
    int a = 0, b = 1, c = 2;
    if (orient2d_sign(pts_[a], pts_[b], pts_[c]) < 0) std::swap(b, c);
    tris_.push_back({a, b, c});
    tris_.push_back({b, a, kGhost});
    tris_.push_back({c, b, kGhost});
    tris_.push_back({a, c, kGhost});
  }

  void insert(int p) {
    conflicts_.clear();
    for (std::size_t t = 0; t < tris_.size(); ++t) {
      if (tris_[t].alive && in_conflict(tris_[t], p)) {
        conflicts_.push_back(static_cast<int>(t));
      }
    }
    if (conflicts_.empty()) {
      throw Error(ErrorKind::DegenerateInput,
                  "triangulation insert found no conflict region");
    }

    cavity_edges_.clear();
    for (const int t : conflicts_) {
      const Tri& tri = tris_[t];
      cavity_edges_.insert(edge_key(tri.a, tri.b));
      cavity_edges_.insert(edge_key(tri.b, tri.c));
      cavity_edges_.insert(edge_key(tri.c, tri.a));
    }
    for (const int t : conflicts_) tris_[t].alive = false;

    for (const int t : conflicts_) {
      const Tri tri = tris_[t];
      const int v[4] = {tri.a, tri.b, tri.c, tri.a};
      for (int e = 0; e < 3; ++e) {
        if (cavity_edges_.count(edge_key(v[e + 1], v[e]))) continue;
        push_triangle(v[e], v[e + 1], p);
      }
    }
  }

  std::vector<std::array<int, 3>> solid_triangles() const {
    std::vector<std::array<int, 3>> out;
    for (const Tri& t : tris_) {
      if (t.alive && !t.ghost()) out.push_back({t.a, t.b, t.c});
    }
    return out;
  }

  const std::vector<Point2>& points() const { return pts_; }

 private:
  bool in_conflict(const Tri& t, int p) const {
    const Point2& q = pts_[p];
    if (!t.ghost()) {
      return incircle_sign(pts_[t.a], pts_[t.b], pts_[t.c], q) > 0;
    }
    // Ghost (a, b, G) stores the hull edge reversed; its conflict region is
    // the open half-plane strictly left of a->b plus the open segment.
    const Point2& a = pts_[t.a];
    const Point2& b = pts_[t.b];
    const int side = orient2d_sign(a, b, q);
    if (side > 0) return true;
    return side == 0 && strictly_between(q, a, b);
  }

  void push_triangle(int a, int b, int c) {
    // Keep the ghost, if any, in slot c (cyclic rotation only).
    if (a == kGhost) {
      tris_.push_back({b, c, a});
    } else if (b == kGhost) {
      tris_.push_back({c, a, b});
    } else {
      tris_.push_back({a, b, c});
    }
  }

  std::vector<Point2> pts_;
  std::vector<Tri> tris_;
  std::vector<int> conflicts_;
  std::unordered_set<std::uint64_t> cavity_edges_;
};

}  // namespace

Triangulation delaunay(const DensePointSet& pts) {
  const auto& input = pts.points();

  // Sort by coordinates, then collapse coincident points onto the
  // representative with the highest attribute (lowest input index on ties).
  std::vector<int> order(input.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  std::sort(order.begin(), order.end(), [&](int i, int j) {
    if (input[i].x != input[j].x) return input[i].x < input[j].x;
    if (input[i].y != input[j].y) return input[i].y < input[j].y;
    if (input[i].a != input[j].a) return input[i].a > input[j].a;
    return i < j;
  });

  std::vector<int> representative;  // internal index -> input index
  std::vector<Point2> coords;
  for (const int idx : order) {
    if (!coords.empty() && coords.back().x == input[idx].x &&
        coords.back().y == input[idx].y) {
      continue;
    }
    representative.push_back(idx);
    coords.push_back({input[idx].x, input[idx].y});
  }

  if (coords.size() < 3) {
    throw Error(ErrorKind::DegenerateInput,
                "need at least 3 distinct points to triangulate");
  }

  // Move the first point that is not collinear with coords[0..1] into slot 2,
  // keeping the remaining order; both arrays shift together.
  std::size_t j = 2;
  while (j < coords.size() &&
         orient2d_sign(coords[0], coords[1], coords[j]) == 0) {
    ++j;
  }
  if (j == coords.size()) {
    throw Error(ErrorKind::DegenerateInput, "all points are collinear");
  }
  std::rotate(coords.begin() + 2, coords.begin() + j, coords.begin() + j + 1);
  std::rotate(representative.begin() + 2, representative.begin() + j,
              representative.begin() + j + 1);

  Builder builder(std::move(coords));
  builder.seed();
  for (std::size_t p = 3; p < representative.size(); ++p) {
    builder.insert(static_cast<int>(p));
  }

  Triangulation tri;
  tri.vertices = input;
  for (const auto& t : builder.solid_triangles()) {
    std::array<int, 3> mapped = {representative[t[0]], representative[t[1]],
                                 representative[t[2]]};
    // Canonical rotation: geometrically smallest vertex first.
    const auto& v = builder.points();
    int lead = 0;
    for (int i = 1; i < 3; ++i) {
      const Point2& a = v[t[i]];
      const Point2& b = v[t[lead]];
      if (a.x < b.x || (a.x == b.x && a.y < b.y)) lead = i;
    }
    std::array<int, 3> rotated = {mapped[lead], mapped[(lead + 1) % 3],
                                  mapped[(lead + 2) % 3]};
    tri.triangles.push_back(rotated);
  }
  return tri;
}

}  // namespace maskpoints
