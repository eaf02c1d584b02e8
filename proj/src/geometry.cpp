#include "sdg/geometry.hpp"

#include <cmath>

namespace sdg {

double signed_area(const std::vector<Vec2>& pts) {
  double a = 0.0;
  const std::size_t m = pts.size();
  for (std::size_t i = 0; i < m; ++i) a += cross(pts[i], pts[(i + 1) % m]);
  return 0.5 * a;
}

double triangle_area(const Vec2& a, const Vec2& b, const Vec2& c) {
  return 0.5 * std::abs(cross(b - a, c - a));
}

double diameter(const std::vector<Vec2>& pts) {
  double d = 0.0;
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j) d = std::max(d, (pts[i] - pts[j]).norm());
  return d;
}

Polygon::Polygon(std::vector<Vec2> vertices) : vertices_(std::move(vertices)) {
  const int m = size();
  if (m < 3) throw MeshError("polygon needs at least 3 vertices");
  normals_.resize(m);
  lengths_.resize(m);
  for (int i = 0; i < m; ++i) {
    const Vec2 t = vertex(i + 1) - vertex(i);
    lengths_[i] = t.norm();
    if (lengths_[i] == 0.0) throw MeshError("polygon has a zero-length edge");
    normals_[i] = Vec2(t.y(), -t.x()) / lengths_[i];
  }
  area_ = signed_area(vertices_);
  // centroid via the shoelace moments
  Vec2 c = Vec2::Zero();
  for (int i = 0; i < m; ++i) {
    const double w = cross(vertex(i), vertex(i + 1));
    c += w * (vertex(i) + vertex(i + 1));
  }
  centroid_ = c / (6.0 * area_);
  diameter_ = sdg::diameter(vertices_);
}

bool Polygon::contains_strictly(const Vec2& x, double margin) const {
  for (int i = 0; i < size(); ++i)
    if (edge_distance(i, x) <= margin) return false;
  return true;
}

}  // namespace sdg
