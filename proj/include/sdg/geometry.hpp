#pragma once

#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace sdg {

using Vec2 = Eigen::Vector2d;
using Mat2 = Eigen::Matrix2d;

using ScalarField = std::function<double(const Vec2&)>;
using VectorField = std::function<Vec2(const Vec2&)>;
using TensorField = std::function<Mat2(const Vec2&)>;

/// Raised for malformed or invalid meshes (parse, orientation, convexity, topology).
class MeshError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Raised when a point-wise evaluation is requested outside the admissible region.
class DomainError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

inline double cross(const Vec2& a, const Vec2& b) { return a.x() * b.y() - a.y() * b.x(); }

/// Counterclockwise quarter turn: (x, y) -> (-y, x).
inline Vec2 rotate_ccw(const Vec2& g) { return {-g.y(), g.x()}; }

double signed_area(const std::vector<Vec2>& pts);
double triangle_area(const Vec2& a, const Vec2& b, const Vec2& c);
double diameter(const std::vector<Vec2>& pts);

/// A convex polygon with counterclockwise vertices v_0..v_{m-1}. Edge e_i joins
/// v_i and v_{i+1} (indices mod m) and carries the outward unit normal n_i.
class Polygon {
public:
  explicit Polygon(std::vector<Vec2> vertices);

  int size() const { return static_cast<int>(vertices_.size()); }
  const Vec2& vertex(int i) const { return vertices_[wrap(i)]; }
  const std::vector<Vec2>& vertices() const { return vertices_; }
  const Vec2& normal(int i) const { return normals_[wrap(i)]; }
  double edge_length(int i) const { return lengths_[wrap(i)]; }
  Vec2 edge_midpoint(int i) const { return 0.5 * (vertex(i) + vertex(i + 1)); }
  double area() const { return area_; }
  const Vec2& centroid() const { return centroid_; }
  double diameter() const { return diameter_; }

  /// Signed distance from x to the line of edge i, positive inside.
  double edge_distance(int i, const Vec2& x) const { return (vertex(i) - x).dot(normal(i)); }
  bool contains_strictly(const Vec2& x, double margin = 0.0) const;

  int wrap(int i) const {
    const int m = size();
    return ((i % m) + m) % m;
  }

private:
  std::vector<Vec2> vertices_;
  std::vector<Vec2> normals_;
  std::vector<double> lengths_;
  double area_ = 0.0;
  Vec2 centroid_ = Vec2::Zero();
  double diameter_ = 0.0;
};

}  // namespace sdg
