#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "sdg/geometry.hpp"

namespace sdg {

/// Primal polygonal partition of the domain. Construction validates every cell
/// (index range, counterclockwise orientation, strict convexity) and the edge
/// topology (each edge shared by one or two cells with opposite orientation), so
/// a PrimalMesh that exists is a valid one.
class PrimalMesh {
public:
  PrimalMesh(std::vector<Vec2> vertices, std::vector<std::vector<int>> cells);

  int num_vertices() const { return static_cast<int>(vertices_.size()); }
  int num_cells() const { return static_cast<int>(cells_.size()); }
  const std::vector<Vec2>& vertices() const { return vertices_; }
  const std::vector<std::vector<int>>& cells() const { return cells_; }
  const std::vector<int>& cell(int c) const { return cells_[c]; }
  bool is_boundary_vertex(int v) const { return boundary_vertex_[v] != 0; }

  Polygon polygon(int c) const;
  double total_area() const;

  friend bool operator==(const PrimalMesh&, const PrimalMesh&) = default;

private:
  std::vector<Vec2> vertices_;
  std::vector<std::vector<int>> cells_;
  std::vector<std::uint8_t> boundary_vertex_;
};

/// Structured n x n grid of squares, each split along its lower-left/upper-right
/// diagonal. Interior vertices are optionally displaced by at most jitter * (1/n)
/// per coordinate; jitter is clamped to [0, 0.2].
PrimalMesh generate_triangular(int n, double jitter = 0.0, std::uint32_t seed = 12345);

/// n x n quadrilaterals; interior vertices are displaced vertically by
/// (-1)^(i+j) * 0.25/n, turning every cell into a trapezoid. n must be even.
PrimalMesh generate_trapezoidal(int n);

/// Pointy-top hexagon tiling (n columns, n rounded up to even rows, hexagons
/// stretched vertically to fit the unit square) clipped at the boundary into
/// quadrilaterals and pentagons. Requires n >= 2.
PrimalMesh generate_polygonal(int n);

PrimalMesh read_mesh(std::istream& in);
PrimalMesh read_mesh_file(const std::string& path);
std::string write_mesh(const PrimalMesh& mesh);

struct PrimalEdge {
  std::array<int, 2> vertices{};     // as traversed by cells[0]
  std::array<int, 2> cells{-1, -1};  // cells[0] < cells[1]; cells[1] == -1 on the boundary
  std::array<int, 2> local{-1, -1};  // local edge index within each adjacent cell
  std::array<int, 2> region{-1, -1}; // D(e): base sub-triangle in each adjacent cell
  Vec2 normal = Vec2::Zero();        // from cells[0] towards cells[1]; outward on the boundary
  double length = 0.0;
  bool boundary() const { return cells[1] < 0; }
};

struct DualEdge {
  int cell = -1;
  int local_vertex = -1;            // the dual edge joins the split point to this vertex
  std::array<int, 2> triangles{};   // triangles[0] < triangles[1]
  Vec2 normal = Vec2::Zero();       // from triangles[0] towards triangles[1]
  std::array<Vec2, 2> points{};     // split point, vertex
  double length = 0.0;
};

struct SubTriangle {
  int cell = -1;
  int local = -1;                   // local edge index of the base
  int base_edge = -1;               // global primal edge
  std::array<int, 2> dual_edges{};  // dual edges through local vertices i and i+1
  std::array<Vec2, 3> points{};     // split point, v_i, v_{i+1}
  double area = 0.0;
  double diameter = 0.0;
};

struct CellData {
  Vec2 split = Vec2::Zero();
  double area = 0.0;
  double diameter = 0.0;
  int first_triangle = 0;
  std::vector<int> edges;      // global primal edge of local edge i
  std::vector<int> dual_edges; // global dual edge through local vertex i
};

/// Primal mesh plus the fan sub-triangulation obtained by joining each cell's
/// split point (its centroid) to the cell vertices.
class StaggeredMesh {
public:
  explicit StaggeredMesh(PrimalMesh primal);

  const PrimalMesh& primal() const { return primal_; }
  int num_cells() const { return primal_.num_cells(); }
  int num_primal_edges() const { return static_cast<int>(primal_edges_.size()); }
  int num_interior_edges() const { return static_cast<int>(interior_edges_.size()); }
  int num_dual_edges() const { return static_cast<int>(dual_edges_.size()); }
  int num_triangles() const { return static_cast<int>(triangles_.size()); }

  const PrimalEdge& primal_edge(int e) const { return primal_edges_[e]; }
  const std::vector<PrimalEdge>& primal_edges() const { return primal_edges_; }
  const DualEdge& dual_edge(int e) const { return dual_edges_[e]; }
  const std::vector<DualEdge>& dual_edges() const { return dual_edges_; }
  const SubTriangle& triangle(int t) const { return triangles_[t]; }
  const std::vector<SubTriangle>& triangles() const { return triangles_; }
  const CellData& cell(int c) const { return cells_[c]; }
  const Polygon& polygon(int c) const { return polygons_[c]; }

  /// F_u^0 as global primal edge ids, and the inverse map (-1 for boundary edges).
  const std::vector<int>& interior_edges() const { return interior_edges_; }
  int interior_index(int edge) const { return interior_index_[edge]; }

  /// Outward unit normal of primal edge `edge` seen from cell `c`.
  Vec2 outward_normal(int c, int edge) const;

  /// Global mesh size: largest sub-triangle diameter.
  double h() const { return h_; }

private:
  PrimalMesh primal_;
  std::vector<Polygon> polygons_;
  std::vector<CellData> cells_;
  std::vector<PrimalEdge> primal_edges_;
  std::vector<DualEdge> dual_edges_;
  std::vector<SubTriangle> triangles_;
  std::vector<int> interior_edges_;
  std::vector<int> interior_index_;
  double h_ = 0.0;
};

struct RegularityThresholds {
  double min_edge_ratio = 0.1;
  double max_aspect_ratio = 20.0;
};

struct RegularityReport {
  double h = 0.0;
  double min_aspect_ratio = 0.0;
  double max_aspect_ratio = 0.0;
  double edge_ratio = 0.0;  // min over cells and their edges of |e| / h_T
  bool pass = false;
};

/// Sub-triangle aspect ratio: diameter over incircle diameter (sqrt(3) for equilateral).
double aspect_ratio(const SubTriangle& t);

RegularityReport validate(const StaggeredMesh& mesh, const RegularityThresholds& thresholds = {});

}  // namespace sdg
