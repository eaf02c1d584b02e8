#include "sdg/mesh.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <string>

#include <fmt/format.h>

namespace sdg {

PrimalMesh::PrimalMesh(std::vector<Vec2> vertices, std::vector<std::vector<int>> cells)
    : vertices_(std::move(vertices)), cells_(std::move(cells)) {
  if (cells_.empty()) throw MeshError("mesh has no cells");
  const int nv = num_vertices();
  // orientation key -> (cell, local edge)
  std::map<std::pair<int, int>, std::pair<int, int>> directed;
  for (int c = 0; c < num_cells(); ++c) {
    const auto& cyc = cells_[c];
    const int m = static_cast<int>(cyc.size());
    if (m < 3) throw MeshError(fmt::format("cell {}: fewer than 3 vertices", c));
    for (int v : cyc)
      if (v < 0 || v >= nv)
        throw MeshError(fmt::format("cell {}: vertex index {} out of range [0, {})", c, v, nv));
    std::vector<Vec2> pts;
    pts.reserve(m);
    for (int v : cyc) pts.push_back(vertices_[v]);
    const double area = signed_area(pts);
    const double scale = sdg::diameter(pts);
    if (!(area > 0.0)) throw MeshError(fmt::format("cell {}: not counterclockwise (signed area {})", c, area));
    for (int i = 0; i < m; ++i) {
      const Vec2 a = pts[(i + m - 1) % m], b = pts[i], d = pts[(i + 1) % m];
      if (!(cross(b - a, d - b) > 1e-14 * scale * scale))
        throw MeshError(fmt::format("cell {}: not strictly convex at local vertex {}", c, i));
    }
    for (int i = 0; i < m; ++i) {
      const int a = cyc[i], b = cyc[(i + 1) % m];
      if (!directed.emplace(std::make_pair(a, b), std::make_pair(c, i)).second)
        throw MeshError(fmt::format("cell {}: edge ({}, {}) used twice with the same orientation", c, a, b));
    }
  }
  boundary_vertex_.assign(nv, 0);
  std::vector<std::uint8_t> used(nv, 0);
  for (const auto& [key, owner] : directed) {
    used[key.first] = used[key.second] = 1;
    if (!directed.count({key.second, key.first})) boundary_vertex_[key.first] = boundary_vertex_[key.second] = 1;
  }
  for (int v = 0; v < nv; ++v)
    if (!used[v]) throw MeshError(fmt::format("vertex {} is not used by any cell", v));
}

Polygon PrimalMesh::polygon(int c) const {
  std::vector<Vec2> pts;
  pts.reserve(cells_[c].size());
  for (int v : cells_[c]) pts.push_back(vertices_[v]);
  return Polygon(std::move(pts));
}

double PrimalMesh::total_area() const {
  double a = 0.0;
  for (int c = 0; c < num_cells(); ++c) a += polygon(c).area();
  return a;
}

StaggeredMesh::StaggeredMesh(PrimalMesh primal) : primal_(std::move(primal)) {
  const int nc = primal_.num_cells();
  polygons_.reserve(nc);
  cells_.resize(nc);
  std::map<std::pair<int, int>, int> edge_of;  // unordered vertex pair -> primal edge

  for (int c = 0; c < nc; ++c) {
    polygons_.push_back(primal_.polygon(c));
    const Polygon& poly = polygons_.back();
    const auto& cyc = primal_.cell(c);
    const int m = poly.size();
    CellData& cd = cells_[c];
    cd.split = poly.centroid();
    cd.area = poly.area();
    cd.diameter = poly.diameter();
    if (!poly.contains_strictly(cd.split))
      throw MeshError(fmt::format("cell {}: split point is not interior", c));
    cd.first_triangle = static_cast<int>(triangles_.size());
    cd.edges.resize(m);
    cd.dual_edges.resize(m);

    for (int i = 0; i < m; ++i) {
      const int a = cyc[i], b = cyc[(i + 1) % m];
      const auto key = std::minmax(a, b);
      auto it = edge_of.find({key.first, key.second});
      int e;
      if (it == edge_of.end()) {
        e = static_cast<int>(primal_edges_.size());
        edge_of.emplace(std::make_pair(key.first, key.second), e);
        PrimalEdge pe;
        pe.vertices = {a, b};
        pe.cells[0] = c;
        pe.local[0] = i;
        pe.region[0] = cd.first_triangle + i;
        pe.normal = poly.normal(i);
        pe.length = poly.edge_length(i);
        primal_edges_.push_back(pe);
      } else {
        e = it->second;
        PrimalEdge& pe = primal_edges_[e];
        if (pe.cells[1] >= 0) throw MeshError(fmt::format("cell {}: edge ({}, {}) shared by more than two cells", c, a, b));
        pe.cells[1] = c;
        pe.local[1] = i;
        pe.region[1] = cd.first_triangle + i;
      }
      cd.edges[i] = e;

      SubTriangle t;
      t.cell = c;
      t.local = i;
      t.base_edge = e;
      t.points = {cd.split, poly.vertex(i), poly.vertex(i + 1)};
      t.area = triangle_area(t.points[0], t.points[1], t.points[2]);
      t.diameter = diameter({t.points[0], t.points[1], t.points[2]});
      triangles_.push_back(t);
    }

    // Dual edge through local vertex i separates triangles i-1 and i of this cell.
    for (int i = 0; i < m; ++i) {
      DualEdge de;
      de.cell = c;
      de.local_vertex = i;
      const int t_prev = cd.first_triangle + (i + m - 1) % m;
      const int t_next = cd.first_triangle + i;
      de.triangles = {std::min(t_prev, t_next), std::max(t_prev, t_next)};
      de.points = {cd.split, poly.vertex(i)};
      const Vec2 d = de.points[1] - de.points[0];
      de.length = d.norm();
      // Triangle i = (split, v_i, v_{i+1}) traverses split -> v_i counterclockwise, so
      // its outward normal there is the clockwise turn of d; it points into triangle i-1.
      const Vec2 out_of_next(d.y() / de.length, -d.x() / de.length);
      de.normal = (de.triangles[0] == t_next) ? out_of_next : Vec2(-out_of_next);
      cd.dual_edges[i] = static_cast<int>(dual_edges_.size());
      dual_edges_.push_back(de);
    }
    for (int i = 0; i < m; ++i) {
      triangles_[cd.first_triangle + i].dual_edges = {cd.dual_edges[i], cd.dual_edges[(i + 1) % m]};
    }
  }

  interior_index_.assign(primal_edges_.size(), -1);
  for (int e = 0; e < num_primal_edges(); ++e) {
    if (!primal_edges_[e].boundary()) {
      interior_index_[e] = static_cast<int>(interior_edges_.size());
      interior_edges_.push_back(e);
    }
  }
  for (const auto& t : triangles_) h_ = std::max(h_, t.diameter);
}

Vec2 StaggeredMesh::outward_normal(int c, int edge) const {
  const PrimalEdge& pe = primal_edges_[edge];
  if (pe.cells[0] == c) return pe.normal;
  if (pe.cells[1] == c) return -pe.normal;
  throw MeshError(fmt::format("edge {} is not an edge of cell {}", edge, c));
}

double aspect_ratio(const SubTriangle& t) {
  const double perimeter = (t.points[1] - t.points[0]).norm() + (t.points[2] - t.points[1]).norm() +
                           (t.points[0] - t.points[2]).norm();
  const double inradius = 2.0 * t.area / perimeter;
  return t.diameter / (2.0 * inradius);
}

RegularityReport validate(const StaggeredMesh& mesh, const RegularityThresholds& thresholds) {
  RegularityReport r;
  r.h = mesh.h();
  r.min_aspect_ratio = std::numeric_limits<double>::infinity();
  r.max_aspect_ratio = 0.0;
  for (const auto& t : mesh.triangles()) {
    const double ar = t.area > 0.0 ? aspect_ratio(t) : std::numeric_limits<double>::infinity();
    r.min_aspect_ratio = std::min(r.min_aspect_ratio, ar);
    r.max_aspect_ratio = std::max(r.max_aspect_ratio, ar);
  }
  r.edge_ratio = std::numeric_limits<double>::infinity();
  for (int c = 0; c < mesh.num_cells(); ++c) {
    const Polygon& p = mesh.polygon(c);
    for (int i = 0; i < p.size(); ++i) r.edge_ratio = std::min(r.edge_ratio, p.edge_length(i) / p.diameter());
  }
  r.pass = r.edge_ratio >= thresholds.min_edge_ratio && r.max_aspect_ratio <= thresholds.max_aspect_ratio;
  return r;
}

}  // namespace sdg
