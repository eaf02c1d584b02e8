#include "sdg/spaces.hpp"

#include <cmath>

#include <fmt/format.h>

#include "sdg/quadrature.hpp"

namespace sdg {

namespace {

constexpr int kEdgePoints = 8;
constexpr int kTriangleDegree = 8;

Mat2 normal_matrix(const StaggeredMesh& mesh, int t) {
  const auto& tri = mesh.triangle(t);
  Mat2 n;
  n.col(0) = mesh.dual_edge(tri.dual_edges[0]).normal;
  n.col(1) = mesh.dual_edge(tri.dual_edges[1]).normal;
  return n;
}

}  // namespace

Mat2 recover_tensor(const StaggeredMesh& mesh, const GradientField& psi, int t) {
  const auto& tri = mesh.triangle(t);
  const Mat2 n = normal_matrix(mesh, t);
  if (std::abs(n.determinant()) < 1e-14)
    throw MeshError(fmt::format("sub-triangle {}: dual-edge normals are parallel", t));
  Mat2 q;
  q.col(0) = psi.traces[tri.dual_edges[0]];
  q.col(1) = psi.traces[tri.dual_edges[1]];
  return q * n.inverse();
}

std::array<Vec2, 2> tensor_traces(const StaggeredMesh& mesh, const Mat2& psi, int t) {
  const Mat2 n = normal_matrix(mesh, t);
  return {psi * n.col(0), psi * n.col(1)};
}

VelocityField interp_Ih(const StaggeredMesh& mesh, const VectorField& u) {
  const auto& rule = quadrature::edge_rule(kEdgePoints);
  const auto& verts = mesh.primal().vertices();
  VelocityField v;
  v.values.resize(mesh.num_primal_edges());
  for (int e = 0; e < mesh.num_primal_edges(); ++e) {
    const auto& pe = mesh.primal_edge(e);
    v.values[e] = quadrature::integrate_segment(verts[pe.vertices[0]], verts[pe.vertices[1]], rule, u) / pe.length;
  }
  return v;
}

GradientField interp_Jh(const StaggeredMesh& mesh, const TensorField& omega) {
  const auto& rule = quadrature::edge_rule(kEdgePoints);
  GradientField g;
  g.traces.resize(mesh.num_dual_edges());
  for (int e = 0; e < mesh.num_dual_edges(); ++e) {
    const auto& de = mesh.dual_edge(e);
    const Vec2 n = de.normal;
    g.traces[e] = quadrature::integrate_segment(de.points[0], de.points[1], rule,
                                                [&](const Vec2& x) -> Vec2 { return omega(x) * n; }) /
                  de.length;
  }
  return g;
}

PressureField interp_pih(const StaggeredMesh& mesh, const ScalarField& p) {
  const auto& rule = quadrature::triangle_rule(kTriangleDegree);
  PressureField q;
  q.values.assign(mesh.num_cells(), 0.0);
  for (const auto& t : mesh.triangles())
    q.values[t.cell] += quadrature::integrate_triangle(t.points[0], t.points[1], t.points[2], rule, p);
  for (int c = 0; c < mesh.num_cells(); ++c) q.values[c] /= mesh.cell(c).area;
  return q;
}

double norm_h(const StaggeredMesh& mesh, const VelocityField& v) {
  double s = 0.0;
  for (const auto& de : mesh.dual_edges()) {
    const Vec2 jump = v.on_triangle(mesh, de.triangles[0]) - v.on_triangle(mesh, de.triangles[1]);
    s += jump.squaredNorm();  // h_e^{-1} |e| |[v]|^2 with h_e = |e|
  }
  return std::sqrt(s);
}

double l2_norm(const StaggeredMesh& mesh, const VelocityField& v) {
  double s = 0.0;
  for (int t = 0; t < mesh.num_triangles(); ++t) s += mesh.triangle(t).area * v.on_triangle(mesh, t).squaredNorm();
  return std::sqrt(s);
}

double l2_norm(const StaggeredMesh& mesh, const PressureField& q) {
  double s = 0.0;
  for (int c = 0; c < mesh.num_cells(); ++c) s += mesh.cell(c).area * q.values[c] * q.values[c];
  return std::sqrt(s);
}

double l2_norm(const StaggeredMesh& mesh, const GradientField& psi) {
  double s = 0.0;
  for (int t = 0; t < mesh.num_triangles(); ++t)
    s += mesh.triangle(t).area * recover_tensor(mesh, psi, t).squaredNorm();
  return std::sqrt(s);
}

double norm_X(const StaggeredMesh& mesh, const VelocityField& v) {
  double s = std::pow(l2_norm(mesh, v), 2);
  for (int e : mesh.interior_edges()) {
    const double len = mesh.primal_edge(e).length;
    s += len * len * v.values[e].squaredNorm();
  }
  return std::sqrt(s);
}

double norm_P(const StaggeredMesh& mesh, const PressureField& q) {
  double s = std::pow(l2_norm(mesh, q), 2);
  for (const auto& de : mesh.dual_edges()) s += de.length * de.length * q.values[de.cell] * q.values[de.cell];
  return std::sqrt(s);
}

double integral(const StaggeredMesh& mesh, const PressureField& q) {
  double s = 0.0;
  for (int c = 0; c < mesh.num_cells(); ++c) s += mesh.cell(c).area * q.values[c];
  return s;
}

double error_L2(const StaggeredMesh& mesh, const VelocityField& uh, const VectorField& u) {
  const auto& rule = quadrature::triangle_rule(kTriangleDegree);
  double s = 0.0;
  for (int t = 0; t < mesh.num_triangles(); ++t) {
    const auto& tri = mesh.triangle(t);
    const Vec2 val = uh.on_triangle(mesh, t);
    s += quadrature::integrate_triangle(tri.points[0], tri.points[1], tri.points[2], rule,
                                        [&](const Vec2& x) { return (u(x) - val).squaredNorm(); });
  }
  return std::sqrt(s);
}

double error_L2(const StaggeredMesh& mesh, const GradientField& wh, const TensorField& w) {
  const auto& rule = quadrature::triangle_rule(kTriangleDegree);
  double s = 0.0;
  for (int t = 0; t < mesh.num_triangles(); ++t) {
    const auto& tri = mesh.triangle(t);
    const Mat2 val = recover_tensor(mesh, wh, t);
    s += quadrature::integrate_triangle(tri.points[0], tri.points[1], tri.points[2], rule,
                                        [&](const Vec2& x) { return (w(x) - val).squaredNorm(); });
  }
  return std::sqrt(s);
}

double error_L2(const StaggeredMesh& mesh, const PressureField& ph, const ScalarField& p) {
  const auto& rule = quadrature::triangle_rule(kTriangleDegree);
  double s = 0.0;
  for (const auto& tri : mesh.triangles()) {
    const double val = ph.values[tri.cell];
    s += quadrature::integrate_triangle(tri.points[0], tri.points[1], tri.points[2], rule, [&](const Vec2& x) {
      const double d = p(x) - val;
      return d * d;
    });
  }
  return std::sqrt(s);
}

double error_super(const StaggeredMesh& mesh, const VelocityField& uh, const VectorField& u) {
  const VelocityField iu = interp_Ih(mesh, u);
  double s = 0.0;
  for (int t = 0; t < mesh.num_triangles(); ++t)
    s += mesh.triangle(t).area * (iu.on_triangle(mesh, t) - uh.on_triangle(mesh, t)).squaredNorm();
  return std::sqrt(s);
}

}  // namespace sdg
