#include "sdg/assembly.hpp"

#include <stdexcept>
#include <vector>

#include <fmt/format.h>

#include "sdg/hdivrec.hpp"
#include "sdg/quadrature.hpp"

namespace sdg {

using Triplet = Eigen::Triplet<double>;

std::string to_string(Method m) { return m == Method::sdg1 ? "sdg1" : "sdg2"; }

Method parse_method(const std::string& s) {
  if (s == "sdg1") return Method::sdg1;
  if (s == "sdg2") return Method::sdg2;
  throw std::invalid_argument("unknown method '" + s + "' (expected sdg1 or sdg2)");
}

DofLayout DofLayout::of(const StaggeredMesh& mesh) {
  return {2 * mesh.num_dual_edges(), 2 * mesh.num_interior_edges(), mesh.num_cells()};
}

SparseMatrix assemble_mass(const StaggeredMesh& mesh) {
  const int n = 2 * mesh.num_dual_edges();
  std::vector<Triplet> trip;
  trip.reserve(8 * mesh.num_triangles());
  for (int t = 0; t < mesh.num_triangles(); ++t) {
    const auto& tri = mesh.triangle(t);
    Mat2 nmat;
    nmat.col(0) = mesh.dual_edge(tri.dual_edges[0]).normal;
    nmat.col(1) = mesh.dual_edge(tri.dual_edges[1]).normal;
    if (std::abs(nmat.determinant()) < 1e-14)
      throw MeshError(fmt::format("sub-triangle {}: singular trace-to-tensor map", t));
    // psi = Q N^{-1}, so (omega, psi)_t = |t| tr(Q_w^T Q_psi G) with G = (N^T N)^{-1}.
    const Mat2 g = (nmat.transpose() * nmat).inverse();
    for (int a = 0; a < 2; ++a)
      for (int b = 0; b < 2; ++b)
        for (int c = 0; c < 2; ++c)
          trip.emplace_back(2 * tri.dual_edges[a] + c, 2 * tri.dual_edges[b] + c, tri.area * g(a, b));
  }
  SparseMatrix m(n, n);
  m.setFromTriplets(trip.begin(), trip.end());
  return m;
}

SparseMatrix assemble_Bh(const StaggeredMesh& mesh) {
  std::vector<Triplet> trip;
  trip.reserve(4 * mesh.num_dual_edges());
  for (int e = 0; e < mesh.num_dual_edges(); ++e) {
    const auto& de = mesh.dual_edge(e);
    const int lo = mesh.triangle(de.triangles[0]).base_edge;
    const int hi = mesh.triangle(de.triangles[1]).base_edge;
    for (int c = 0; c < 2; ++c) {
      trip.emplace_back(2 * lo + c, 2 * e + c, -de.length);
      trip.emplace_back(2 * hi + c, 2 * e + c, de.length);
    }
  }
  SparseMatrix b(2 * mesh.num_primal_edges(), 2 * mesh.num_dual_edges());
  b.setFromTriplets(trip.begin(), trip.end());
  return b;
}

SparseMatrix assemble_bh(const StaggeredMesh& mesh) {
  std::vector<Triplet> trip;
  for (int c = 0; c < mesh.num_cells(); ++c) {
    for (int e : mesh.cell(c).edges) {
      const Vec2 n = mesh.outward_normal(c, e);
      const double len = mesh.primal_edge(e).length;
      trip.emplace_back(c, 2 * e, -len * n.x());
      trip.emplace_back(c, 2 * e + 1, -len * n.y());
    }
  }
  SparseMatrix d(mesh.num_cells(), 2 * mesh.num_primal_edges());
  d.setFromTriplets(trip.begin(), trip.end());
  return d;
}

SparseMatrix restrict_velocity(const StaggeredMesh& mesh, const SparseMatrix& a, int axis) {
  std::vector<Triplet> trip;
  for (int k = 0; k < a.outerSize(); ++k) {
    for (SparseMatrix::InnerIterator it(a, k); it; ++it) {
      const int row = static_cast<int>(it.row());
      const int col = static_cast<int>(it.col());
      const int vel = axis == 0 ? row : col;
      const int ii = mesh.interior_index(vel / 2);
      if (ii < 0) continue;
      const int mapped = 2 * ii + vel % 2;
      if (axis == 0)
        trip.emplace_back(mapped, col, it.value());
      else
        trip.emplace_back(row, mapped, it.value());
    }
  }
  const int nu = 2 * mesh.num_interior_edges();
  SparseMatrix r(axis == 0 ? nu : a.rows(), axis == 0 ? a.cols() : nu);
  r.setFromTriplets(trip.begin(), trip.end());
  return r;
}

VelocityField boundary_values(const StaggeredMesh& mesh, const VectorField& g) {
  VelocityField all = interp_Ih(mesh, g);
  for (int e : mesh.interior_edges()) all.values[e] = Vec2::Zero();
  return all;
}

Eigen::VectorXd assemble_load(const StaggeredMesh& mesh, const VectorField& f, Method method, int degree) {
  Eigen::VectorXd load = Eigen::VectorXd::Zero(2 * mesh.num_interior_edges());
  if (method == Method::sdg1) {
    for (int c = 0; c < mesh.num_cells(); ++c) {
      const RTBasis basis(mesh.polygon(c), mesh.cell(c).split);
      const Eigen::VectorXd mom = basis.moments(f, degree);
      const auto& edges = mesh.cell(c).edges;
      for (int i = 0; i < basis.size(); ++i) {
        const int ii = mesh.interior_index(edges[i]);
        if (ii < 0) continue;
        // r_i(v) = v_e . n_i, so the load row of component k picks up n_i[k] * (f, phi_i)
        const Vec2 n = basis.polygon().normal(i);
        load[2 * ii] += mom[i] * n.x();
        load[2 * ii + 1] += mom[i] * n.y();
      }
    }
  } else {
    const auto& rule = quadrature::triangle_rule(degree);
    for (const auto& tri : mesh.triangles()) {
      const int ii = mesh.interior_index(tri.base_edge);
      if (ii < 0) continue;
      const Vec2 s = quadrature::integrate_triangle(tri.points[0], tri.points[1], tri.points[2], rule, f);
      load[2 * ii] += s.x();
      load[2 * ii + 1] += s.y();
    }
  }
  return load;
}

namespace {

Eigen::VectorXd flatten(const VelocityField& v) {
  Eigen::VectorXd x(2 * v.values.size());
  for (std::size_t e = 0; e < v.values.size(); ++e) {
    x[2 * e] = v.values[e].x();
    x[2 * e + 1] = v.values[e].y();
  }
  return x;
}

Eigen::VectorXd build_rhs(const StaggeredMesh& mesh, const Problem& problem, Method method,
                          const SparseMatrix& b_full, const SparseMatrix& d_full, const VelocityField& boundary) {
  const DofLayout layout = DofLayout::of(mesh);
  Eigen::VectorXd rhs = Eigen::VectorXd::Zero(layout.size());
  const Eigen::VectorXd g = flatten(boundary);
  rhs.segment(layout.q_offset(), layout.num_q) = problem.nu * (b_full.transpose() * g);
  rhs.segment(layout.u_offset(), layout.num_u) = assemble_load(mesh, problem.force, method);
  rhs.segment(layout.p_offset(), layout.num_p) = -(d_full * g);
  return rhs;
}

}  // namespace

Eigen::VectorXd assemble_rhs(const StaggeredMesh& mesh, const Problem& problem, Method method) {
  return build_rhs(mesh, problem, method, assemble_Bh(mesh), assemble_bh(mesh),
                   boundary_values(mesh, problem.boundary_velocity));
}

SaddleSystem assemble_system(const StaggeredMesh& mesh, const Problem& problem, Method method) {
  if (!(problem.nu > 0.0)) throw std::invalid_argument("viscosity must be positive");
  SaddleSystem sys;
  sys.layout = DofLayout::of(mesh);
  sys.nu = problem.nu;
  sys.method = method;
  sys.boundary = boundary_values(mesh, problem.boundary_velocity);

  const SparseMatrix b_full = assemble_Bh(mesh);
  const SparseMatrix d_full = assemble_bh(mesh);
  sys.mass = assemble_mass(mesh);
  sys.coupling = restrict_velocity(mesh, b_full, 0);
  sys.divergence = restrict_velocity(mesh, d_full, 1);

  const DofLayout& L = sys.layout;
  std::vector<Triplet> trip;
  trip.reserve(sys.mass.nonZeros() + 2 * sys.coupling.nonZeros() + 2 * sys.divergence.nonZeros() + 2 * L.num_p);
  auto add_block = [&](const SparseMatrix& a, int r0, int c0, double scale, bool transpose) {
    for (int k = 0; k < a.outerSize(); ++k)
      for (SparseMatrix::InnerIterator it(a, k); it; ++it) {
        const int r = static_cast<int>(transpose ? it.col() : it.row());
        const int c = static_cast<int>(transpose ? it.row() : it.col());
        trip.emplace_back(r0 + r, c0 + c, scale * it.value());
      }
  };
  add_block(sys.mass, L.q_offset(), L.q_offset(), 1.0, false);
  add_block(sys.coupling, L.q_offset(), L.u_offset(), -problem.nu, true);
  add_block(sys.coupling, L.u_offset(), L.q_offset(), 1.0, false);
  add_block(sys.divergence, L.u_offset(), L.p_offset(), 1.0, true);
  add_block(sys.divergence, L.p_offset(), L.u_offset(), 1.0, false);
  for (int c = 0; c < mesh.num_cells(); ++c) {
    trip.emplace_back(L.p_offset() + c, L.multiplier(), mesh.cell(c).area);
    trip.emplace_back(L.multiplier(), L.p_offset() + c, mesh.cell(c).area);
  }
  sys.matrix.resize(L.size(), L.size());
  sys.matrix.setFromTriplets(trip.begin(), trip.end());
  sys.rhs = build_rhs(mesh, problem, method, b_full, d_full, sys.boundary);
  return sys;
}

}  // namespace sdg
