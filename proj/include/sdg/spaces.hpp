#pragma once

#include <array>
#include <vector>

#include "sdg/geometry.hpp"
#include "sdg/mesh.hpp"

namespace sdg {

/// S_h: one constant vector per primal edge e, valid on the dual region D(e).
/// Boundary entries hold the prescribed Dirichlet values.
struct VelocityField {
  std::vector<Vec2> values;

  const Vec2& on_triangle(const StaggeredMesh& mesh, int t) const { return values[mesh.triangle(t).base_edge]; }
};

/// V_h stored by the normal traces q_e = psi n_e on dual edges. Normal-trace
/// continuity across dual edges is therefore built in.
struct GradientField {
  std::vector<Vec2> traces;
};

/// P_h: one value per primal cell.
struct PressureField {
  std::vector<double> values;
};

/// Piecewise-constant tensor on sub-triangle t: solves psi [n_1 n_2] = [q_1 q_2]
/// for the triangle's two dual edges. Throws MeshError if the normals are parallel.
Mat2 recover_tensor(const StaggeredMesh& mesh, const GradientField& psi, int t);

/// Inverse of recover_tensor on one sub-triangle: the traces psi n of its two dual edges.
std::array<Vec2, 2> tensor_traces(const StaggeredMesh& mesh, const Mat2& psi, int t);

/// I_h: edge averages of u on every primal edge (boundary edges included).
VelocityField interp_Ih(const StaggeredMesh& mesh, const VectorField& u);
/// J_h: edge averages of omega n_e on every dual edge.
GradientField interp_Jh(const StaggeredMesh& mesh, const TensorField& omega);
/// pi_h: cell means.
PressureField interp_pih(const StaggeredMesh& mesh, const ScalarField& p);

/// sqrt(sum_{e in F_p} h_e^{-1} ||[v]||_{0,e}^2)
double norm_h(const StaggeredMesh& mesh, const VelocityField& v);
/// sqrt(||v||_0^2 + sum_{e in F_u^0} h_e ||v||_{0,e}^2)
double norm_X(const StaggeredMesh& mesh, const VelocityField& v);
/// sqrt(||q||_0^2 + sum_{e in F_p} h_e ||q||_{0,e}^2)
double norm_P(const StaggeredMesh& mesh, const PressureField& q);

double l2_norm(const StaggeredMesh& mesh, const VelocityField& v);
double l2_norm(const StaggeredMesh& mesh, const PressureField& q);
double l2_norm(const StaggeredMesh& mesh, const GradientField& psi);

/// int_Omega q
double integral(const StaggeredMesh& mesh, const PressureField& q);

/// L2 errors against exact fields, degree-8 rule on every sub-triangle.
double error_L2(const StaggeredMesh& mesh, const VelocityField& uh, const VectorField& u);
double error_L2(const StaggeredMesh& mesh, const GradientField& wh, const TensorField& w);
double error_L2(const StaggeredMesh& mesh, const PressureField& ph, const ScalarField& p);
/// ||I_h u - u_h||_0, an exact finite sum.
double error_super(const StaggeredMesh& mesh, const VelocityField& uh, const VectorField& u);

}  // namespace sdg
