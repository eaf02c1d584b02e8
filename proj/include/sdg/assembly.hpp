#pragma once

#include <string>

#include <Eigen/Sparse>

#include "sdg/geometry.hpp"
#include "sdg/mesh.hpp"
#include "sdg/spaces.hpp"

namespace sdg {

using SparseMatrix = Eigen::SparseMatrix<double>;

/// sdg1 tests the load with the reconstructed velocity (f, Pi^RT v); sdg2 uses (f, v).
enum class Method { sdg1, sdg2 };

std::string to_string(Method m);
Method parse_method(const std::string& s);

/// Data of one discrete Stokes problem: body force, Dirichlet trace, viscosity.
struct Problem {
  VectorField force;
  VectorField boundary_velocity;
  double nu = 1.0;
};

/// Unknown ordering (q | u | p | mu): dual-edge traces (2 per dual edge), interior
/// velocities (2 per interior primal edge), cell pressures, mean-zero multiplier.
struct DofLayout {
  int num_q = 0;
  int num_u = 0;
  int num_p = 0;

  int q_offset() const { return 0; }
  int u_offset() const { return num_q; }
  int p_offset() const { return num_q + num_u; }
  int multiplier() const { return num_q + num_u + num_p; }
  int size() const { return num_q + num_u + num_p + 1; }
  /// Unknowns of (omega, u, p), without the multiplier.
  int dof() const { return num_q + num_u + num_p; }

  static DofLayout of(const StaggeredMesh& mesh);
};

/// V_h inner product (omega, psi) in the dual-edge trace basis; block diagonal per cell.
SparseMatrix assemble_mass(const StaggeredMesh& mesh);

/// B_h(omega, v) = v^T B omega = -sum_{e in F_p} |e| q_e . [v]_e, rows over all
/// primal-edge velocity components (boundary ones included), columns over traces.
SparseMatrix assemble_Bh(const StaggeredMesh& mesh);

/// b_h(u, q) = q^T D u = -sum_T q_T sum_{e in dT} |e| u_e . n_{T,e}, columns over all
/// primal-edge velocity components.
SparseMatrix assemble_bh(const StaggeredMesh& mesh);

/// Keeps the velocity components of interior edges along `axis` (0: rows, 1: columns).
SparseMatrix restrict_velocity(const StaggeredMesh& mesh, const SparseMatrix& a, int axis);

/// Dirichlet dofs: edge averages of the trace on boundary edges, zero elsewhere.
VelocityField boundary_values(const StaggeredMesh& mesh, const VectorField& g);

/// Velocity-row load: (f, Pi^RT v) for sdg1 or (f, v) for sdg2, one entry per
/// interior velocity component.
Eigen::VectorXd assemble_load(const StaggeredMesh& mesh, const VectorField& f, Method method, int degree = 8);

/// Full right-hand side in DofLayout order, including the Dirichlet lifting.
Eigen::VectorXd assemble_rhs(const StaggeredMesh& mesh, const Problem& problem, Method method);

struct SaddleSystem {
  SparseMatrix matrix;
  Eigen::VectorXd rhs;
  DofLayout layout;
  double nu = 1.0;
  Method method = Method::sdg1;
  SparseMatrix mass;        // M
  SparseMatrix coupling;    // B restricted to interior velocity rows
  SparseMatrix divergence;  // D restricted to interior velocity columns
  VelocityField boundary;   // prescribed boundary dofs
};

/// Assembles
///   [ M      -nu B^T   0     0 ] [q ]   [ nu B_b^T g ]
///   [ B       0        D^T   0 ] [u ] = [ load       ]
///   [ 0       D        0     a ] [p ]   [ -D_b g     ]
///   [ 0       0        a^T   0 ] [mu]   [ 0          ]
/// where a_T = |T|. The first block row is nu times the constitutive relation
/// nu^{-1}(omega, psi) = B_h^*(u, psi), so no entry carries 1/nu.
SaddleSystem assemble_system(const StaggeredMesh& mesh, const Problem& problem, Method method);

}  // namespace sdg
