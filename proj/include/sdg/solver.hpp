#pragma once

#include <stdexcept>

#include "sdg/assembly.hpp"
#include "sdg/spaces.hpp"

namespace sdg {

class SolverError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Discrete solution (omega_h, u_h, p_h). The velocity carries the prescribed
/// boundary values on boundary edges.
struct FieldSolution {
  GradientField omega;
  VelocityField velocity;
  PressureField pressure;
  double multiplier = 0.0;
  double relative_residual = 0.0;
  Eigen::VectorXd raw;  // unknowns in DofLayout order
};

struct SolverOptions {
  double residual_tolerance = 1e-10;
  int refinement_steps = 3;
};

/// Sparse LU solve of the assembled system followed by a few steps of iterative
/// refinement. Throws SolverError if the factorization fails or the relative
/// residual ||K x - b|| / ||b|| stays above the tolerance.
FieldSolution solve(const StaggeredMesh& mesh, const SaddleSystem& sys, const SolverOptions& options = {});

/// Lower level: solve K x = b for an arbitrary right-hand side.
Eigen::VectorXd solve_linear(const SparseMatrix& k, const Eigen::VectorXd& b, const SolverOptions& options = {},
                             double* residual = nullptr);

}  // namespace sdg
