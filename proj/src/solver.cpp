#include "sdg/solver.hpp"

#include <cmath>

#include <Eigen/OrderingMethods>
#include <Eigen/SparseLU>
#include <fmt/format.h>

namespace sdg {

namespace {

double relative(const Eigen::VectorXd& r, const Eigen::VectorXd& b) {
  const double nb = b.norm();
  return nb > 0.0 ? r.norm() / nb : r.norm();
}

}  // namespace

Eigen::VectorXd solve_linear(const SparseMatrix& k, const Eigen::VectorXd& b, const SolverOptions& options,
                             double* residual) {
  SparseMatrix a = k;
  a.makeCompressed();
  Eigen::SparseLU<SparseMatrix, Eigen::COLAMDOrdering<int>> lu;
  lu.analyzePattern(a);
  lu.factorize(a);
  if (lu.info() != Eigen::Success)
    throw SolverError(fmt::format("sparse LU factorization failed: {}", lu.lastErrorMessage()));

  Eigen::VectorXd x = lu.solve(b);
  Eigen::VectorXd r = b - a * x;
  double res = relative(r, b);
  for (int step = 0; step < options.refinement_steps && res > 0.0; ++step) {
    const Eigen::VectorXd x_new = x + lu.solve(r);
    const Eigen::VectorXd r_new = b - a * x_new;
    const double res_new = relative(r_new, b);
    if (!(res_new < res)) break;
    x = x_new;
    r = r_new;
    res = res_new;
  }
  if (!std::isfinite(res) || res > options.residual_tolerance)
    throw SolverError(fmt::format("relative residual {:.3e} exceeds tolerance {:.1e}", res,
                                  options.residual_tolerance));
  if (residual) *residual = res;
  return x;
}

FieldSolution solve(const StaggeredMesh& mesh, const SaddleSystem& sys, const SolverOptions& options) {
  FieldSolution sol;
  sol.raw = solve_linear(sys.matrix, sys.rhs, options, &sol.relative_residual);
  const DofLayout& L = sys.layout;

  sol.omega.traces.resize(mesh.num_dual_edges());
  for (int e = 0; e < mesh.num_dual_edges(); ++e)
    sol.omega.traces[e] = Vec2(sol.raw[L.q_offset() + 2 * e], sol.raw[L.q_offset() + 2 * e + 1]);

  sol.velocity = sys.boundary;
  for (int k = 0; k < mesh.num_interior_edges(); ++k)
    sol.velocity.values[mesh.interior_edges()[k]] =
        Vec2(sol.raw[L.u_offset() + 2 * k], sol.raw[L.u_offset() + 2 * k + 1]);

  sol.pressure.values.assign(sol.raw.data() + L.p_offset(), sol.raw.data() + L.p_offset() + L.num_p);
  sol.multiplier = sol.raw[L.multiplier()];
  return sol;
}

}  // namespace sdg
