#include <doctest.h>

#include <cmath>
#include <random>

#include <Eigen/Dense>

#include "sdg/bench.hpp"
#include "sdg/hdivrec.hpp"
#include "sdg/solver.hpp"

using namespace sdg;

namespace {

StaggeredMesh two_cells() {
  return StaggeredMesh(PrimalMesh({{0, 0}, {1, 0}, {1, 1}, {0, 1}}, {{0, 1, 2}, {0, 2, 3}}));
}

std::vector<StaggeredMesh> family_meshes(int n) {
  std::vector<StaggeredMesh> out;
  out.emplace_back(generate_triangular(n));
  out.emplace_back(generate_triangular(n, 0.2, 99));
  out.emplace_back(generate_trapezoidal(n));
  out.emplace_back(generate_polygonal(n));
  return out;
}

double max_velocity(const FieldSolution& s) {
  double m = 0.0;
  for (const Vec2& v : s.velocity.values) m = std::max(m, v.lpNorm<Eigen::Infinity>());
  return m;
}

double max_cell_divergence(const StaggeredMesh& m, const VelocityField& v) {
  double worst = 0.0;
  for (int c = 0; c < m.num_cells(); ++c) {
    const RTBasis basis(m.polygon(c), m.cell(c).split);
    std::vector<Vec2> vals;
    for (int e : m.cell(c).edges) vals.push_back(v.values[e]);
    worst = std::max(worst, std::abs(Reconstruction(basis, edge_fluxes(m.polygon(c), vals)).divergence()));
  }
  return worst;
}

}  // namespace

TEST_CASE("sparse solve matches a dense LU on the 17-unknown system") {
  const StaggeredMesh m = two_cells();
  const Problem prob{[](const Vec2&) { return Vec2::Zero(); }, [](const Vec2&) { return Vec2::Zero(); }, 1.0};
  const SaddleSystem sys = assemble_system(m, prob, Method::sdg1);
  REQUIRE(sys.matrix.rows() == 17);
  std::mt19937 rng(5);
  std::uniform_real_distribution<double> u(-1, 1);
  const Eigen::MatrixXd dense(sys.matrix);
  for (int k = 0; k < 5; ++k) {
    Eigen::VectorXd b(17);
    for (int i = 0; i < 17; ++i) b[i] = u(rng);
    const Eigen::VectorXd x = solve_linear(sys.matrix, b);
    const Eigen::VectorXd ref = dense.fullPivLu().solve(b);
    CHECK((x - ref).lpNorm<Eigen::Infinity>() <= 1e-12);
  }
}

TEST_CASE("constant velocity patch test") {
  const ManufacturedCase c = case_constant();
  for (const StaggeredMesh& m : family_meshes(4))
    for (Method meth : {Method::sdg1, Method::sdg2})
      for (double nu : {1.0, 1e-6}) {
        const FieldSolution s = solve(m, assemble_system(m, c.problem(nu), meth));
        for (const Vec2& v : s.velocity.values) CHECK((v - Vec2(3, -1)).norm() <= 1e-11);
        for (double p : s.pressure.values) CHECK(std::abs(p) <= 1e-11);
        for (const Vec2& q : s.omega.traces) CHECK(q.norm() <= 1e-11);
      }
}

TEST_CASE("pressure-robust scheme returns zero velocity for the no-flow case") {
  const ManufacturedCase c = case_noflow();
  for (const StaggeredMesh& m : family_meshes(4)) {
    const FieldSolution s1 = solve(m, assemble_system(m, c.problem(1.0), Method::sdg1));
    CHECK(max_velocity(s1) <= 1e-10);
    const FieldSolution s2 = solve(m, assemble_system(m, c.problem(1.0), Method::sdg2));
    CHECK(max_velocity(s2) > 1e-3);
  }
}

TEST_CASE("reconstructed discrete velocity is divergence free") {
  const ManufacturedCase c = case_taylor();
  for (const StaggeredMesh& m : family_meshes(4))
    for (Method meth : {Method::sdg1, Method::sdg2}) {
      const FieldSolution s = solve(m, assemble_system(m, c.problem(1e-3), meth));
      double norm = 0.0;
      for (const Vec2& v : s.velocity.values) norm = std::max(norm, v.norm());
      CHECK(max_cell_divergence(m, s.velocity) <= 1e-11 * norm);
    }
}

TEST_CASE("velocity invariance under gradient forcing") {
  const ManufacturedCase c = case_taylor();
  auto grad_chi = [](const Vec2& x) {
    return Vec2(2 * x.x() * x.y() * x.y() - 6 * x.x() * x.x() + x.y(), 2 * x.x() * x.x() * x.y() + x.x());
  };
  for (const PrimalMesh& pm : {generate_triangular(4), generate_trapezoidal(4), generate_polygonal(4)}) {
    const StaggeredMesh m(pm);
    const Problem base = c.problem(1.0);
    const FieldSolution ref = solve(m, assemble_system(m, base, Method::sdg1));
    double norm = 0.0;
    for (const Vec2& v : ref.velocity.values) norm = std::max(norm, v.norm());
    for (double lambda : {1.0, 1e3, 1e6}) {
      Problem p = base;
      p.force = [&, lambda](const Vec2& x) -> Vec2 { return base.force(x) + lambda * grad_chi(x); };
      const FieldSolution s = solve(m, assemble_system(m, p, Method::sdg1));
      double diff = 0.0;
      for (int e = 0; e < m.num_primal_edges(); ++e)
        diff = std::max(diff, (s.velocity.values[e] - ref.velocity.values[e]).norm());
      CAPTURE(lambda);
      CHECK(diff <= 1e-9 * norm);
    }
  }
}

TEST_CASE("determinism and linearity in the data") {
  const ManufacturedCase c = case_trig();
  const StaggeredMesh m(generate_polygonal(4));
  const SaddleSystem sys = assemble_system(m, c.problem(0.5), Method::sdg1);
  const FieldSolution a = solve(m, sys);
  const FieldSolution b = solve(m, sys);
  CHECK((a.raw - b.raw).norm() == 0.0);

  SaddleSystem scaled = sys;
  scaled.rhs *= 7.0;
  const FieldSolution s = solve(m, scaled);
  CHECK((s.raw - 7.0 * a.raw).lpNorm<Eigen::Infinity>() <= 1e-11 * a.raw.lpNorm<Eigen::Infinity>() * 7.0);
}

TEST_CASE("solvable for every family across the viscosity range") {
  const ManufacturedCase c = case_taylor();
  for (const StaggeredMesh& m : family_meshes(8))
    for (double nu : {1e2, 1.0, 1e-2, 1e-4, 1e-6}) {
      const FieldSolution s = solve(m, assemble_system(m, c.problem(nu), Method::sdg1));
      CHECK(s.relative_residual <= 1e-10);
      CHECK(std::abs(integral(m, s.pressure)) <= 1e-10);
    }
}

TEST_CASE("singular systems are reported") {
  SparseMatrix k(3, 3);
  k.insert(0, 0) = 1.0;
  k.insert(1, 1) = 1.0;
  Eigen::VectorXd b = Eigen::VectorXd::Ones(3);
  CHECK_THROWS_AS(solve_linear(k, b), SolverError);
}
