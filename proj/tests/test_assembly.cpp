#include <doctest.h>

#include <cmath>
#include <random>

#include <Eigen/Eigenvalues>

#include "sdg/assembly.hpp"
#include "sdg/hdivrec.hpp"

using namespace sdg;

namespace {

StaggeredMesh two_cells() {
  return StaggeredMesh(PrimalMesh({{0, 0}, {1, 0}, {1, 1}, {0, 1}}, {{0, 1, 2}, {0, 2, 3}}));
}

std::vector<StaggeredMesh> meshes() {
  std::vector<StaggeredMesh> out;
  out.push_back(two_cells());
  out.emplace_back(generate_triangular(3, 0.15));
  out.emplace_back(generate_trapezoidal(4));
  out.emplace_back(generate_polygonal(4));
  return out;
}

Eigen::VectorXd random_vector(int n, std::mt19937& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  Eigen::VectorXd v(n);
  for (int i = 0; i < n; ++i) v[i] = u(rng);
  return v;
}

Mat2 tensor_on(const StaggeredMesh& m, const Eigen::VectorXd& q, int t) {
  GradientField g;
  for (int e = 0; e < m.num_dual_edges(); ++e) g.traces.emplace_back(q[2 * e], q[2 * e + 1]);
  return recover_tensor(m, g, t);
}

// B_h^*(v, psi) = sum over all primal edges of |e| v_e . [psi n]_e
double bh_star(const StaggeredMesh& m, const Eigen::VectorXd& v, const Eigen::VectorXd& q) {
  double s = 0.0;
  for (int e = 0; e < m.num_primal_edges(); ++e) {
    const PrimalEdge& pe = m.primal_edge(e);
    Vec2 jump = tensor_on(m, q, pe.region[0]) * pe.normal;
    if (!pe.boundary()) jump -= tensor_on(m, q, pe.region[1]) * pe.normal;
    s += pe.length * Vec2(v[2 * e], v[2 * e + 1]).dot(jump);
  }
  return s;
}

// b_h^*(q, v) = -sum_T q_T int_T div Pi^RT v
double divergence_form(const StaggeredMesh& m, const Eigen::VectorXd& q, const Eigen::VectorXd& v) {
  double s = 0.0;
  for (int c = 0; c < m.num_cells(); ++c) {
    const RTBasis basis(m.polygon(c), m.cell(c).split);
    std::vector<Vec2> vals;
    for (int e : m.cell(c).edges) vals.emplace_back(v[2 * e], v[2 * e + 1]);
    const Reconstruction rec(basis, edge_fluxes(m.polygon(c), vals));
    s -= q[c] * rec.divergence() * m.polygon(c).area();
  }
  return s;
}

}  // namespace

TEST_CASE("system dimension on the two-cell square") {
  const StaggeredMesh m = two_cells();
  const Problem prob{[](const Vec2&) { return Vec2::Zero(); }, [](const Vec2&) { return Vec2::Zero(); }, 1.0};
  const SaddleSystem sys = assemble_system(m, prob, Method::sdg1);
  CHECK(sys.layout.size() == 17);
  CHECK(sys.layout.num_q == 12);
  CHECK(sys.layout.num_u == 2);
  CHECK(sys.layout.num_p == 2);
  CHECK(sys.matrix.rows() == 17);
  CHECK(sys.rhs.norm() == 0.0);
}

TEST_CASE("coupling form: hand-computed entries on a single triangle") {
  const StaggeredMesh m(PrimalMesh({{0, 0}, {1, 0}, {0, 1}}, {{0, 1, 2}}));
  const SparseMatrix b = assemble_Bh(m);
  // v = (1, 0) on local edge 0 only; the dual edges through v_0 and v_1 border its
  // region, each with the region on the lower-indexed side, so B_h picks -|e| there.
  Eigen::VectorXd v = Eigen::VectorXd::Zero(2 * m.num_primal_edges());
  v[2 * m.cell(0).edges[0]] = 1.0;
  const Eigen::VectorXd col = b.transpose() * v;
  const double l0 = std::sqrt(2.0) / 3.0, l1 = std::sqrt(5.0) / 3.0;
  CHECK(std::abs(col[2 * m.cell(0).dual_edges[0]] + l0) <= 1e-15);
  CHECK(std::abs(col[2 * m.cell(0).dual_edges[1]] + l1) <= 1e-15);
  CHECK(std::abs(col[2 * m.cell(0).dual_edges[2]]) <= 1e-15);
  for (int e = 0; e < 3; ++e) CHECK(col[2 * e + 1] == 0.0);
}

TEST_CASE("adjointness of the coupling and divergence forms") {
  std::mt19937 rng(1);
  for (const StaggeredMesh& m : meshes()) {
    const SparseMatrix b = assemble_Bh(m);
    const SparseMatrix d = assemble_bh(m);
    for (int k = 0; k < 10; ++k) {
      const Eigen::VectorXd v = random_vector(2 * m.num_primal_edges(), rng);
      const Eigen::VectorXd q = random_vector(2 * m.num_dual_edges(), rng);
      const Eigen::VectorXd p = random_vector(m.num_cells(), rng);
      const double bh = v.dot(b * q);
      CHECK(std::abs(bh - bh_star(m, v, q)) <= 1e-12 * std::max(1.0, std::abs(bh)));
      const double dv = p.dot(d * v);
      CHECK(std::abs(dv - divergence_form(m, p, v)) <= 1e-12 * std::max(1.0, std::abs(dv)));
    }
  }
}

TEST_CASE("divergence form annihilates constants and telescopes") {
  for (const StaggeredMesh& m : meshes()) {
    const SparseMatrix d = assemble_bh(m);
    Eigen::VectorXd c(2 * m.num_primal_edges());
    for (int e = 0; e < m.num_primal_edges(); ++e) c.segment<2>(2 * e) = Vec2(0.4, -1.7);
    CHECK((d * c).norm() <= 1e-14);
    const SparseMatrix di = restrict_velocity(m, d, 1);
    const Eigen::VectorXd colsum = Eigen::RowVectorXd::Ones(m.num_cells()) * di;
    CHECK(colsum.norm() <= 1e-14);
  }
}

TEST_CASE("coupling vanishes inside a dual region") {
  // constant v: every dual-edge jump is zero, including those between the two halves of one D(e)
  for (const StaggeredMesh& m : meshes()) {
    Eigen::VectorXd c(2 * m.num_primal_edges());
    for (int e = 0; e < m.num_primal_edges(); ++e) c.segment<2>(2 * e) = Vec2(2.0, 1.0);
    CHECK((assemble_Bh(m).transpose() * c).norm() <= 1e-14);
  }
}

TEST_CASE("mass matrix") {
  for (const StaggeredMesh& m : meshes()) {
    const SparseMatrix mass = assemble_mass(m);
    const Eigen::MatrixXd dense(mass);
    CHECK((dense - dense.transpose()).cwiseAbs().maxCoeff() == 0.0);
    Mat2 w;
    w << 1.0, -2.0, 0.5, 3.0;
    Eigen::VectorXd q(2 * m.num_dual_edges());
    for (int e = 0; e < m.num_dual_edges(); ++e) q.segment<2>(2 * e) = w * m.dual_edge(e).normal;
    CHECK(std::abs(q.dot(mass * q) - w.squaredNorm() * 1.0) <= 1e-12);
  }
  const Eigen::MatrixXd small(assemble_mass(two_cells()));
  const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(small);
  CHECK(eig.eigenvalues().minCoeff() > 0.0);
}

TEST_CASE("block structure and method independence of the matrix") {
  const double nu = 0.37;
  for (const StaggeredMesh& m : meshes()) {
    const Problem prob{[](const Vec2& x) { return Vec2(std::sin(x.y()), x.x()); },
                       [](const Vec2& x) { return Vec2(x.y(), 1.0); }, nu};
    const SaddleSystem s1 = assemble_system(m, prob, Method::sdg1);
    const SaddleSystem s2 = assemble_system(m, prob, Method::sdg2);
    CHECK(Eigen::MatrixXd(s1.matrix - s2.matrix).cwiseAbs().maxCoeff() == 0.0);

    const DofLayout& L = s1.layout;
    const Eigen::MatrixXd k(s1.matrix);
    const Eigen::MatrixXd qu = k.block(L.q_offset(), L.u_offset(), L.num_q, L.num_u);
    const Eigen::MatrixXd uq = k.block(L.u_offset(), L.q_offset(), L.num_u, L.num_q);
    CHECK((qu + nu * uq.transpose()).cwiseAbs().maxCoeff() <= 1e-15);
    const Eigen::MatrixXd up = k.block(L.u_offset(), L.p_offset(), L.num_u, L.num_p);
    const Eigen::MatrixXd pu = k.block(L.p_offset(), L.u_offset(), L.num_p, L.num_u);
    CHECK((up - pu.transpose()).cwiseAbs().maxCoeff() == 0.0);
    // only the velocity rows of the right-hand side depend on the method
    CHECK((s1.rhs.head(L.num_q) - s2.rhs.head(L.num_q)).norm() == 0.0);
    CHECK((s1.rhs.tail(L.num_p + 1) - s2.rhs.tail(L.num_p + 1)).norm() == 0.0);
  }
}

TEST_CASE("zero data gives a zero right-hand side") {
  const Problem prob{[](const Vec2&) { return Vec2::Zero(); }, [](const Vec2&) { return Vec2::Zero(); }, 2.0};
  for (const StaggeredMesh& m : meshes())
    for (Method meth : {Method::sdg1, Method::sdg2}) CHECK(assemble_rhs(m, prob, meth).norm() == 0.0);
}

TEST_CASE("reconstructed load of a gradient equals the discrete divergence of its cell means") {
  auto check = [](const StaggeredMesh& m, const ScalarField& chi, const VectorField& grad) {
    const Eigen::VectorXd load = assemble_load(m, grad, Method::sdg1);
    const PressureField pi = interp_pih(m, chi);
    const Eigen::VectorXd p = Eigen::Map<const Eigen::VectorXd>(pi.values.data(), m.num_cells());
    const Eigen::VectorXd expected = restrict_velocity(m, assemble_bh(m), 1).transpose() * p;
    CHECK((load - expected).lpNorm<Eigen::Infinity>() <= 1e-10 * std::max(1.0, expected.lpNorm<Eigen::Infinity>()));
    // the plain load does not have this property
    const Eigen::VectorXd plain = assemble_load(m, grad, Method::sdg2);
    CHECK((plain - expected).lpNorm<Eigen::Infinity>() > 1e-6);
  };
  // quartic: within reach of the quadrature on every cell size
  auto poly = [](const Vec2& x) { return x.x() * x.x() * x.y() * x.y() - 2 * x.x() * x.x() * x.x() + x.x() * x.y(); };
  auto poly_grad = [](const Vec2& x) {
    return Vec2(2 * x.x() * x.y() * x.y() - 6 * x.x() * x.x() + x.y(), 2 * x.x() * x.x() * x.y() + x.x());
  };
  for (const StaggeredMesh& m : meshes()) check(m, poly, poly_grad);

  auto trig = [](const Vec2& x) { return std::sin(3 * x.x()) * std::cos(2 * x.y()) + x.x() * x.y(); };
  auto trig_grad = [](const Vec2& x) {
    return Vec2(3 * std::cos(3 * x.x()) * std::cos(2 * x.y()) + x.y(),
                -2 * std::sin(3 * x.x()) * std::sin(2 * x.y()) + x.x());
  };
  for (const PrimalMesh& pm : {generate_triangular(16, 0.1), generate_trapezoidal(16), generate_polygonal(16)})
    check(StaggeredMesh(pm), trig, trig_grad);
}

TEST_CASE("invalid viscosity and method names") {
  const StaggeredMesh m = two_cells();
  const Problem prob{[](const Vec2&) { return Vec2::Zero(); }, [](const Vec2&) { return Vec2::Zero(); }, 0.0};
  CHECK_THROWS_AS(assemble_system(m, prob, Method::sdg1), std::invalid_argument);
  CHECK_THROWS_AS(parse_method("sdg3"), std::invalid_argument);
  CHECK(parse_method("sdg2") == Method::sdg2);
  CHECK(to_string(Method::sdg1) == "sdg1");
}
