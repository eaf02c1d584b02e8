#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sdg/assembly.hpp"
#include "sdg/mesh.hpp"
#include "sdg/solver.hpp"

namespace sdg {

/// Closed-form Stokes solution on the unit square; f = -nu lap(u) + grad(p).
struct ManufacturedCase {
  std::string id;
  VectorField velocity;
  TensorField velocity_gradient;  // (grad u)_{ij} = d u_i / d x_j
  VectorField velocity_laplacian;
  ScalarField pressure;           // mean zero over the unit square
  VectorField pressure_gradient;

  Vec2 force(const Vec2& x, double nu) const { return -nu * velocity_laplacian(x) + pressure_gradient(x); }
  Problem problem(double nu) const;
};

/// u = (pi x^2 (1-x)^2 sin(2 pi y) + 1, -2x(1-x)(1-2x) sin^2(pi y) + 1),
/// p = sin(x) cos(y) + (cos(1) - 1) sin(1).
ManufacturedCase case_taylor();
/// u = 0, p = -(Ra/2) y^2 + Ra y - Ra/3 with Ra = 1000.
ManufacturedCase case_noflow(double rayleigh = 1000.0);
/// u = (-e^x (y cos y + sin y), e^x y sin y), p = 2 e^x sin y minus its mean.
ManufacturedCase case_trig();
/// u = (3, -1), p = 0: lies in the discrete space, so every scheme is exact.
ManufacturedCase case_constant();
ManufacturedCase case_by_name(const std::string& id);

enum class MeshFamily { tri, trap, poly, file };

struct MeshSpec {
  MeshFamily family = MeshFamily::tri;
  std::string path;  // for MeshFamily::file
  double jitter = 0.0;
};

MeshSpec parse_mesh_spec(const std::string& s);
std::string to_string(MeshFamily f);
/// Mesh of the family at subdivision n (ignored for files).
PrimalMesh make_mesh(const MeshSpec& spec, int n);

struct ErrorRecord {
  int level = 0;
  double h = 0.0;
  int dof = 0;
  double err_omega = 0.0;
  double err_u = 0.0;
  double err_p = 0.0;
  double err_super = 0.0;
  std::optional<double> ord_omega, ord_u, ord_p, ord_super;
};

struct RunResult {
  ErrorRecord record;
  FieldSolution solution;
};

/// Assemble, solve, and measure one (mesh, case, method, nu) instance.
RunResult run_case(const StaggeredMesh& mesh, const ManufacturedCase& mcase, Method method, double nu, int level = 0);

struct StudySpec {
  std::string case_id = "taylor";
  Method method = Method::sdg1;
  MeshSpec mesh;
  double nu = 1.0;
  int first_level = 1;  // level k uses subdivision n = 2^k
  int levels = 4;
};

/// Runs consecutive levels and fills the observed orders log2(e_k / e_{k+1}).
std::vector<ErrorRecord> convergence_study(const StudySpec& spec);
void compute_orders(std::vector<ErrorRecord>& records);

struct SweepRow {
  double nu = 0.0;
  Method method = Method::sdg1;
  ErrorRecord record;
};

/// Errors of both methods for every nu on one fixed mesh (level k: n = 2^k).
std::vector<SweepRow> robustness_sweep(const std::string& case_id, const MeshSpec& mesh, int level,
                                       const std::vector<double>& nus);

enum class Format { csv, md };
Format parse_format(const std::string& s);

/// Six significant digits, stable column order:
/// level,h,dof,err_omega,err_u,err_p,err_super,ord_omega,ord_u,ord_p,ord_super
std::string emit(const std::vector<ErrorRecord>& records, Format format);
std::string emit_sweep(const std::vector<SweepRow>& rows, Format format);

}  // namespace sdg
