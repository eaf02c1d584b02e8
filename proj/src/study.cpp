#include <cmath>
#include <stdexcept>

#include "sdg/bench.hpp"

namespace sdg {

MeshSpec parse_mesh_spec(const std::string& s) {
  MeshSpec spec;
  if (s == "tri")
    spec.family = MeshFamily::tri;
  else if (s == "trap")
    spec.family = MeshFamily::trap;
  else if (s == "poly")
    spec.family = MeshFamily::poly;
  else if (s.rfind("file:", 0) == 0 && s.size() > 5) {
    spec.family = MeshFamily::file;
    spec.path = s.substr(5);
  } else {
    throw std::invalid_argument("unknown mesh family '" + s + "' (expected tri, trap, poly or file:<path>)");
  }
  return spec;
}

std::string to_string(MeshFamily f) {
  switch (f) {
    case MeshFamily::tri: return "tri";
    case MeshFamily::trap: return "trap";
    case MeshFamily::poly: return "poly";
    case MeshFamily::file: return "file";
  }
  return "?";
}

PrimalMesh make_mesh(const MeshSpec& spec, int n) {
  switch (spec.family) {
    case MeshFamily::tri: return generate_triangular(n, spec.jitter);
    case MeshFamily::trap: return generate_trapezoidal(n);
    case MeshFamily::poly: return generate_polygonal(n);
    case MeshFamily::file: return read_mesh_file(spec.path);
  }
  throw std::logic_error("unreachable mesh family");
}

RunResult run_case(const StaggeredMesh& mesh, const ManufacturedCase& mcase, Method method, double nu, int level) {
  const SaddleSystem sys = assemble_system(mesh, mcase.problem(nu), method);
  RunResult out{{}, solve(mesh, sys)};
  ErrorRecord& r = out.record;
  r.level = level;
  r.h = mesh.h();
  r.dof = sys.layout.dof();
  const auto grad = mcase.velocity_gradient;
  const TensorField omega = [grad, nu](const Vec2& x) -> Mat2 { return nu * grad(x); };
  r.err_omega = error_L2(mesh, out.solution.omega, omega);
  r.err_u = error_L2(mesh, out.solution.velocity, mcase.velocity);
  r.err_p = error_L2(mesh, out.solution.pressure, mcase.pressure);
  r.err_super = error_super(mesh, out.solution.velocity, mcase.velocity);
  return out;
}

void compute_orders(std::vector<ErrorRecord>& records) {
  auto order = [](double coarse, double fine) -> std::optional<double> {
    if (!(coarse > 0.0) || !(fine > 0.0)) return std::nullopt;
    return std::log2(coarse / fine);
  };
  for (std::size_t k = 0; k < records.size(); ++k) {
    ErrorRecord& r = records[k];
    if (k == 0) {
      r.ord_omega = r.ord_u = r.ord_p = r.ord_super = std::nullopt;
      continue;
    }
    const ErrorRecord& prev = records[k - 1];
    r.ord_omega = order(prev.err_omega, r.err_omega);
    r.ord_u = order(prev.err_u, r.err_u);
    r.ord_p = order(prev.err_p, r.err_p);
    r.ord_super = order(prev.err_super, r.err_super);
  }
}

std::vector<ErrorRecord> convergence_study(const StudySpec& spec) {
  const ManufacturedCase mcase = case_by_name(spec.case_id);
  const int levels = spec.mesh.family == MeshFamily::file ? 1 : spec.levels;
  std::vector<ErrorRecord> records;
  for (int k = 0; k < levels; ++k) {
    const int level = spec.first_level + k;
    const StaggeredMesh mesh(make_mesh(spec.mesh, 1 << level));
    records.push_back(run_case(mesh, mcase, spec.method, spec.nu, level).record);
  }
  compute_orders(records);
  return records;
}

std::vector<SweepRow> robustness_sweep(const std::string& case_id, const MeshSpec& mesh_spec, int level,
                                       const std::vector<double>& nus) {
  const ManufacturedCase mcase = case_by_name(case_id);
  const StaggeredMesh mesh(make_mesh(mesh_spec, 1 << level));
  std::vector<SweepRow> rows;
  for (double nu : nus)
    for (Method m : {Method::sdg1, Method::sdg2}) rows.push_back({nu, m, run_case(mesh, mcase, m, nu, level).record});
  return rows;
}

}  // namespace sdg
