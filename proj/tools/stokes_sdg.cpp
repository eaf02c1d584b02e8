// stokes-sdg: convergence studies, viscosity sweeps and mesh export for the
// pressure-robust staggered DG Stokes solver.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "sdg/bench.hpp"

namespace {

int write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return 0;
  }
  std::ofstream out(path);
  if (!out) {
    std::cerr << "error: cannot write " << path << "\n";
    return 1;
  }
  out << text;
  return 0;
}

std::vector<double> parse_list(const std::string& s) {
  std::vector<double> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    const double v = std::stod(item, &used);
    if (used != item.size()) throw std::invalid_argument("bad number '" + item + "'");
    out.push_back(v);
  }
  if (out.empty()) throw std::invalid_argument("empty list");
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Pressure-robust staggered DG solver for the Stokes equations"};
  app.require_subcommand(1);

  std::string case_id = "taylor", mesh = "tri", method = "sdg1", out, format = "csv", nu_list;
  double nu = 1.0, jitter = 0.0;
  int levels = 4, first_level = 1, level = 4, n = 4;

  auto* run = app.add_subcommand("run", "convergence study over successive refinements");
  run->add_option("--case", case_id, "taylor | noflow | trig | constant")
      ->check(CLI::IsMember({"taylor", "noflow", "trig", "constant"}));
  run->add_option("--mesh", mesh, "tri | trap | poly | file:<path>");
  run->add_option("--method", method, "sdg1 | sdg2")->check(CLI::IsMember({"sdg1", "sdg2"}));
  run->add_option("--nu", nu, "viscosity")->check(CLI::PositiveNumber);
  run->add_option("--levels", levels, "number of levels")->check(CLI::Range(1, 10));
  run->add_option("--first-level", first_level, "coarsest level k (n = 2^k)")->check(CLI::Range(1, 10));
  run->add_option("--out", out, "output path (default: stdout)");
  run->add_option("--format", format, "csv | md")->check(CLI::IsMember({"csv", "md"}));
  run->add_option("--jitter", jitter, "interior vertex jitter for tri meshes (fraction of h, <= 0.2)")
      ->check(CLI::Range(0.0, 0.2));

  auto* sweep = app.add_subcommand("sweep", "viscosity sweep on a fixed mesh, both methods");
  sweep->add_option("--case", case_id)->check(CLI::IsMember({"taylor", "noflow", "trig", "constant"}));
  sweep->add_option("--mesh", mesh, "tri | trap | poly | file:<path>");
  sweep->add_option("--level", level, "mesh level k (n = 2^k)")->check(CLI::Range(1, 10));
  sweep->add_option("--nu-list", nu_list, "comma separated viscosities")->required();
  sweep->add_option("--out", out);
  sweep->add_option("--format", format)->check(CLI::IsMember({"csv", "md"}));

  auto* meshcmd = app.add_subcommand("mesh", "write a generated mesh in the JSON mesh format");
  meshcmd->add_option("--family", mesh, "tri | trap | poly")->check(CLI::IsMember({"tri", "trap", "poly"}));
  meshcmd->add_option("--n", n, "subdivision count")->check(CLI::Range(1, 4096));
  meshcmd->add_option("--out", out);
  meshcmd->add_option("--jitter", jitter)->check(CLI::Range(0.0, 0.2));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  sdg::MeshSpec mesh_spec;
  std::vector<double> nus;
  try {
    mesh_spec = sdg::parse_mesh_spec(mesh);
    mesh_spec.jitter = jitter;
    if (*sweep) nus = parse_list(nu_list);
    for (double v : nus)
      if (!(v > 0.0)) throw std::invalid_argument("viscosities must be positive");
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (*run) {
      sdg::StudySpec spec;
      spec.case_id = case_id;
      spec.method = sdg::parse_method(method);
      spec.mesh = mesh_spec;
      spec.nu = nu;
      spec.first_level = first_level;
      spec.levels = levels;
      return write_output(out, sdg::emit(sdg::convergence_study(spec), sdg::parse_format(format)));
    }
    if (*sweep) {
      const auto rows = sdg::robustness_sweep(case_id, mesh_spec, level, nus);
      return write_output(out, sdg::emit_sweep(rows, sdg::parse_format(format)));
    }
    if (*meshcmd) {
      const sdg::PrimalMesh m = sdg::make_mesh(mesh_spec, n);
      return write_output(out, sdg::write_mesh(m));
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
