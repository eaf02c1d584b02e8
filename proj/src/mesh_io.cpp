#include <fstream>
#include <sstream>

#include <fmt/format.h>
#include <json.hpp>

#include "sdg/mesh.hpp"

namespace sdg {

using nlohmann::json;

PrimalMesh read_mesh(std::istream& in) {
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw MeshError(fmt::format("mesh parse error at byte {}: {}", e.byte, e.what()));
  }
  if (!doc.is_object() || !doc.contains("vertices") || !doc.contains("cells"))
    throw MeshError("mesh file must be an object with keys \"vertices\" and \"cells\"");
  const json& jv = doc["vertices"];
  const json& jc = doc["cells"];
  if (!jv.is_array() || !jc.is_array()) throw MeshError("\"vertices\" and \"cells\" must be arrays");

  std::vector<Vec2> vertices;
  vertices.reserve(jv.size());
  for (std::size_t k = 0; k < jv.size(); ++k) {
    const json& p = jv[k];
    if (!p.is_array() || p.size() != 2 || !p[0].is_number() || !p[1].is_number())
      throw MeshError(fmt::format("vertex {}: expected [x, y]", k));
    vertices.emplace_back(p[0].get<double>(), p[1].get<double>());
  }
  std::vector<std::vector<int>> cells;
  cells.reserve(jc.size());
  for (std::size_t k = 0; k < jc.size(); ++k) {
    const json& c = jc[k];
    if (!c.is_array()) throw MeshError(fmt::format("cell {}: expected an array of vertex indices", k));
    std::vector<int> cyc;
    for (const json& v : c) {
      if (!v.is_number_integer()) throw MeshError(fmt::format("cell {}: vertex indices must be integers", k));
      const auto idx = v.get<long long>();
      if (idx < 0 || idx >= static_cast<long long>(vertices.size()))
        throw MeshError(fmt::format("cell {}: vertex index {} out of range [0, {})", k, idx, vertices.size()));
      cyc.push_back(static_cast<int>(idx));
    }
    cells.push_back(std::move(cyc));
  }
  return PrimalMesh(std::move(vertices), std::move(cells));
}

PrimalMesh read_mesh_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw MeshError("cannot open mesh file " + path);
  return read_mesh(in);
}

std::string write_mesh(const PrimalMesh& mesh) {
  json doc;
  json jv = json::array();
  for (const Vec2& p : mesh.vertices()) jv.push_back({p.x(), p.y()});
  doc["vertices"] = std::move(jv);
  doc["cells"] = mesh.cells();
  return doc.dump() + "\n";
}

}  // namespace sdg
