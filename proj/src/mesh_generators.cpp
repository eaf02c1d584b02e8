#include <algorithm>
#include <cmath>
#include <map>
#include <random>
#include <stdexcept>
#include <string>

#include "sdg/mesh.hpp"

namespace sdg {

PrimalMesh generate_triangular(int n, double jitter, std::uint32_t seed) {
  if (n < 1) throw std::invalid_argument("generate_triangular: n must be >= 1");
  jitter = std::clamp(jitter, 0.0, 0.2);
  const double h = 1.0 / n;
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  std::vector<Vec2> vertices;
  vertices.reserve((n + 1) * (n + 1));
  for (int j = 0; j <= n; ++j) {
    for (int i = 0; i <= n; ++i) {
      Vec2 x(i * h, j * h);
      if (jitter > 0.0 && i > 0 && i < n && j > 0 && j < n) x += jitter * h * Vec2(unit(rng), unit(rng));
      vertices.push_back(x);
    }
  }
  auto id = [n](int i, int j) { return j * (n + 1) + i; };
  std::vector<std::vector<int>> cells;
  cells.reserve(2 * n * n);
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) {
      cells.push_back({id(i, j), id(i + 1, j), id(i + 1, j + 1)});
      cells.push_back({id(i, j), id(i + 1, j + 1), id(i, j + 1)});
    }
  }
  return PrimalMesh(std::move(vertices), std::move(cells));
}

PrimalMesh generate_trapezoidal(int n) {
  if (n < 1 || n % 2 != 0)
    throw std::invalid_argument("generate_trapezoidal: n must be a positive even number, got " + std::to_string(n));
  const double h = 1.0 / n;
  std::vector<Vec2> vertices;
  vertices.reserve((n + 1) * (n + 1));
  for (int j = 0; j <= n; ++j) {
    for (int i = 0; i <= n; ++i) {
      double y = j * h;
      if (j > 0 && j < n) y += ((i + j) % 2 == 0 ? 0.25 : -0.25) * h;
      vertices.emplace_back(i * h, y);
    }
  }
  auto id = [n](int i, int j) { return j * (n + 1) + i; };
  std::vector<std::vector<int>> cells;
  cells.reserve(n * n);
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) cells.push_back({id(i, j), id(i + 1, j), id(i + 1, j + 1), id(i, j + 1)});
  return PrimalMesh(std::move(vertices), std::move(cells));
}

namespace {

// Sutherland-Hodgman clip of a convex polygon against the half plane
// sign * (p[axis] - bound) >= 0. All inputs are integer lattice points and every
// crossing lands on a lattice point, so rounding keeps the arithmetic exact.
std::vector<Vec2> clip(const std::vector<Vec2>& poly, int axis, double bound, double sign) {
  std::vector<Vec2> out;
  const std::size_t m = poly.size();
  for (std::size_t k = 0; k < m; ++k) {
    const Vec2& a = poly[k];
    const Vec2& b = poly[(k + 1) % m];
    const double da = sign * (a[axis] - bound);
    const double db = sign * (b[axis] - bound);
    if (da >= 0.0) out.push_back(a);
    if ((da > 0.0 && db < 0.0) || (da < 0.0 && db > 0.0)) {
      const Vec2 x = a + (da / (da - db)) * (b - a);
      out.emplace_back(std::round(x.x()), std::round(x.y()));
    }
  }
  // drop repeated points
  std::vector<Vec2> clean;
  for (const Vec2& p : out)
    if (clean.empty() || p != clean.back()) clean.push_back(p);
  while (clean.size() > 1 && clean.front() == clean.back()) clean.pop_back();
  return clean;
}

}  // namespace

PrimalMesh generate_polygonal(int n) {
  if (n < 2) throw std::invalid_argument("generate_polygonal: n must be >= 2");
  const int rows = n + (n % 2);
  // Lattice units: x in dx/2, y in dy/3, with dx = 1/n and dy = 1/rows.
  const double xmax = 2.0 * n;
  const double ymax = 3.0 * rows;
  const Vec2 offsets[6] = {{0, 2}, {-1, 1}, {-1, -1}, {0, -2}, {1, -1}, {1, 1}};

  std::map<std::pair<long, long>, int> vertex_id;
  std::vector<Vec2> vertices;
  std::vector<std::vector<int>> cells;
  for (int j = 0; j <= rows; ++j) {
    const bool odd = j % 2 != 0;
    const int count = odd ? n : n + 1;
    for (int i = 0; i < count; ++i) {
      const Vec2 center(odd ? 2.0 * i + 1.0 : 2.0 * i, 3.0 * j);
      std::vector<Vec2> hex;
      // counterclockwise starting at the right-upper vertex
      for (int k : {5, 0, 1, 2, 3, 4}) hex.push_back(center + offsets[k]);
      hex = clip(hex, 0, 0.0, 1.0);
      hex = clip(hex, 0, xmax, -1.0);
      hex = clip(hex, 1, 0.0, 1.0);
      hex = clip(hex, 1, ymax, -1.0);
      if (hex.size() < 3 || signed_area(hex) <= 0.0) continue;
      std::vector<int> cyc;
      for (const Vec2& p : hex) {
        const auto key = std::make_pair(std::lround(p.x()), std::lround(p.y()));
        auto [it, inserted] = vertex_id.emplace(key, static_cast<int>(vertices.size()));
        if (inserted) vertices.emplace_back(p.x() / xmax, p.y() / ymax);
        cyc.push_back(it->second);
      }
      cells.push_back(std::move(cyc));
    }
  }
  return PrimalMesh(std::move(vertices), std::move(cells));
}

}  // namespace sdg
