#include "sdg/wachspress.hpp"

#include <fmt/format.h>

namespace sdg::wachspress {

Evaluation evaluate(const Polygon& poly, const Vec2& x) {
  const int m = poly.size();
  const double guard = kBoundaryGuard * poly.diameter();
  std::vector<Vec2> scaled(m);  // n_i / d_i
  std::vector<double> d(m);
  for (int i = 0; i < m; ++i) {
    d[i] = poly.edge_distance(i, x);
    if (!(d[i] > guard))
      throw DomainError(fmt::format("point ({}, {}) is not strictly inside the polygon (edge {}, distance {})",
                                    x.x(), x.y(), i, d[i]));
    scaled[i] = poly.normal(i) / d[i];
  }

  // Vertex v_i sits between edges e_{i-1} and e_i: w_i = det(n~_{i-1}, n~_i).
  Evaluation ev;
  ev.lambda.resize(m);
  double total = 0.0;
  for (int i = 0; i < m; ++i) {
    const int prev = (i + m - 1) % m;
    ev.lambda[i] = cross(poly.normal(prev), poly.normal(i)) / (d[prev] * d[i]);
    total += ev.lambda[i];
  }
  for (double& l : ev.lambda) l /= total;

  // grad w_i / w_i = n~_{i-1} + n~_i, hence
  //   grad lambda_i = lambda_i * sum_k n~_k ([k in {i-1, i}] - lambda_k - lambda_{k+1}).
  // The coefficient for the two edges through v_i is evaluated as the sum of the
  // remaining coordinates, which avoids cancellation next to an edge.
  std::vector<double> pair_sum(m);  // lambda_k + lambda_{k+1}
  std::vector<double> rest(m, 0.0);  // 1 - pair_sum[k], summed directly
  for (int k = 0; k < m; ++k) {
    pair_sum[k] = ev.lambda[k] + ev.lambda[(k + 1) % m];
    for (int j = 0; j < m; ++j)
      if (j != k && j != (k + 1) % m) rest[k] += ev.lambda[j];
  }
  ev.grad.assign(m, Vec2::Zero());
  for (int i = 0; i < m; ++i) {
    const int prev = (i + m - 1) % m;
    Vec2 g = Vec2::Zero();
    for (int k = 0; k < m; ++k) g += ((k == prev || k == i) ? rest[k] : -pair_sum[k]) * scaled[k];
    ev.grad[i] = ev.lambda[i] * g;
  }
  return ev;
}

std::vector<double> coordinates(const Polygon& poly, const Vec2& x) { return evaluate(poly, x).lambda; }

std::vector<Vec2> gradients(const Polygon& poly, const Vec2& x) { return evaluate(poly, x).grad; }

std::vector<Vec2> curls(const Polygon& poly, const Vec2& x) {
  auto g = gradients(poly, x);
  for (Vec2& v : g) v = rotate_ccw(v);
  return g;
}

double interpolate(const Polygon& poly, std::span<const double> vertex_values, const Vec2& x) {
  const auto lambda = coordinates(poly, x);
  double s = 0.0;
  for (std::size_t i = 0; i < lambda.size(); ++i) s += vertex_values[i] * lambda[i];
  return s;
}

}  // namespace sdg::wachspress
