#pragma once

#include <span>
#include <vector>

#include "sdg/geometry.hpp"

namespace sdg::wachspress {

/// Relative distance (in units of the polygon diameter) below which a point is
/// treated as lying on an edge line.
inline constexpr double kBoundaryGuard = 1e-12;

/// Wachspress coordinates and their gradients at one point. lambda[i] belongs to
/// vertex v_i.
struct Evaluation {
  std::vector<double> lambda;
  std::vector<Vec2> grad;
};

/// Coordinates and gradients at a strictly interior point x. Throws DomainError
/// when x is within kBoundaryGuard * diam of an edge line or outside.
Evaluation evaluate(const Polygon& poly, const Vec2& x);

std::vector<double> coordinates(const Polygon& poly, const Vec2& x);
std::vector<Vec2> gradients(const Polygon& poly, const Vec2& x);
/// curl(lambda_i) = (-d_y lambda_i, d_x lambda_i).
std::vector<Vec2> curls(const Polygon& poly, const Vec2& x);

/// Nodal interpolant sum_i values[i] * lambda_i(x).
double interpolate(const Polygon& poly, std::span<const double> vertex_values, const Vec2& x);

}  // namespace sdg::wachspress
