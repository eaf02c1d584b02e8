#pragma once

#include <stdexcept>
#include <type_traits>
#include <vector>

#include "sdg/geometry.hpp"

namespace sdg::quadrature {

/// Fixed quadrature rule on a reference element. Triangle nodes are given in the
/// reference triangle (0,0),(1,0),(0,1); edge nodes are parameters in (0,1).
/// Weights sum to the reference measure (1/2 for the triangle, 1 for the edge).
struct QuadRule {
  std::vector<Vec2> nodes;
  std::vector<double> weights;
  int degree = 0;

  std::size_t size() const { return weights.size(); }
};

class UnsupportedRule : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Symmetric interior rule exact for polynomials of total degree <= d, d in {2,4,6,8,10}.
const QuadRule& triangle_rule(int degree);

/// Gauss-Legendre rule on (0,1) with n in {2,4,8} points (exact to degree 2n-1).
const QuadRule& edge_rule(int points);

/// Integrates f over the triangle (a, b, c) with the given rule.
template <class F>
auto integrate_triangle(const Vec2& a, const Vec2& b, const Vec2& c, const QuadRule& rule, F&& f) {
  const double jac = 2.0 * triangle_area(a, b, c);
  const Vec2 e1 = b - a;
  const Vec2 e2 = c - a;
  auto node = [&](std::size_t q) -> Vec2 {
    return a + rule.nodes[q].x() * e1 + rule.nodes[q].y() * e2;
  };
  using R = std::decay_t<decltype(f(a))>;
  R sum = (rule.weights[0] * jac) * f(node(0));
  for (std::size_t q = 1; q < rule.size(); ++q) sum += (rule.weights[q] * jac) * f(node(q));
  return sum;
}

/// Integrates f along the segment [a, b] (arc length measure).
template <class F>
auto integrate_segment(const Vec2& a, const Vec2& b, const QuadRule& rule, F&& f) {
  const double len = (b - a).norm();
  auto node = [&](std::size_t q) -> Vec2 { return a + rule.nodes[q].x() * (b - a); };
  using R = std::decay_t<decltype(f(a))>;
  R sum = (rule.weights[0] * len) * f(node(0));
  for (std::size_t q = 1; q < rule.size(); ++q) sum += (rule.weights[q] * len) * f(node(q));
  return sum;
}

}  // namespace sdg::quadrature
