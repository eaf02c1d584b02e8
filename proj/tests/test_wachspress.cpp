#include <doctest.h>

#include <cmath>
#include <random>

#include "sdg/wachspress.hpp"

using namespace sdg;
namespace wp = sdg::wachspress;

namespace {

Polygon unit_square() { return Polygon({{0, 0}, {1, 0}, {1, 1}, {0, 1}}); }

Polygon regular(int m, double r = 1.0) {
  std::vector<Vec2> v;
  for (int k = 0; k < m; ++k) v.emplace_back(r * std::cos(2 * M_PI * k / m), r * std::sin(2 * M_PI * k / m));
  return Polygon(v);
}

// Convex polygon with m vertices at sorted random angles on a slightly perturbed circle.
Polygon random_convex(int m, std::mt19937& rng) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (;;) {
    std::vector<double> ang(m);
    for (int k = 0; k < m; ++k) ang[k] = 2 * M_PI * (k + 0.7 * u(rng)) / m;
    std::vector<Vec2> v;
    for (double a : ang) v.emplace_back(1.5 + std::cos(a), -0.5 + 0.8 * std::sin(a));
    bool convex = true;
    for (int i = 0; i < m; ++i) {
      const Vec2 a = v[i], b = v[(i + 1) % m], c = v[(i + 2) % m];
      if (cross(b - a, c - b) < 1e-3) convex = false;
    }
    if (convex) return Polygon(v);
  }
}

Vec2 random_interior(const Polygon& p, std::mt19937& rng) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (;;) {
    std::vector<double> w(p.size());
    double s = 0.0;
    for (double& x : w) s += (x = u(rng) + 0.05);
    Vec2 x = Vec2::Zero();
    for (int i = 0; i < p.size(); ++i) x += w[i] / s * p.vertex(i);
    if (p.contains_strictly(x, 1e-6 * p.diameter())) return x;
  }
}

}  // namespace

TEST_CASE("symmetric values") {
  const auto l = wp::coordinates(unit_square(), {0.5, 0.5});
  for (double v : l) CHECK(std::abs(v - 0.25) <= 1e-15);
  const auto h = wp::coordinates(regular(6), {0, 0});
  for (double v : h) CHECK(std::abs(v - 1.0 / 6) <= 1e-15);
}

TEST_CASE("Lagrange property towards a vertex") {
  const Polygon p = regular(5);
  for (int j = 0; j < 5; ++j) {
    const Vec2 x = p.vertex(j) + 1e-7 * (p.centroid() - p.vertex(j));
    const auto l = wp::coordinates(p, x);
    for (int i = 0; i < 5; ++i) CHECK(std::abs(l[i] - (i == j ? 1.0 : 0.0)) <= 1e-6);
  }
}

TEST_CASE("triangle coordinates are barycentric") {
  const Polygon t({{0.2, 0.1}, {1.3, 0.4}, {0.5, 1.1}});
  std::mt19937 rng(3);
  for (int k = 0; k < 20; ++k) {
    const Vec2 x = random_interior(t, rng);
    const auto l = wp::coordinates(t, x);
    const double area = t.area();
    for (int i = 0; i < 3; ++i) {
      const double bary = triangle_area(x, t.vertex(i + 1), t.vertex(i + 2)) / area;
      CHECK(std::abs(l[i] - bary) <= 1e-14);
    }
  }
}

TEST_CASE("partition of unity, linear precision, positivity, gradient identities") {
  std::mt19937 rng(11);
  for (int m = 3; m <= 8; ++m)
    for (int trial = 0; trial < 5; ++trial) {
      const Polygon p = random_convex(m, rng);
      for (int k = 0; k < 10; ++k) {
        const Vec2 x = random_interior(p, rng);
        const wp::Evaluation ev = wp::evaluate(p, x);
        double sum = 0.0;
        Vec2 lin = Vec2::Zero();
        Vec2 gsum = Vec2::Zero();
        Mat2 glin = Mat2::Zero();
        for (int i = 0; i < m; ++i) {
          CHECK(ev.lambda[i] > 0.0);
          sum += ev.lambda[i];
          lin += ev.lambda[i] * p.vertex(i);
          gsum += ev.grad[i];
          glin += ev.grad[i] * p.vertex(i).transpose();
        }
        CHECK(std::abs(sum - 1.0) <= 1e-12);
        CHECK((lin - x).norm() <= 1e-12);
        CHECK(gsum.norm() <= 1e-10);
        CHECK((glin - Mat2::Identity()).norm() <= 1e-10);

        const auto cu = wp::curls(p, x);
        Vec2 csum = Vec2::Zero();
        for (int i = 0; i < m; ++i) {
          CHECK(std::abs(cu[i].dot(ev.grad[i])) <= 1e-12 * (1 + ev.grad[i].squaredNorm()));
          csum += cu[i];
        }
        CHECK(csum.norm() <= 1e-10);
      }
    }
  CHECK((rotate_ccw({1, 0}) - Vec2(0, 1)).norm() == 0.0);
}

TEST_CASE("gradients against central differences") {
  std::mt19937 rng(5);
  std::vector<Polygon> polys{unit_square(), regular(6)};
  for (int m = 3; m <= 8; ++m) polys.push_back(random_convex(m, rng));
  for (const Polygon& p : polys) {
    std::vector<Vec2> pts{p.centroid()};
    for (int k = 0; k < 5; ++k) pts.push_back(random_interior(p, rng));
    for (const Vec2& x : pts) {
      const auto g = wp::gradients(p, x);
      const double step = 1e-5 * p.diameter();
      for (int d = 0; d < 2; ++d) {
        Vec2 e = Vec2::Zero();
        e[d] = step;
        const auto lp = wp::coordinates(p, x + e);
        const auto lm = wp::coordinates(p, x - e);
        for (int i = 0; i < p.size(); ++i) {
          const double fd = (lp[i] - lm[i]) / (2 * step);
          CHECK(std::abs(fd - g[i][d]) <= 1e-6 * std::max(1.0, std::abs(g[i][d])));
        }
      }
    }
  }
}

TEST_CASE("boundary guard") {
  const Polygon p = unit_square();
  CHECK_THROWS_AS(wp::evaluate(p, {0.5, 0.0}), DomainError);
  CHECK_THROWS_AS(wp::evaluate(p, {0.5, 1e-14}), DomainError);
  CHECK_THROWS_AS(wp::evaluate(p, {1.5, 0.5}), DomainError);
  CHECK_NOTHROW(wp::evaluate(p, {0.5, 1e-9}));
}

TEST_CASE("nodal interpolation") {
  const Polygon p = unit_square();
  std::vector<double> ones(4, 1.0), xs, sq;
  for (const Vec2& v : p.vertices()) {
    xs.push_back(v.x());
    sq.push_back(v.x() * v.x());
  }
  CHECK(std::abs(wp::interpolate(p, ones, {0.3, 0.8}) - 1.0) <= 1e-14);
  CHECK(std::abs(wp::interpolate(p, xs, {0.3, 0.8}) - 0.3) <= 1e-12);
  CHECK(std::abs(wp::interpolate(p, sq, {0.5, 0.5}) - 0.5) <= 1e-14);
}
