#include <cmath>
#include <numbers>
#include <stdexcept>

#include "sdg/bench.hpp"

namespace sdg {

using std::numbers::pi;

Problem ManufacturedCase::problem(double nu) const {
  Problem p;
  p.nu = nu;
  p.boundary_velocity = velocity;
  auto lap = velocity_laplacian;
  auto gp = pressure_gradient;
  p.force = [lap, gp, nu](const Vec2& x) -> Vec2 { return -nu * lap(x) + gp(x); };
  return p;
}

ManufacturedCase case_taylor() {
  // g(x) = x^2 (1-x)^2 and its derivatives
  struct G {
    static double g0(double x) { return x * x * (1 - x) * (1 - x); }
    static double g1(double x) { return 2 * x - 6 * x * x + 4 * x * x * x; }
    static double g2(double x) { return 2 - 12 * x + 12 * x * x; }
    static double g3(double x) { return -12 + 24 * x; }
  };
  ManufacturedCase c;
  c.id = "taylor";
  c.velocity = [](const Vec2& p) -> Vec2 {
    const double x = p.x(), y = p.y();
    const double s = std::sin(pi * y);
    return {pi * G::g0(x) * std::sin(2 * pi * y) + 1.0, -G::g1(x) * s * s + 1.0};
  };
  c.velocity_gradient = [](const Vec2& p) -> Mat2 {
    const double x = p.x(), y = p.y();
    const double s = std::sin(pi * y);
    Mat2 g;
    g << pi * G::g1(x) * std::sin(2 * pi * y), 2 * pi * pi * G::g0(x) * std::cos(2 * pi * y),
        -G::g2(x) * s * s, -pi * G::g1(x) * std::sin(2 * pi * y);
    return g;
  };
  c.velocity_laplacian = [](const Vec2& p) -> Vec2 {
    const double x = p.x(), y = p.y();
    const double s = std::sin(pi * y);
    const double s2 = std::sin(2 * pi * y);
    const double c2 = std::cos(2 * pi * y);
    return {pi * G::g2(x) * s2 - 4 * pi * pi * pi * G::g0(x) * s2,
            -G::g3(x) * s * s - 2 * pi * pi * G::g1(x) * c2};
  };
  const double shift = (std::cos(1.0) - 1.0) * std::sin(1.0);
  c.pressure = [shift](const Vec2& p) { return std::sin(p.x()) * std::cos(p.y()) + shift; };
  c.pressure_gradient = [](const Vec2& p) -> Vec2 {
    return {std::cos(p.x()) * std::cos(p.y()), -std::sin(p.x()) * std::sin(p.y())};
  };
  return c;
}

ManufacturedCase case_noflow(double rayleigh) {
  const double ra = rayleigh;
  ManufacturedCase c;
  c.id = "noflow";
  c.velocity = [](const Vec2&) -> Vec2 { return Vec2::Zero(); };
  c.velocity_gradient = [](const Vec2&) -> Mat2 { return Mat2::Zero(); };
  c.velocity_laplacian = [](const Vec2&) -> Vec2 { return Vec2::Zero(); };
  c.pressure = [ra](const Vec2& p) {
    const double y = p.y();
    return -0.5 * ra * y * y + ra * y - ra / 3.0;
  };
  c.pressure_gradient = [ra](const Vec2& p) -> Vec2 { return {0.0, -ra * p.y() + ra}; };
  return c;
}

ManufacturedCase case_trig() {
  ManufacturedCase c;
  c.id = "trig";
  c.velocity = [](const Vec2& p) -> Vec2 {
    const double ex = std::exp(p.x()), y = p.y();
    return {-ex * (y * std::cos(y) + std::sin(y)), ex * y * std::sin(y)};
  };
  c.velocity_gradient = [](const Vec2& p) -> Mat2 {
    const double ex = std::exp(p.x()), y = p.y();
    const double sy = std::sin(y), cy = std::cos(y);
    Mat2 g;
    g << -ex * (y * cy + sy), -ex * (2 * cy - y * sy),
        ex * y * sy, ex * (sy + y * cy);
    return g;
  };
  c.velocity_laplacian = [](const Vec2& p) -> Vec2 {
    const double ex = std::exp(p.x());
    return {2 * ex * std::sin(p.y()), 2 * ex * std::cos(p.y())};
  };
  // mean of 2 e^x sin y over the unit square
  const double mean = 2.0 * (std::exp(1.0) - 1.0) * (1.0 - std::cos(1.0));
  c.pressure = [mean](const Vec2& p) { return 2 * std::exp(p.x()) * std::sin(p.y()) - mean; };
  c.pressure_gradient = [](const Vec2& p) -> Vec2 {
    const double ex = std::exp(p.x());
    return {2 * ex * std::sin(p.y()), 2 * ex * std::cos(p.y())};
  };
  return c;
}

ManufacturedCase case_constant() {
  ManufacturedCase c;
  c.id = "constant";
  c.velocity = [](const Vec2&) -> Vec2 { return {3.0, -1.0}; };
  c.velocity_gradient = [](const Vec2&) -> Mat2 { return Mat2::Zero(); };
  c.velocity_laplacian = [](const Vec2&) -> Vec2 { return Vec2::Zero(); };
  c.pressure = [](const Vec2&) { return 0.0; };
  c.pressure_gradient = [](const Vec2&) -> Vec2 { return Vec2::Zero(); };
  return c;
}

ManufacturedCase case_by_name(const std::string& id) {
  if (id == "taylor") return case_taylor();
  if (id == "noflow") return case_noflow();
  if (id == "trig") return case_trig();
  if (id == "constant") return case_constant();
  throw std::invalid_argument("unknown case '" + id + "' (expected taylor, noflow, trig or constant)");
}

}  // namespace sdg
