#include "sdg/hdivrec.hpp"

#include <array>

#include "sdg/quadrature.hpp"
#include "sdg/wachspress.hpp"

namespace sdg {

RTBasis::RTBasis(Polygon polygon, const Vec2& split) : polygon_(std::move(polygon)), split_(split) {
  const int m = polygon_.size();
  if (!polygon_.contains_strictly(split_, wachspress::kBoundaryGuard * polygon_.diameter()))
    throw DomainError("RTBasis: split point must lie strictly inside the polygon");
  const double area = polygon_.area();
  sub_area_.resize(m);
  for (int l = 0; l < m; ++l) sub_area_[l] = triangle_area(split_, polygon_.vertex(l), polygon_.vertex(l + 1));

  c0_.resize(m);
  b_.resize(m, m);
  c_.resize(m, m);
  for (int i = 0; i < m; ++i) {
    c0_[i] = polygon_.edge_length(i) / (2.0 * area);
    for (int l = 0; l < m; ++l)
      b_(i, l) = (i == l ? polygon_.edge_length(l) : 0.0) - polygon_.edge_length(i) * sub_area_[l] / area;
  }
  // c_{i,k} = -(1/m) sum_{l=1}^{m-1} l b_{i,k+l}, second index taken mod m
  for (int i = 0; i < m; ++i) {
    for (int k = 0; k < m; ++k) {
      double s = 0.0;
      for (int l = 1; l < m; ++l) s += l * b_(i, (k + l) % m);
      c_(i, k) = -s / m;
    }
  }
}

std::vector<Vec2> RTBasis::eval_all(const Vec2& x) const {
  const int m = size();
  const auto grads = wachspress::gradients(polygon_, x);
  std::vector<Vec2> curl(m);
  for (int k = 0; k < m; ++k) curl[k] = rotate_ccw(grads[k]);
  std::vector<Vec2> out(m);
  for (int i = 0; i < m; ++i) {
    Vec2 v = c0_[i] * (x - split_);
    for (int k = 0; k < m; ++k) v += c_(i, k) * curl[k];
    out[i] = v;
  }
  return out;
}

Vec2 RTBasis::eval(int i, const Vec2& x) const { return eval_all(x)[i]; }

Eigen::VectorXd RTBasis::moments(const VectorField& f, int degree, int splits) const {
  const int m = size();
  const auto& rule = quadrature::triangle_rule(degree);
  auto integrand = [&](const Vec2& x) -> Eigen::VectorXd {
    const Vec2 fx = f(x);
    const auto phi = eval_all(x);
    Eigen::VectorXd r(m);
    for (int i = 0; i < m; ++i) r[i] = fx.dot(phi[i]);
    return r;
  };
  // On triangles the basis is linear; elsewhere the curl terms are rational and
  // each fan triangle is refined `splits` times by midpoint subdivision.
  const int levels = m == 3 ? 0 : splits;
  Eigen::VectorXd out = Eigen::VectorXd::Zero(m);
  std::vector<std::array<Vec2, 3>> pieces, next;
  for (int t = 0; t < m; ++t) {
    pieces.assign(1, {split_, polygon_.vertex(t), polygon_.vertex(t + 1)});
    for (int l = 0; l < levels; ++l) {
      next.clear();
      for (const auto& [a, b, c] : pieces) {
        const Vec2 ab = 0.5 * (a + b), bc = 0.5 * (b + c), ca = 0.5 * (c + a);
        next.push_back({a, ab, ca});
        next.push_back({ab, b, bc});
        next.push_back({ca, bc, c});
        next.push_back({bc, ca, ab});
      }
      pieces.swap(next);
    }
    for (const auto& [a, b, c] : pieces) out += quadrature::integrate_triangle(a, b, c, rule, integrand);
  }
  return out;
}

std::vector<double> edge_fluxes(const Polygon& poly, const VectorField& v, int points) {
  const auto& rule = quadrature::edge_rule(points);
  std::vector<double> r(poly.size());
  for (int i = 0; i < poly.size(); ++i) {
    const Vec2 n = poly.normal(i);
    r[i] = quadrature::integrate_segment(poly.vertex(i), poly.vertex(i + 1), rule,
                                         [&](const Vec2& x) { return v(x).dot(n); }) /
           poly.edge_length(i);
  }
  return r;
}

std::vector<double> edge_fluxes(const Polygon& poly, std::span<const Vec2> edge_values) {
  std::vector<double> r(poly.size());
  for (int i = 0; i < poly.size(); ++i) r[i] = edge_values[i].dot(poly.normal(i));
  return r;
}

Reconstruction::Reconstruction(const RTBasis& basis, std::vector<double> fluxes)
    : basis_(&basis), fluxes_(std::move(fluxes)) {}

Vec2 Reconstruction::operator()(const Vec2& x) const {
  const auto phi = basis_->eval_all(x);
  Vec2 v = Vec2::Zero();
  for (std::size_t i = 0; i < phi.size(); ++i) v += fluxes_[i] * phi[i];
  return v;
}

double Reconstruction::divergence() const {
  double d = 0.0;
  for (int i = 0; i < basis_->size(); ++i) d += fluxes_[i] * basis_->divergence(i);
  return d;
}

}  // namespace sdg
