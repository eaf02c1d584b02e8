#pragma once

#include <functional>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "sdg/geometry.hpp"

namespace sdg {

/// Minimal-degree H(div) basis on a convex polygon:
///   phi_i = c_{i,0} (x - x*) + sum_k c_{i,k} curl(lambda_k),
/// with lambda_k the Wachspress coordinates. phi_i has unit mean normal flux
/// through edge e_i, zero through the others, and constant divergence 2 c_{i,0}.
class RTBasis {
public:
  RTBasis(Polygon polygon, const Vec2& split);

  const Polygon& polygon() const { return polygon_; }
  int size() const { return polygon_.size(); }
  const Vec2& split() const { return split_; }

  /// |T_l|: area of triangle (x*, v_l, v_{l+1}).
  double sub_area(int l) const { return sub_area_[l]; }
  double c0(int i) const { return c0_[i]; }
  double c(int i, int k) const { return c_(i, k); }
  double b(int i, int l) const { return b_(i, l); }

  Vec2 eval(int i, const Vec2& x) const;
  std::vector<Vec2> eval_all(const Vec2& x) const;
  double divergence(int i) const { return 2.0 * c0_[i]; }

  /// m-vector of integrals of f . phi_i over the polygon, using the triangle rule of
  /// the given degree on each fan triangle (x*, v_i, v_{i+1}), refined `splits`
  /// times into 4 when m > 3.
  Eigen::VectorXd moments(const VectorField& f, int degree = 8, int splits = 3) const;

private:
  Polygon polygon_;
  Vec2 split_;
  std::vector<double> sub_area_;
  std::vector<double> c0_;
  Eigen::MatrixXd b_;
  Eigen::MatrixXd c_;
};

/// Mean outward normal fluxes r_i = (1/|e_i|) int_{e_i} v . n_i ds of a smooth field
/// (Gauss rule with `points` nodes per edge).
std::vector<double> edge_fluxes(const Polygon& poly, const VectorField& v, int points = 8);

/// Fluxes of a field that is constant on each edge: r_i = values[i] . n_i.
std::vector<double> edge_fluxes(const Polygon& poly, std::span<const Vec2> edge_values);

/// Cell-local reconstruction sum_i r_i phi_i.
class Reconstruction {
public:
  Reconstruction(const RTBasis& basis, std::vector<double> fluxes);

  Vec2 operator()(const Vec2& x) const;
  double divergence() const;
  const std::vector<double>& fluxes() const { return fluxes_; }

private:
  const RTBasis* basis_;
  std::vector<double> fluxes_;
};

inline Reconstruction reconstruct(const RTBasis& basis, std::vector<double> fluxes) {
  return Reconstruction(basis, std::move(fluxes));
}

}  // namespace sdg
