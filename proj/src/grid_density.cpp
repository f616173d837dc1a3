#include "entropylab/grid_density.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace entropylab {

Real sphere_surface(int dim) {
  if (dim < 1) throw std::invalid_argument("sphere_surface: dim must be >= 1");
  const Real half = 0.5 * static_cast<Real>(dim);
  return 2.0 * std::pow(std::numbers::pi_v<Real>, half) / std::tgamma(half);
}

ArrayX quadrature_weights(Geometry geometry, int dim, Real h, Index n) {
  ArrayX w;
  if (geometry == Geometry::Line1D) {
    w = ArrayX::Constant(n, h);
  } else {
    const Real omega = sphere_surface(dim);
    ArrayX r = ArrayX::LinSpaced(n, 0.0, static_cast<Real>(n - 1) * h);
    w = dim == 1 ? ArrayX::Constant(n, omega * h)
                 : ArrayX(omega * h * r.pow(dim - 1));
  }
  w(0) *= 0.5;
  w(n - 1) *= 0.5;
  return w;
}

GridDensity::GridDensity(Geometry geometry, int dim, Real x0, Real h,
                         ArrayX values)
    : geometry_(geometry), dim_(dim), x0_(x0), h_(h),
      values_(std::move(values)) {
  if (values_.size() < config::kMinNodes)
    throw std::invalid_argument("GridDensity: need at least " +
                                std::to_string(config::kMinNodes) +
                                " nodes, got " + std::to_string(values_.size()));
  if (!(h_ > 0.0) || !std::isfinite(h_) || !std::isfinite(x0_))
    throw std::invalid_argument("GridDensity: spacing/origin must be finite, h > 0");
  if (geometry_ == Geometry::Line1D && dim_ != 1)
    throw std::invalid_argument("GridDensity: Line1D geometry implies d = 1");
  if (geometry_ == Geometry::Radial && dim_ < 1)
    throw std::invalid_argument("GridDensity: Radial geometry needs d >= 1");
  if (geometry_ == Geometry::Radial && x0_ != 0.0)
    throw std::invalid_argument("GridDensity: Radial grids must start at r = 0");
  if (!values_.isFinite().all())
    throw std::invalid_argument("GridDensity: samples must be finite");

  const Real vmax = values_.maxCoeff();
  if (!(vmax > 0.0))
    throw std::invalid_argument("GridDensity: density must be somewhere positive");
  const Real vmin = values_.minCoeff();
  if (vmin < 0.0) {
    // Roundoff-scale negatives are an accepted artifact of upstream
    // arithmetic; anything larger is a real sign error.
    if (vmin < -1e-12 * vmax)
      throw std::invalid_argument(
          "GridDensity: negative samples beyond roundoff scale (min = " +
          std::to_string(vmin) + ")");
    values_ = values_.max(0.0);
  }

  weights_ = quadrature_weights(geometry_, dim_, h_, values_.size());
  const Real raw_mass = (weights_ * values_).sum();
  if (!(raw_mass > 0.0) || !std::isfinite(raw_mass))
    throw std::invalid_argument("GridDensity: quadrature mass must be positive");
  renorm_ = 1.0 / raw_mass;
  values_ *= renorm_;
}

ArrayX GridDensity::nodes() const {
  const Index n = values_.size();
  return ArrayX::LinSpaced(n, x0_, x0_ + static_cast<Real>(n - 1) * h_);
}

GridDensity dilate(const GridDensity& u, Real lambda) {
  if (!(lambda > 0.0) || !std::isfinite(lambda))
    throw std::invalid_argument("dilate: lambda must be positive and finite");
  const Real scale = std::pow(lambda, u.dim());
  return GridDensity(u.geometry(), u.dim(), u.x0() / lambda,
                     u.spacing() / lambda, ArrayX(scale * u.values()));
}

GridDensity translate(const GridDensity& u, Real c) {
  if (u.geometry() != Geometry::Line1D)
    throw std::invalid_argument("translate: only line densities can be shifted");
  return GridDensity(Geometry::Line1D, 1, u.x0() + c, u.spacing(),
                     ArrayX(u.values()));
}

GridDensity apply_relative_floor(const GridDensity& u, Real rel) {
  if (!(rel >= 0.0) || rel >= 1.0)
    throw std::invalid_argument("apply_relative_floor: need 0 <= rel < 1");
  if (rel == 0.0) return u;
  return GridDensity(u.geometry(), u.dim(), u.x0(), u.spacing(),
                     ArrayX(u.values().max(rel * u.max_value())));
}

}  // namespace entropylab
