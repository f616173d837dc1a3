#ifndef ENTROPYLAB_GRID_DENSITY_HPP
#define ENTROPYLAB_GRID_DENSITY_HPP

#include <utility>

#include "entropylab/types.hpp"

namespace entropylab {

// Discrete geometry of the sample grid.
//
//  Line1D     nodes x_i = x0 + i h on the real line, dimension 1.
//  Radial     nodes r_i = i h, i = 0..n-1, representing a radially
//             symmetric density in dimension d; integrals carry the
//             surface weight omega_d r^(d-1).
enum class Geometry { Line1D, Radial };

// A nonnegative density sampled on a uniform grid, normalized to unit mass
// under its own trapezoid quadrature.
//
// Invariants established at construction:
//   - at least kMinNodes finite, nonnegative samples (negatives below
//     roundoff scale are clamped, anything worse throws);
//   - spacing h > 0; Radial grids start at r = 0; Line1D has d == 1;
//   - quadrature weights w_i are trapezoid weights times the measure
//     factor (1 on the line, omega_d r^(d-1) radially);
//   - sum(w * values) == 1 up to roundoff. The factor applied to reach
//     that is recorded (renormalization()).
//
// Functionals treat the weights as the definition of integration; node
// coordinates only matter to operations that move mass around (dilation,
// convolution, plotting).
class GridDensity {
 public:
  GridDensity(Geometry geometry, int dim, Real x0, Real h, ArrayX values);

  static GridDensity line(Real x0, Real h, ArrayX values) {
    return GridDensity(Geometry::Line1D, 1, x0, h, std::move(values));
  }
  static GridDensity radial(int dim, Real h, ArrayX values) {
    return GridDensity(Geometry::Radial, dim, 0.0, h, std::move(values));
  }

  Geometry geometry() const { return geometry_; }
  int dim() const { return dim_; }
  Real x0() const { return x0_; }
  Real spacing() const { return h_; }
  Index size() const { return values_.size(); }

  const ArrayX& values() const { return values_; }
  const ArrayX& weights() const { return weights_; }
  ArrayX nodes() const;

  // Factor the raw samples were multiplied by to reach unit mass.
  Real renormalization() const { return renorm_; }

  Real mass() const { return (weights_ * values_).sum(); }
  Real integrate(const ArrayX& integrand) const {
    return (weights_ * integrand).sum();
  }
  Real max_value() const { return values_.maxCoeff(); }

 private:
  Geometry geometry_;
  int dim_;
  Real x0_;
  Real h_;
  ArrayX values_;
  ArrayX weights_;
  Real renorm_;
};

// Surface area of the unit sphere in R^d: omega_d = 2 pi^(d/2) / Gamma(d/2).
Real sphere_surface(int dim);

// Trapezoid quadrature weights for the given geometry (measure included).
ArrayX quadrature_weights(Geometry geometry, int dim, Real h, Index n);

// Exact-resample dilation: X -> X/lambda at the density level,
// u_lambda(x) = lambda^d u(lambda x), realized by moving the nodes to
// x_i/lambda and scaling the values by lambda^d. Every discrete functional
// then transforms exactly as its continuum counterpart.
GridDensity dilate(const GridDensity& u, Real lambda);

// Shift a line density by c (nodes move, samples and weights do not).
GridDensity translate(const GridDensity& u, Real c);

// max(u, rel * max(u)), renormalized. Used to keep fast-diffusion flows
// away from the stiff u -> 0 regime; the flat pedestal is a steady state
// of the flow, so a monotone scheme preserves the floor for all time.
GridDensity apply_relative_floor(const GridDensity& u, Real rel);

}  // namespace entropylab

#endif  // ENTROPYLAB_GRID_DENSITY_HPP
