#ifndef ENTROPYLAB_REFERENCE_DENSITIES_HPP
#define ENTROPYLAB_REFERENCE_DENSITIES_HPP

#include <vector>

#include "entropylab/grid_density.hpp"
#include "entropylab/types.hpp"

// Closed-form unit-mass densities sampled onto grids. Line densities live
// on [center - half_width, center + half_width]; radial ones on [0, radius].
namespace entropylab {

// Isotropic Gaussian with variance sigma2 per coordinate, centered at 0.
// Requires half_width >= 6 standard deviations so the truncated tail mass
// is below quadrature accuracy.
GridDensity gaussian_line(Real sigma2, Real half_width, Index n, Real center = 0.0);
GridDensity gaussian_radial(Real sigma2, int dim, Real radius, Index n);

// Uniform density on [x0, x0 + width].
GridDensity uniform_line(Real x0, Real width, Index n);

// Equal-spacing mixture of Gaussians on a common grid.
struct MixtureComponent {
  Real weight;
  Real center;
  Real sigma2;
};
GridDensity gaussian_mixture_line(const std::vector<MixtureComponent>& parts,
                                  Real half_width, Index n);

// Source-type self-similar profile of the nonlinear diffusion of order
// p != 1 in dimension d at time t > 0 (for p > 1 compactly supported,
// for p in (1 - 2/d, 1) everywhere positive):
//
//   u(x, t) = t^(-alpha) (C - k |x|^2 t^(-2 beta))_+^(1/(p-1))
//   alpha = d / (d (p - 1) + 2),  beta = alpha / d,
//   k = alpha (p - 1) / (2 p d),
// with C fixed by the prescribed mass.
struct SelfSimilarProfile {
  Real p;
  int dim;
  Real mass;
  Real alpha;
  Real beta;
  Real k;
  Real big_c;

  SelfSimilarProfile(Real p, int dim, Real mass = 1.0);

  // Front radius at time t (infinity for p < 1).
  Real front_radius(Real t) const;
  // Pointwise profile value.
  Real value(Real r, Real t) const;
};

// Profile sampled on a radial grid. For p > 1 the grid must leave at
// least a 32-node margin beyond the front.
GridDensity self_similar_radial(Real p, int dim, Real t, Real radius, Index n,
                                Real mass = 1.0);
// Line version (d = 1) on [-half_width, half_width].
GridDensity self_similar_line(Real p, Real t, Real half_width, Index n,
                              Real mass = 1.0);

}  // namespace entropylab

#endif  // ENTROPYLAB_REFERENCE_DENSITIES_HPP
