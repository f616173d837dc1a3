#ifndef ENTROPYLAB_STENCILS_HPP
#define ENTROPYLAB_STENCILS_HPP

#include <stdexcept>

#include "entropylab/types.hpp"

// Finite-difference stencils on uniform node grids. Interior stencils are
// the standard second-order central ones; boundaries use second-order
// one-sided stencils. even_left treats the left end as a symmetry axis
// (ghost f[-1] = f[1]), which is the correct closure for radial profiles
// at r = 0.
namespace entropylab {

inline ArrayX gradient(const ArrayX& f, Real h, bool even_left = false) {
  const Index n = f.size();
  if (n < 4) throw std::invalid_argument("gradient: need at least 4 nodes");
  ArrayX g(n);
  g.segment(1, n - 2) = (f.tail(n - 2) - f.head(n - 2)) / (2.0 * h);
  g(0) = even_left ? 0.0 : (-3.0 * f(0) + 4.0 * f(1) - f(2)) / (2.0 * h);
  g(n - 1) = (3.0 * f(n - 1) - 4.0 * f(n - 2) + f(n - 3)) / (2.0 * h);
  return g;
}

inline ArrayX second_difference(const ArrayX& f, Real h, bool even_left = false) {
  const Index n = f.size();
  if (n < 4) throw std::invalid_argument("second_difference: need at least 4 nodes");
  const Real h2 = h * h;
  ArrayX s(n);
  s.segment(1, n - 2) =
      (f.tail(n - 2) - 2.0 * f.segment(1, n - 2) + f.head(n - 2)) / h2;
  s(0) = even_left ? 2.0 * (f(1) - f(0)) / h2
                   : (2.0 * f(0) - 5.0 * f(1) + 4.0 * f(2) - f(3)) / h2;
  s(n - 1) =
      (2.0 * f(n - 1) - 5.0 * f(n - 2) + 4.0 * f(n - 3) - f(n - 4)) / h2;
  return s;
}

}  // namespace entropylab

#endif  // ENTROPYLAB_STENCILS_HPP
